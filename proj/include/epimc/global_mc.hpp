#pragma once

// Global labelling checker for formulas with partial communication (and,
// as an extension, edge-deleting announcements). Runs in time polynomial in
// the model and the formula.

#include <map>
#include <vector>

#include "epimc/formula.hpp"
#include "epimc/model.hpp"
#include "epimc/subformulas.hpp"

namespace epimc {

struct Labelling {
  std::vector<LabelledSubformula> order;
  // world_labels[k]: worlds labelled with order[k]; unused for symbols.
  std::vector<WorldSet> world_labels;
  // Per label σ, per agent: the edges of R_i that survive the updates in σ.
  std::map<Label, std::vector<Relation>> edge_labels;
};

// Throws UnsupportedFragment for quantified modalities and InputError for
// agents outside the model.
Labelling global_labelling(const KripkeModel& m, const Formula& f);
WorldSet global_mc(const KripkeModel& m, const Formula& f);

}  // namespace epimc
