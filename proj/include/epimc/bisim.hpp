#pragma once

// Collective bisimulation: the coarsest partition that agrees on a set of
// atoms and is stable under R_{D,G} for every non-empty group G.

#include <optional>
#include <utility>
#include <vector>

#include "epimc/formula.hpp"
#include "epimc/model.hpp"

namespace epimc {

struct Partition {
  std::vector<WorldSet> blocks;       // ordered by least member
  std::vector<std::size_t> block_of;  // world → block index

  std::size_t size() const noexcept { return blocks.size(); }
  bool same_block(WorldId x, WorldId y) const { return block_of[x] == block_of[y]; }
  // Whether `s` is a union of blocks.
  bool is_closed(const WorldSet& s) const;
};

// `atoms` defaults to the atoms with non-empty extension in `m`.
Partition bisim_classes(const KripkeModel& m, const std::optional<AtomSet>& atoms = std::nullopt);

bool is_bisimilar(const PointedModel& left, const PointedModel& right,
                  const std::optional<AtomSet>& atoms = std::nullopt);

// One world per class (named after its least member), each agent's relation
// lifted existentially, valuation restricted to `atoms`.
KripkeModel quotient(const KripkeModel& m, const std::optional<AtomSet>& atoms = std::nullopt);

// A basic formula over `atoms` true at w and false at v. Throws
// NoDistinguisher when the worlds are bisimilar.
Formula distinguishing_formula(const KripkeModel& m, WorldId w, WorldId v,
                               const std::optional<AtomSet>& atoms = std::nullopt);

// A basic formula whose truth set in `m` is exactly `a`. Throws ClosureError
// when `a` is not a union of classes.
Formula characteristic_topic(const KripkeModel& m, const WorldSet& a);

// Checks Atoms, Forth and Back for every pair and every non-empty group,
// against the agents of both models. World pairs index (left, right).
bool is_collective_bisimulation(const KripkeModel& left, const KripkeModel& right,
                                const std::vector<std::pair<WorldId, WorldId>>& pairs,
                                const std::optional<AtomSet>& atoms = std::nullopt);

}  // namespace epimc
