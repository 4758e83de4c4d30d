#pragma once

// Reference evaluator: a direct reading of the satisfaction relation, used as
// the oracle for the labelling checker and the translators. Updates are
// materialised as fresh models. Quantified modalities are rejected; see
// quantified.hpp.

#include "epimc/formula.hpp"
#include "epimc/model.hpp"

namespace epimc {

// Throws InputError for agents outside the model and UnsupportedFragment for
// [*S] and [!*].
bool eval(const PointedModel& pm, const Formula& f);
WorldSet truthset(const KripkeModel& m, const Formula& f);
bool valid_on_model(const KripkeModel& m, const Formula& f);

}  // namespace epimc
