#pragma once

// Prenex QBF instances, a brute-force evaluator, and the encoding of a QBF as
// a pointed model plus a formula with arbitrary partial communication.
//
// Text format: `forall x1 exists x2 : (x1 <-> x2)`. A quantifier keyword may
// bind several variables; the matrix uses the formula grammar without modal
// operators.

#include <string>
#include <string_view>
#include <vector>

#include "epimc/formula.hpp"
#include "epimc/model.hpp"

namespace epimc {

enum class Quantifier { Forall, Exists };

struct QbfInstance {
  std::vector<std::string> variables;
  std::vector<Quantifier> quantifiers;
  Formula matrix;
};

// Throws InputError: no variables, repeated or unbound variables, modal matrix.
void validate(const QbfInstance& q);

// Throws SyntaxError or InputError.
QbfInstance parse_qbf(std::string_view text);
std::string print_qbf(const QbfInstance& q);

bool eval_qbf(const QbfInstance& q);

struct QbfEncoding {
  PointedModel model;
  Formula formula;
};

// Worlds w0 and, per variable i, wi_1 (atom pi) and wi_0 (atom qi).
QbfEncoding encode(const QbfInstance& q);

// ⋀_{i≤k} (K̂_a p_i ↔ ¬K̂_a q_i) ∧ ⋀_{k<i≤n} (K̂_a p_i ∧ K̂_a q_i)
Formula chosen(std::size_t k, std::size_t n);

}  // namespace epimc
