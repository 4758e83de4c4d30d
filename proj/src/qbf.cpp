#include "epimc/qbf.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "epimc/error.hpp"
#include "epimc/syntax.hpp"

namespace epimc {

namespace {

bool boolean_only(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Not:
      return boolean_only(f.operand());
    case FormulaKind::And:
      return boolean_only(f.lhs()) && boolean_only(f.rhs());
    default:
      return false;
  }
}

bool eval_matrix(const Formula& f, const std::map<std::string, bool>& assignment) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = assignment.find(f.name());
      return it != assignment.end() && it->second;
    }
    case FormulaKind::Not:
      return !eval_matrix(f.operand(), assignment);
    case FormulaKind::And:
      return eval_matrix(f.lhs(), assignment) && eval_matrix(f.rhs(), assignment);
    default:
      throw InputError("QBF matrix must be propositional");
  }
}

bool eval_from(const QbfInstance& q, std::size_t k, std::map<std::string, bool>& assignment) {
  if (k == q.variables.size()) return eval_matrix(q.matrix, assignment);
  const bool universal = q.quantifiers[k] == Quantifier::Forall;
  for (bool value : {false, true}) {
    assignment[q.variables[k]] = value;
    const bool result = eval_from(q, k + 1, assignment);
    if (universal && !result) return false;
    if (!universal && result) return true;
  }
  return universal;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sub) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = sub.find(f.name());
      return it == sub.end() ? f : it->second;
    }
    case FormulaKind::Not:
      return Formula::negation(substitute(f.operand(), sub));
    case FormulaKind::And:
      return Formula::conjunction(substitute(f.lhs(), sub), substitute(f.rhs(), sub));
    default:
      throw InputError("QBF matrix must be propositional");
  }
}

std::string p_atom(std::size_t i) { return "p" + std::to_string(i); }
std::string q_atom(std::size_t i) { return "q" + std::to_string(i); }

Formula possible_a(const std::string& atom) { return Formula::possible({"a"}, Formula::atom(atom)); }

}  // namespace

void validate(const QbfInstance& q) {
  if (q.variables.empty()) throw InputError("QBF needs at least one variable");
  if (q.variables.size() != q.quantifiers.size()) {
    throw InputError("QBF variables and quantifiers differ in length");
  }
  std::set<std::string> bound;
  for (const auto& v : q.variables) {
    if (v == kReservedAtom) throw InputError("'_' cannot be a QBF variable");
    if (!bound.insert(v).second) throw InputError("variable '" + v + "' is quantified twice");
  }
  if (!boolean_only(q.matrix)) throw InputError("QBF matrix must be propositional");
  for (const auto& atom : atoms_of(q.matrix)) {
    if (atom != kReservedAtom && bound.count(atom) == 0) {
      throw InputError("variable '" + atom + "' is not quantified");
    }
  }
}

QbfInstance parse_qbf(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SyntaxError("expected ':' before the matrix", text.size());

  QbfInstance q{{}, {}, Formula::top()};
  std::istringstream prefix{std::string(text.substr(0, colon))};
  std::string word;
  std::optional<Quantifier> current;
  while (prefix >> word) {
    if (word == "forall") {
      current = Quantifier::Forall;
    } else if (word == "exists") {
      current = Quantifier::Exists;
    } else if (!current) {
      throw SyntaxError("expected 'forall' or 'exists'", 0);
    } else {
      q.variables.push_back(word);
      q.quantifiers.push_back(*current);
    }
  }
  try {
    q.matrix = parse_formula(text.substr(colon + 1));
  } catch (const SyntaxError& e) {
    throw SyntaxError("bad QBF matrix", colon + 1 + e.position());
  }
  validate(q);
  return q;
}

std::string print_qbf(const QbfInstance& q) {
  std::string out;
  for (std::size_t k = 0; k < q.variables.size(); ++k) {
    out += (q.quantifiers[k] == Quantifier::Forall ? "forall " : "exists ") + q.variables[k] + " ";
  }
  return out + ": " + print_formula(q.matrix);
}

bool eval_qbf(const QbfInstance& q) {
  validate(q);
  std::map<std::string, bool> assignment;
  return eval_from(q, 0, assignment);
}

Formula chosen(std::size_t k, std::size_t n) {
  std::vector<Formula> parts;
  for (std::size_t i = 1; i <= n; ++i) {
    const Formula p = possible_a(p_atom(i));
    const Formula q = possible_a(q_atom(i));
    parts.push_back(i <= k ? Formula::iff(p, Formula::negation(q)) : Formula::conjunction(p, q));
  }
  return Formula::conjunction_of(parts);
}

QbfEncoding encode(const QbfInstance& q) {
  validate(q);
  const std::size_t n = q.variables.size();

  ModelDescription desc;
  desc.agents = {"a", "b"};
  desc.worlds.push_back("w0");
  desc.valuation["w0"] = {};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string one = "w" + std::to_string(i) + "_1";
    const std::string zero = "w" + std::to_string(i) + "_0";
    desc.worlds.push_back(one);
    desc.worlds.push_back(zero);
    desc.valuation[one] = {p_atom(i)};
    desc.valuation[zero] = {q_atom(i)};
    desc.relations["a"].emplace_back("w0", one);
    desc.relations["a"].emplace_back("w0", zero);
  }
  desc.relations["b"];
  desc.reflexive_closure = true;
  desc.symmetric_closure = true;
  KripkeModel model = KripkeModel::from_description(desc);

  std::map<std::string, Formula> sub;
  for (std::size_t i = 1; i <= n; ++i) sub.emplace(q.variables[i - 1], possible_a(p_atom(i)));

  // θ_n is the matrix over K̂_a p_i; θ_{k-1} quantifies the k-th variable over θ_k.
  Formula theta = substitute(q.matrix, sub);
  const AgentSet everyone{"a", "b"};
  for (std::size_t k = n; k >= 1; --k) {
    const Formula guard = chosen(k, n);
    theta = q.quantifiers[k - 1] == Quantifier::Forall
                ? Formula::arbitrary_comm(everyone, Formula::implies(guard, theta))
                : Formula::arbitrary_comm_diamond(everyone, Formula::conjunction(guard, theta));
  }
  return {PointedModel(std::move(model), WorldId{0}), theta};
}

}  // namespace epimc
