#pragma once

// Formula AST shared by every language layer.
//
// Core constructors only; the derived connectives (or, implies, iff, K_i,
// diamonds, true/false) expand into them. `true` is ~(_ & ~_) and `false` is
// (_ & ~_) over the reserved atom `_`, which never has a non-empty extension
// in well-formed fixtures.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "epimc/model.hpp"

namespace epimc {

enum class FormulaKind {
  Atom,
  Not,
  And,
  Distributed,    // D_G φ
  PartialComm,    // [S!χ]φ
  ArbPartialComm, // [*S]φ
  PubAnn,         // [ξ!]φ
  ArbPubAnn,      // [!*]φ
};

inline constexpr const char* kReservedAtom = "_";

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  // Throws InputError for an empty group.
  static Formula distributed(AgentSet group, Formula body);
  static Formula partial_comm(AgentSet group, Formula topic, Formula body);
  static Formula arbitrary_comm(AgentSet group, Formula body);
  static Formula announcement(Formula topic, Formula body);
  static Formula arbitrary_announcement(Formula body);

  static Formula top();
  static Formula bottom();
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula knows(std::string agent, Formula body);
  static Formula possible(AgentSet group, Formula body);  // ¬D_G¬φ
  static Formula comm_diamond(AgentSet group, Formula topic, Formula body);
  static Formula arbitrary_comm_diamond(AgentSet group, Formula body);
  static Formula announcement_diamond(Formula topic, Formula body);
  static Formula arbitrary_announcement_diamond(Formula body);
  static Formula conjunction_of(const std::vector<Formula>& parts);  // ⊤ when empty
  static Formula disjunction_of(const std::vector<Formula>& parts);  // ⊥ when empty

  FormulaKind kind() const noexcept;
  const std::string& name() const;   // Atom
  const AgentSet& group() const;     // Distributed, PartialComm, ArbPartialComm
  const Formula& operand() const;    // Not
  const Formula& lhs() const;        // And
  const Formula& rhs() const;        // And
  const Formula& topic() const;      // PartialComm, PubAnn
  const Formula& body() const;       // Distributed and every update modality

  // Identity of the shared node; equal pointers imply structural equality.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Formula& a, const Formula& b);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  AgentSet group;
  std::vector<Formula> children;  // PartialComm/PubAnn: {topic, body}
};

// |p| = 1, |¬φ| = |D_G φ| = |φ|+1, |φ∧ψ| = |φ|+|ψ|+1, |[S!χ]φ| = |[χ!]φ| = |χ|+|φ|+1,
// |[*S]φ| = |[!*]φ| = |φ|+1.
std::size_t formula_size(const Formula& f);

// Modal nesting of update and knowledge operators, used by generators.
std::size_t formula_depth(const Formula& f);

bool contains_kind(const Formula& f, FormulaKind kind);
bool is_basic(const Formula& f);        // L_D: atoms, booleans, D
bool is_quantifier_free(const Formula& f);
AtomSet atoms_of(const Formula& f);
AgentSet agents_of(const Formula& f);

}  // namespace epimc
