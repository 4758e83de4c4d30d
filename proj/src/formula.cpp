#include "epimc/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "epimc/error.hpp"

namespace epimc {

namespace {

Formula reserved() { return Formula::atom(kReservedAtom); }

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, std::move(name), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::And, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::distributed(AgentSet group, Formula body) {
  if (group.empty()) throw InputError("distributed knowledge needs a non-empty group");
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Distributed, {}, std::move(group), {std::move(body)}}));
}

Formula Formula::partial_comm(AgentSet group, Formula topic, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::PartialComm, {}, std::move(group), {std::move(topic), std::move(body)}}));
}

Formula Formula::arbitrary_comm(AgentSet group, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::ArbPartialComm, {}, std::move(group), {std::move(body)}}));
}

Formula Formula::announcement(Formula topic, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::PubAnn, {}, {}, {std::move(topic), std::move(body)}}));
}

Formula Formula::arbitrary_announcement(Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{FormulaKind::ArbPubAnn, {}, {}, {std::move(body)}}));
}

Formula Formula::top() { return negation(bottom()); }

Formula Formula::bottom() { return conjunction(reserved(), negation(reserved())); }

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conjunction(implies(lhs, rhs), implies(rhs, lhs));
}

Formula Formula::knows(std::string agent, Formula body) {
  return distributed(AgentSet{std::move(agent)}, std::move(body));
}

Formula Formula::possible(AgentSet group, Formula body) {
  return negation(distributed(std::move(group), negation(std::move(body))));
}

Formula Formula::comm_diamond(AgentSet group, Formula topic, Formula body) {
  return negation(partial_comm(std::move(group), std::move(topic), negation(std::move(body))));
}

Formula Formula::arbitrary_comm_diamond(AgentSet group, Formula body) {
  return negation(arbitrary_comm(std::move(group), negation(std::move(body))));
}

Formula Formula::announcement_diamond(Formula topic, Formula body) {
  return negation(announcement(std::move(topic), negation(std::move(body))));
}

Formula Formula::arbitrary_announcement_diamond(Formula body) {
  return negation(arbitrary_announcement(negation(std::move(body))));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = conjunction(out, parts[k]);
  return out;
}

Formula Formula::disjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) return bottom();
  Formula out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = disjunction(out, parts[k]);
  return out;
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const AgentSet& Formula::group() const { return node_->group; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const Formula& Formula::topic() const { return node_->children.at(0); }

const Formula& Formula::body() const {
  switch (node_->kind) {
    case FormulaKind::PartialComm:
    case FormulaKind::PubAnn:
      return node_->children.at(1);
    default:
      return node_->children.at(0);
  }
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (int c = x.name.compare(y.name); c != 0) return c < 0 ? -1 : 1;
  if (x.group != y.group) return x.group < y.group ? -1 : 1;
  for (std::size_t k = 0; k < x.children.size(); ++k) {
    if (int c = compare(x.children[k], y.children[k]); c != 0) return c;
  }
  return 0;
}

bool operator==(const Formula& a, const Formula& b) { return Formula::compare(a, b) == 0; }
bool operator<(const Formula& a, const Formula& b) { return Formula::compare(a, b) < 0; }

std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return 1;
    case FormulaKind::Not:
      return formula_size(f.operand()) + 1;
    case FormulaKind::And:
      return formula_size(f.lhs()) + formula_size(f.rhs()) + 1;
    case FormulaKind::Distributed:
    case FormulaKind::ArbPartialComm:
    case FormulaKind::ArbPubAnn:
      return formula_size(f.body()) + 1;
    case FormulaKind::PartialComm:
    case FormulaKind::PubAnn:
      return formula_size(f.topic()) + formula_size(f.body()) + 1;
  }
  return 0;
}

std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return 0;
    case FormulaKind::Not:
      return formula_depth(f.operand());
    case FormulaKind::And:
      return std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
    case FormulaKind::Distributed:
    case FormulaKind::ArbPartialComm:
    case FormulaKind::ArbPubAnn:
      return formula_depth(f.body()) + 1;
    case FormulaKind::PartialComm:
    case FormulaKind::PubAnn:
      return std::max(formula_depth(f.topic()), formula_depth(f.body())) + 1;
  }
  return 0;
}

namespace {

// Visits every distinct node once; formulas produced by the translator or
// the characteristic-formula builder share subterms heavily.
void visit_nodes(const Formula& root, const std::function<void(const Formula&)>& fn) {
  std::unordered_map<const void*, bool> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (!seen.emplace(f.id(), true).second) return;
    fn(f);
    switch (f.kind()) {
      case FormulaKind::Atom:
        break;
      case FormulaKind::Not:
        walk(f.operand());
        break;
      case FormulaKind::And:
        walk(f.lhs());
        walk(f.rhs());
        break;
      case FormulaKind::PartialComm:
      case FormulaKind::PubAnn:
        walk(f.topic());
        walk(f.body());
        break;
      default:
        walk(f.body());
        break;
    }
  };
  walk(root);
}

}  // namespace

bool contains_kind(const Formula& f, FormulaKind kind) {
  bool found = false;
  visit_nodes(f, [&](const Formula& g) { found = found || g.kind() == kind; });
  return found;
}

bool is_basic(const Formula& f) {
  bool basic = true;
  visit_nodes(f, [&](const Formula& g) {
    basic = basic && (g.kind() == FormulaKind::Atom || g.kind() == FormulaKind::Not ||
                      g.kind() == FormulaKind::And || g.kind() == FormulaKind::Distributed);
  });
  return basic;
}

bool is_quantifier_free(const Formula& f) {
  return !contains_kind(f, FormulaKind::ArbPartialComm) && !contains_kind(f, FormulaKind::ArbPubAnn);
}

AtomSet atoms_of(const Formula& f) {
  AtomSet out;
  visit_nodes(f, [&](const Formula& g) {
    if (g.kind() == FormulaKind::Atom) out.insert(g.name());
  });
  return out;
}

AgentSet agents_of(const Formula& f) {
  AgentSet out;
  visit_nodes(f, [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::Distributed:
      case FormulaKind::PartialComm:
      case FormulaKind::ArbPartialComm:
        out.insert(g.group().begin(), g.group().end());
        break;
      default:
        break;
    }
  });
  return out;
}

}  // namespace epimc
