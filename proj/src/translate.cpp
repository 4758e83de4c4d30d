#include "epimc/translate.hpp"

#include <map>
#include <tuple>

#include "epimc/error.hpp"

namespace epimc {

namespace {

class Translator {
 public:
  Formula run(const Formula& f) {
    if (auto it = done_.find(f.id()); it != done_.end()) return it->second;
    Formula out = rewrite(f);
    done_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula rewrite(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        return f;
      case FormulaKind::Not:
        return Formula::negation(run(f.operand()));
      case FormulaKind::And:
        return Formula::conjunction(run(f.lhs()), run(f.rhs()));
      case FormulaKind::Distributed:
        return Formula::distributed(f.group(), run(f.body()));
      case FormulaKind::PartialComm:
        return push_comm(f.group(), run(f.topic()), run(f.body()));
      case FormulaKind::PubAnn:
        return push_ann(run(f.topic()), run(f.body()));
      case FormulaKind::ArbPartialComm:
      case FormulaKind::ArbPubAnn:
        break;
    }
    throw UnsupportedFragment("quantified modalities have no reduction axioms");
  }

  // [S!χ]φ for modality-free χ and φ.
  Formula push_comm(const AgentSet& s, const Formula& topic, const Formula& f) {
    const auto key = std::make_tuple(s, topic.id(), f.id());
    if (auto it = comm_.find(key); it != comm_.end()) return it->second;
    Formula out = [&] {
      switch (f.kind()) {
        case FormulaKind::Atom:
          return f;
        case FormulaKind::Not:
          return Formula::negation(push_comm(s, topic, f.operand()));
        case FormulaKind::And:
          return Formula::conjunction(push_comm(s, topic, f.lhs()), push_comm(s, topic, f.rhs()));
        case FormulaKind::Distributed: {
          const Formula inner = push_comm(s, topic, f.body());
          AgentSet joint = s;
          joint.insert(f.group().begin(), f.group().end());
          return Formula::conjunction(Formula::distributed(std::move(joint), inner),
                                      dgr(f.group(), topic, inner));
        }
        default:
          throw Error("translation reached a non-basic formula");
      }
    }();
    comm_.emplace(key, out);
    return out;
  }

  // [ξ!]φ for modality-free ξ and φ.
  Formula push_ann(const Formula& topic, const Formula& f) {
    const auto key = std::make_pair(topic.id(), f.id());
    if (auto it = ann_.find(key); it != ann_.end()) return it->second;
    Formula out = [&] {
      switch (f.kind()) {
        case FormulaKind::Atom:
          return Formula::implies(topic, f);
        case FormulaKind::Not:
          return Formula::implies(topic, Formula::negation(push_ann(topic, f.operand())));
        case FormulaKind::And:
          return Formula::conjunction(push_ann(topic, f.lhs()), push_ann(topic, f.rhs()));
        case FormulaKind::Distributed:
          return Formula::implies(topic, Formula::distributed(f.group(), push_ann(topic, f.body())));
        default:
          throw Error("translation reached a non-basic formula");
      }
    }();
    ann_.emplace(key, out);
    return out;
  }

  // Keys are node addresses of formulas that stay reachable from the values.
  std::map<const void*, Formula> done_;
  std::map<std::tuple<AgentSet, const void*, const void*>, Formula> comm_;
  std::map<std::pair<const void*, const void*>, Formula> ann_;
};

}  // namespace

Formula dgr(const AgentSet& group, const Formula& topic, const Formula& body) {
  if (group.empty()) throw InputError("dgr needs a non-empty group");
  const Formula neg = Formula::negation(topic);
  return Formula::conjunction(
      Formula::implies(topic, Formula::distributed(group, Formula::implies(topic, body))),
      Formula::implies(neg, Formula::distributed(group, Formula::implies(neg, body))));
}

Formula translate_pc(const Formula& f) {
  if (contains_kind(f, FormulaKind::PubAnn)) {
    throw UnsupportedFragment("translate_pc does not accept announcements");
  }
  return translate(f);
}

Formula translate_pa(const Formula& f) {
  if (contains_kind(f, FormulaKind::PartialComm)) {
    throw UnsupportedFragment("translate_pa does not accept partial communication");
  }
  return translate(f);
}

Formula translate(const Formula& f) { return Translator().run(f); }

}  // namespace epimc
