#include "epimc/semantics.hpp"

#include <unordered_map>

#include "epimc/error.hpp"
#include "epimc/updates.hpp"

namespace epimc {

namespace {

// Truth sets within one model. Results are cached per AST node so that
// formulas sharing subterms (translator output) are not re-evaluated.
class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m) {}

  WorldSet truthset(const Formula& f) {
    if (auto it = cache_.find(f.id()); it != cache_.end()) return it->second;
    WorldSet result = compute(f);
    cache_.emplace(f.id(), result);
    return result;
  }

 private:
  WorldSet compute(const Formula& f) {
    const std::size_t n = m_.world_count();
    switch (f.kind()) {
      case FormulaKind::Atom: {
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) out.assign(w, m_.holds(w, f.name()));
        return out;
      }
      case FormulaKind::Not: {
        const WorldSet inner = truthset(f.operand());
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) out.assign(w, !inner.test(w));
        return out;
      }
      case FormulaKind::And: {
        const WorldSet l = truthset(f.lhs());
        const WorldSet r = truthset(f.rhs());
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) out.assign(w, l.test(w) && r.test(w));
        return out;
      }
      case FormulaKind::Distributed: {
        const std::vector<std::size_t> group = m_.agent_indices(f.group());
        const WorldSet body = truthset(f.body());
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) {
          bool all = true;
          for (WorldId u = 0; u < n && all; ++u) {
            bool edge = true;
            for (std::size_t i : group) edge = edge && m_.relation(i).test(w, u);
            if (edge && !body.test(u)) all = false;
          }
          out.assign(w, all);
        }
        return out;
      }
      case FormulaKind::PartialComm: {
        const KripkeModel updated = partial_comm_update(m_, f.group(), truthset(f.topic()));
        return Evaluator(updated).truthset(f.body());
      }
      case FormulaKind::PubAnn: {
        const WorldSet topic = truthset(f.topic());
        const KripkeModel updated = pa_edge_update(m_, topic);
        const WorldSet body = Evaluator(updated).truthset(f.body());
        WorldSet out(n);
        for (WorldId w = 0; w < n; ++w) out.assign(w, !topic.test(w) || body.test(w));
        return out;
      }
      case FormulaKind::ArbPartialComm:
      case FormulaKind::ArbPubAnn:
        throw UnsupportedFragment("the reference evaluator does not handle quantified modalities");
    }
    throw UnsupportedFragment("unknown formula kind");
  }

  const KripkeModel& m_;
  std::unordered_map<const void*, WorldSet> cache_;
};

}  // namespace

bool eval(const PointedModel& pm, const Formula& f) {
  return Evaluator(pm.model).truthset(f).test(pm.point);
}

WorldSet truthset(const KripkeModel& m, const Formula& f) { return Evaluator(m).truthset(f); }

bool valid_on_model(const KripkeModel& m, const Formula& f) { return truthset(m, f).all(); }

}  // namespace epimc
