#include "epimc/quantified.hpp"

#include <memory>
#include <unordered_map>

#include "epimc/error.hpp"
#include "epimc/updates.hpp"

namespace epimc {

RestrictionEnumeration::RestrictionEnumeration(const KripkeModel& base, AgentSet group)
    : base_(base), group_(std::move(group)), classes_(bisim_classes(base_)) {
  base_.agent_indices(group_);  // validates the group

  WorldId least = 0;
  for (WorldId w = 1; w < base_.world_count(); ++w) {
    if (base_.world_name(w) < base_.world_name(least)) least = w;
  }
  anchor_ = classes_.block_of[least];
  for (std::size_t b = 0; b < classes_.size(); ++b) {
    if (b != anchor_) free_.push_back(b);
  }
  if (free_.size() >= 63) throw InputError("too many bisimulation classes to enumerate");
  count_ = std::uint64_t{1} << free_.size();
}

WorldSet RestrictionEnumeration::bipartition(std::uint64_t index) const {
  WorldSet a = classes_.blocks[anchor_];
  for (std::size_t j = 0; j < free_.size(); ++j) {
    if (index & (std::uint64_t{1} << j)) a |= classes_.blocks[free_[j]];
  }
  return a;
}

KripkeModel RestrictionEnumeration::restriction(std::uint64_t index) const {
  return partial_comm_update(base_, group_, bipartition(index));
}

RestrictionEnumeration enumerate_restrictions(const KripkeModel& m, const AgentSet& group) {
  return RestrictionEnumeration(m, group);
}

namespace {

// Evaluation state for one model: per-node, per-world results and the
// updated models reached through [S!χ] and [ξ!] nodes. Quantifier
// restrictions get a fresh context that is dropped once checked.
class Context {
 public:
  explicit Context(KripkeModel m) : m_(std::move(m)) {}

  bool holds(const Formula& f, WorldId w) {
    Entry& entry = cache_.try_emplace(f.id(), m_.world_count()).first->second;
    if (entry.known.test(w)) return entry.value.test(w);
    const bool result = compute(f, w);
    // compute() may have rehashed the cache.
    Entry& again = cache_.at(f.id());
    again.known.set(w);
    again.value.assign(w, result);
    return result;
  }

  WorldSet truthset(const Formula& f) {
    WorldSet out(m_.world_count());
    for (WorldId w = 0; w < m_.world_count(); ++w) out.assign(w, holds(f, w));
    return out;
  }

  const KripkeModel& model() const { return m_; }

 private:
  struct Entry {
    explicit Entry(std::size_t n) : known(n), value(n) {}
    WorldSet known;
    WorldSet value;
  };

  bool compute(const Formula& f, WorldId w) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        return m_.holds(w, f.name());
      case FormulaKind::Not:
        return !holds(f.operand(), w);
      case FormulaKind::And:
        return holds(f.lhs(), w) && holds(f.rhs(), w);
      case FormulaKind::Distributed: {
        const std::vector<std::size_t> group = m_.agent_indices(f.group());
        for (WorldId u = 0; u < m_.world_count(); ++u) {
          bool edge = true;
          for (std::size_t i : group) edge = edge && m_.relation(i).test(w, u);
          if (edge && !holds(f.body(), u)) return false;
        }
        return true;
      }
      case FormulaKind::PartialComm:
        return updated(f).holds(f.body(), w);
      case FormulaKind::PubAnn:
        return !holds(f.topic(), w) || updated(f).holds(f.body(), w);
      case FormulaKind::ArbPartialComm: {
        const RestrictionEnumeration restrictions(m_, f.group());
        for (std::uint64_t k = 0; k < restrictions.size(); ++k) {
          Context sub(restrictions.restriction(k));
          if (!sub.holds(f.body(), w)) return false;
        }
        return true;
      }
      case FormulaKind::ArbPubAnn: {
        const Partition& p = classes();
        const std::size_t own = p.block_of[w];
        std::vector<std::size_t> others;
        for (std::size_t b = 0; b < p.size(); ++b) {
          if (b != own) others.push_back(b);
        }
        if (others.size() >= 63) throw InputError("too many bisimulation classes to enumerate");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
          WorldSet a = p.blocks[own];
          for (std::size_t j = 0; j < others.size(); ++j) {
            if (mask & (std::uint64_t{1} << j)) a |= p.blocks[others[j]];
          }
          Context sub(pa_edge_update(m_, a));
          if (!sub.holds(f.body(), w)) return false;
        }
        return true;
      }
    }
    throw UnsupportedFragment("unknown formula kind");
  }

  Context& updated(const Formula& f) {
    auto it = children_.find(f.id());
    if (it == children_.end()) {
      const WorldSet topic = truthset(f.topic());
      KripkeModel next = f.kind() == FormulaKind::PartialComm
                             ? partial_comm_update(m_, f.group(), topic)
                             : pa_edge_update(m_, topic);
      it = children_.emplace(f.id(), std::make_unique<Context>(std::move(next))).first;
    }
    return *it->second;
  }

  const Partition& classes() {
    if (!classes_) classes_ = bisim_classes(m_);
    return *classes_;
  }

  KripkeModel m_;
  std::unordered_map<const void*, Entry> cache_;
  std::unordered_map<const void*, std::unique_ptr<Context>> children_;
  std::optional<Partition> classes_;
};

}  // namespace

bool check_quantified(const PointedModel& pm, const Formula& f) {
  return Context(pm.model).holds(f, pm.point);
}

WorldSet quantified_truthset(const KripkeModel& m, const Formula& f) {
  return Context(m).truthset(f);
}

std::optional<WorldSet> find_comm_witness(const PointedModel& pm, const AgentSet& group,
                                          const Formula& body) {
  const RestrictionEnumeration restrictions(pm.model, group);
  for (std::uint64_t k = 0; k < restrictions.size(); ++k) {
    Context sub(restrictions.restriction(k));
    if (sub.holds(body, pm.point)) return restrictions.bipartition(k);
  }
  return std::nullopt;
}

}  // namespace epimc
