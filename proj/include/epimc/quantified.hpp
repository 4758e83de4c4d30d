#pragma once

// Pointed recursive checker for the full language, including arbitrary
// partial communication [*S] and arbitrary announcement [!*]. Quantifiers
// range over the bisimulation-closed bipartitions of the current model, each
// restriction is built, checked and dropped before the next.

#include <cstdint>
#include <optional>

#include "epimc/bisim.hpp"
#include "epimc/formula.hpp"
#include "epimc/model.hpp"

namespace epimc {

// The S-definable restrictions of a model: one partial-communication update
// per union `a` of bisimulation classes, taking one set from each {a, W∖a}
// pair (the one holding the first world in name order).
class RestrictionEnumeration {
 public:
  RestrictionEnumeration(const KripkeModel& base, AgentSet group);

  const KripkeModel& base() const noexcept { return base_; }
  const AgentSet& group() const noexcept { return group_; }
  const Partition& classes() const noexcept { return classes_; }

  std::uint64_t size() const noexcept { return count_; }
  // The index-th bipartition; index size()-1 is the whole domain.
  WorldSet bipartition(std::uint64_t index) const;
  KripkeModel restriction(std::uint64_t index) const;

 private:
  KripkeModel base_;
  AgentSet group_;
  Partition classes_;
  std::size_t anchor_ = 0;            // block always on the true side
  std::vector<std::size_t> free_;     // the other blocks
  std::uint64_t count_ = 0;
};

RestrictionEnumeration enumerate_restrictions(const KripkeModel& m, const AgentSet& group);

// Throws InputError for unknown agents.
bool check_quantified(const PointedModel& pm, const Formula& f);
WorldSet quantified_truthset(const KripkeModel& m, const Formula& f);

// A bipartition `a` with check_quantified((partial_comm_update(m, S, a), w), body),
// i.e. a witness for <*S>body at (m, w).
std::optional<WorldSet> find_comm_witness(const PointedModel& pm, const AgentSet& group,
                                          const Formula& body);

}  // namespace epimc
