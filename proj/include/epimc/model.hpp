#pragma once

// Finite multi-agent relational models.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epimc/bitset.hpp"

namespace epimc {

using AgentSet = std::set<std::string>;
using AtomSet = std::set<std::string>;

// Unvalidated, name-based form of a model as read from JSON or built by hand.
struct ModelDescription {
  std::vector<std::string> agents;
  std::vector<std::string> worlds;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  std::map<std::string, std::vector<std::string>> valuation;
  std::optional<std::string> point;
  bool reflexive_closure = false;
  bool symmetric_closure = false;
};

// Every invariant violation in `desc`; empty when the description is well formed.
std::vector<std::string> validate(const ModelDescription& desc);

// Worlds keep their declaration order; agents are kept sorted. Immutable once
// built: updates produce fresh models that reuse the world identifiers.
class KripkeModel {
 public:
  // Throws InputError listing every violation.
  static KripkeModel from_description(const ModelDescription& desc);

  KripkeModel(std::vector<std::string> worlds, std::vector<std::string> agents,
              std::vector<Relation> relations, std::vector<AtomSet> valuation);

  std::size_t world_count() const noexcept { return worlds_.size(); }
  const std::vector<std::string>& world_names() const noexcept { return worlds_; }
  const std::string& world_name(WorldId w) const { return worlds_.at(w); }
  std::optional<WorldId> find_world(std::string_view name) const;
  WorldId world(std::string_view name) const;  // throws InputError
  WorldSet all_worlds() const { return WorldSet::full(worlds_.size()); }
  WorldSet world_set(const std::vector<std::string>& names) const;

  const std::vector<std::string>& agents() const noexcept { return agents_; }
  std::optional<std::size_t> find_agent(std::string_view name) const;
  std::size_t agent_index(std::string_view name) const;  // throws InputError
  // Indices of `group`, throwing InputError on unknown agents.
  std::vector<std::size_t> agent_indices(const AgentSet& group) const;

  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Relation& relation(std::size_t agent) const { return relations_.at(agent); }
  const Relation& relation(std::string_view agent) const { return relations_[agent_index(agent)]; }

  const AtomSet& atoms_at(WorldId w) const { return valuation_.at(w); }
  bool holds(WorldId w, const std::string& atom) const { return valuation_[w].count(atom) != 0; }
  WorldSet extension(const std::string& atom) const;
  // Atoms with non-empty extension.
  AtomSet atoms() const;

  KripkeModel with_relations(std::vector<Relation> relations) const;
  ModelDescription describe() const;

  friend bool operator==(const KripkeModel& a, const KripkeModel& b);

 private:
  std::vector<std::string> worlds_;
  std::map<std::string, WorldId, std::less<>> world_index_;
  std::vector<std::string> agents_;
  std::vector<Relation> relations_;
  std::vector<AtomSet> valuation_;
};

struct PointedModel {
  KripkeModel model;
  WorldId point;

  PointedModel(KripkeModel m, WorldId w);
  PointedModel(KripkeModel m, std::string_view w) : PointedModel(m, m.world(w)) {}
};

// ⋂ of the members' relations; the full relation W×W for the empty group.
Relation group_relation(const KripkeModel& m, const AgentSet& group);
Relation group_relation(const KripkeModel& m, const std::vector<std::size_t>& agent_indices);

// (T×T) ∪ (T̄×T̄)
Relation agreement_relation(const KripkeModel& m, const WorldSet& truth_set);

// |W| + Σ|R_i| + Σ_w |atoms true at w|
std::size_t model_size(const KripkeModel& m);

// World i of `left` keeps index i and is renamed "1:<name>"; world j of
// `right` becomes left.world_count() + j named "2:<name>". Agents are united,
// an agent missing on one side gets the empty relation there.
KripkeModel disjoint_union(const KripkeModel& left, const KripkeModel& right);

}  // namespace epimc
