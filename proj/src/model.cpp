#include "epimc/model.hpp"

#include <algorithm>
#include <sstream>

#include "epimc/error.hpp"

namespace epimc {

std::vector<std::string> validate(const ModelDescription& desc) {
  std::vector<std::string> violations;
  if (desc.worlds.empty()) violations.emplace_back("worlds must be non-empty");
  if (desc.agents.empty()) violations.emplace_back("agents must be non-empty");

  std::set<std::string> worlds;
  for (const auto& w : desc.worlds) {
    if (!worlds.insert(w).second) violations.push_back("duplicate world '" + w + "'");
  }
  std::set<std::string> agents;
  for (const auto& a : desc.agents) {
    if (!agents.insert(a).second) violations.push_back("duplicate agent '" + a + "'");
  }

  for (const auto& [agent, pairs] : desc.relations) {
    if (agents.count(agent) == 0) {
      violations.push_back("relation for undeclared agent '" + agent + "'");
    }
    for (const auto& [from, to] : pairs) {
      if (worlds.count(from) == 0 || worlds.count(to) == 0) {
        violations.push_back("relation '" + agent + "' pair (" + from + ", " + to +
                             ") has an undeclared endpoint");
      }
    }
  }
  for (const auto& [world, atoms] : desc.valuation) {
    if (worlds.count(world) == 0) {
      violations.push_back("valuation for undeclared world '" + world + "'");
    }
  }
  if (desc.point && worlds.count(*desc.point) == 0) {
    violations.push_back("point '" + *desc.point + "' is not a declared world");
  }
  return violations;
}

KripkeModel KripkeModel::from_description(const ModelDescription& desc) {
  if (auto violations = validate(desc); !violations.empty()) {
    std::ostringstream out;
    out << "invalid model:";
    for (const auto& v : violations) out << "\n  " << v;
    throw InputError(out.str());
  }

  const std::size_t n = desc.worlds.size();
  std::map<std::string, WorldId> index;
  for (WorldId w = 0; w < n; ++w) index[desc.worlds[w]] = w;

  std::vector<std::string> agents = desc.agents;
  std::sort(agents.begin(), agents.end());

  std::vector<Relation> relations;
  relations.reserve(agents.size());
  for (const auto& agent : agents) {
    Relation r(n);
    if (auto it = desc.relations.find(agent); it != desc.relations.end()) {
      for (const auto& [from, to] : it->second) r.set(index[from], index[to]);
    }
    if (desc.reflexive_closure) r.close_reflexive();
    if (desc.symmetric_closure) r.close_symmetric();
    relations.push_back(std::move(r));
  }

  std::vector<AtomSet> valuation(n);
  for (const auto& [world, atoms] : desc.valuation) {
    valuation[index[world]].insert(atoms.begin(), atoms.end());
  }
  return KripkeModel(desc.worlds, std::move(agents), std::move(relations), std::move(valuation));
}

KripkeModel::KripkeModel(std::vector<std::string> worlds, std::vector<std::string> agents,
                         std::vector<Relation> relations, std::vector<AtomSet> valuation)
    : worlds_(std::move(worlds)),
      agents_(std::move(agents)),
      relations_(std::move(relations)),
      valuation_(std::move(valuation)) {
  if (worlds_.empty()) throw InputError("worlds must be non-empty");
  if (!std::is_sorted(agents_.begin(), agents_.end()) ||
      std::adjacent_find(agents_.begin(), agents_.end()) != agents_.end()) {
    throw InputError("agents must be sorted and distinct");
  }
  if (relations_.size() != agents_.size()) throw InputError("one relation per agent required");
  if (valuation_.size() != worlds_.size()) throw InputError("valuation must cover every world");
  for (const auto& r : relations_) {
    if (r.dimension() != worlds_.size()) throw InputError("relation dimension mismatch");
  }
  for (WorldId w = 0; w < worlds_.size(); ++w) {
    if (!world_index_.emplace(worlds_[w], w).second) {
      throw InputError("duplicate world '" + worlds_[w] + "'");
    }
  }
}

std::optional<WorldId> KripkeModel::find_world(std::string_view name) const {
  if (auto it = world_index_.find(name); it != world_index_.end()) return it->second;
  return std::nullopt;
}

WorldId KripkeModel::world(std::string_view name) const {
  if (auto w = find_world(name)) return *w;
  throw InputError("unknown world '" + std::string(name) + "'");
}

WorldSet KripkeModel::world_set(const std::vector<std::string>& names) const {
  WorldSet s(world_count());
  for (const auto& name : names) s.set(world(name));
  return s;
}

std::optional<std::size_t> KripkeModel::find_agent(std::string_view name) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), name);
  if (it != agents_.end() && *it == name) return static_cast<std::size_t>(it - agents_.begin());
  return std::nullopt;
}

std::size_t KripkeModel::agent_index(std::string_view name) const {
  if (auto i = find_agent(name)) return *i;
  throw InputError("unknown agent '" + std::string(name) + "'");
}

std::vector<std::size_t> KripkeModel::agent_indices(const AgentSet& group) const {
  std::vector<std::size_t> out;
  out.reserve(group.size());
  for (const auto& agent : group) out.push_back(agent_index(agent));
  return out;
}

WorldSet KripkeModel::extension(const std::string& atom) const {
  WorldSet s(world_count());
  for (WorldId w = 0; w < world_count(); ++w) {
    if (valuation_[w].count(atom) != 0) s.set(w);
  }
  return s;
}

AtomSet KripkeModel::atoms() const {
  AtomSet out;
  for (const auto& atoms : valuation_) out.insert(atoms.begin(), atoms.end());
  return out;
}

KripkeModel KripkeModel::with_relations(std::vector<Relation> relations) const {
  return KripkeModel(worlds_, agents_, std::move(relations), valuation_);
}

ModelDescription KripkeModel::describe() const {
  ModelDescription desc;
  desc.agents = agents_;
  desc.worlds = worlds_;
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    auto& pairs = desc.relations[agents_[i]];
    for (const auto& [v, u] : relations_[i].pairs()) pairs.emplace_back(worlds_[v], worlds_[u]);
  }
  for (WorldId w = 0; w < worlds_.size(); ++w) {
    desc.valuation[worlds_[w]] = {valuation_[w].begin(), valuation_[w].end()};
  }
  return desc;
}

bool operator==(const KripkeModel& a, const KripkeModel& b) {
  return a.worlds_ == b.worlds_ && a.agents_ == b.agents_ && a.relations_ == b.relations_ &&
         a.valuation_ == b.valuation_;
}

PointedModel::PointedModel(KripkeModel m, WorldId w) : model(std::move(m)), point(w) {
  if (w >= model.world_count()) throw InputError("point is not a world of the model");
}

Relation group_relation(const KripkeModel& m, const std::vector<std::size_t>& agent_indices) {
  if (agent_indices.empty()) return Relation::full(m.world_count());
  Relation r = m.relation(agent_indices.front());
  for (std::size_t k = 1; k < agent_indices.size(); ++k) r &= m.relation(agent_indices[k]);
  return r;
}

Relation group_relation(const KripkeModel& m, const AgentSet& group) {
  return group_relation(m, m.agent_indices(group));
}

Relation agreement_relation(const KripkeModel& m, const WorldSet& truth_set) {
  const std::size_t n = m.world_count();
  const WorldSet outside = truth_set.complement();
  Relation r(n);
  for (WorldId v = 0; v < n; ++v) {
    const WorldSet& side = truth_set.test(v) ? truth_set : outside;
    std::copy(side.words().begin(), side.words().end(), r.row(v).begin());
  }
  return r;
}

std::size_t model_size(const KripkeModel& m) {
  std::size_t size = m.world_count();
  for (const auto& r : m.relations()) size += r.pair_count();
  for (WorldId w = 0; w < m.world_count(); ++w) size += m.atoms_at(w).size();
  return size;
}

KripkeModel disjoint_union(const KripkeModel& left, const KripkeModel& right) {
  const std::size_t n1 = left.world_count();
  const std::size_t n = n1 + right.world_count();

  std::vector<std::string> worlds;
  worlds.reserve(n);
  for (const auto& w : left.world_names()) worlds.push_back("1:" + w);
  for (const auto& w : right.world_names()) worlds.push_back("2:" + w);

  std::set<std::string> agent_set(left.agents().begin(), left.agents().end());
  agent_set.insert(right.agents().begin(), right.agents().end());
  std::vector<std::string> agents(agent_set.begin(), agent_set.end());

  std::vector<Relation> relations;
  for (const auto& agent : agents) {
    Relation r(n);
    if (auto i = left.find_agent(agent)) {
      for (const auto& [v, u] : left.relation(*i).pairs()) r.set(v, u);
    }
    if (auto i = right.find_agent(agent)) {
      for (const auto& [v, u] : right.relation(*i).pairs()) r.set(n1 + v, n1 + u);
    }
    relations.push_back(std::move(r));
  }

  std::vector<AtomSet> valuation;
  valuation.reserve(n);
  for (WorldId w = 0; w < n1; ++w) valuation.push_back(left.atoms_at(w));
  for (WorldId w = 0; w < right.world_count(); ++w) valuation.push_back(right.atoms_at(w));
  return KripkeModel(std::move(worlds), std::move(agents), std::move(relations),
                     std::move(valuation));
}

}  // namespace epimc
