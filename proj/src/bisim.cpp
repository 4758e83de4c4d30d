#include "epimc/bisim.hpp"

#include <algorithm>
#include <map>

#include "epimc/error.hpp"

namespace epimc {

namespace {

struct Group {
  AgentSet agents;
  Relation relation;
};

// Every non-empty subset of the model's agents with its group relation.
std::vector<Group> all_groups(const KripkeModel& m) {
  const std::size_t k = m.agents().size();
  std::vector<Group> groups;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> members;
    AgentSet names;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        members.push_back(i);
        names.insert(m.agents()[i]);
      }
    }
    groups.push_back({std::move(names), group_relation(m, members)});
  }
  return groups;
}

// Assigns dense ids in order of first occurrence over worlds 0..n-1.
template <typename Key>
std::vector<std::size_t> number_by_key(const std::vector<Key>& keys, std::size_t& count) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t w = 0; w < keys.size(); ++w) {
    out[w] = ids.emplace(keys[w], ids.size()).first->second;
  }
  count = ids.size();
  return out;
}

// Refinement with its full history: level 0 splits by atoms, level k+1 by the
// level-k blocks reachable through each group relation.
class Refinement {
 public:
  Refinement(const KripkeModel& m, AtomSet atoms)
      : m_(m), atoms_(std::move(atoms)), groups_(all_groups(m)) {
    const std::size_t n = m.world_count();
    std::vector<std::vector<bool>> atom_keys(n);
    for (WorldId w = 0; w < n; ++w) {
      for (const auto& p : atoms_) atom_keys[w].push_back(m.holds(w, p));
    }
    std::size_t count = 0;
    levels_.push_back(number_by_key(atom_keys, count));

    for (;;) {
      const auto& prev = levels_.back();
      std::vector<std::vector<std::size_t>> keys(n);
      for (WorldId w = 0; w < n; ++w) {
        auto& key = keys[w];
        key.push_back(prev[w]);
        for (const auto& g : groups_) {
          std::vector<std::size_t> reached;
          g.relation.row_set(w).for_each([&](WorldId u) { reached.push_back(prev[u]); });
          std::sort(reached.begin(), reached.end());
          reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
          key.push_back(reached.size());
          key.insert(key.end(), reached.begin(), reached.end());
        }
      }
      std::size_t next_count = 0;
      auto next = number_by_key(keys, next_count);
      if (next_count == count) break;
      count = next_count;
      levels_.push_back(std::move(next));
    }
  }

  Partition partition() const {
    Partition p;
    p.block_of = levels_.back();
    const std::size_t blocks =
        p.block_of.empty() ? 0 : *std::max_element(p.block_of.begin(), p.block_of.end()) + 1;
    p.blocks.assign(blocks, WorldSet(m_.world_count()));
    for (WorldId w = 0; w < m_.world_count(); ++w) p.blocks[p.block_of[w]].set(w);
    return p;
  }

  // True at x, false at y; built from the level at which they first separate.
  Formula distinguish(WorldId x, WorldId y) {
    if (auto it = memo_.find({x, y}); it != memo_.end()) return it->second;
    Formula f = build(x, y);
    memo_.emplace(std::make_pair(x, y), f);
    return f;
  }

 private:
  std::size_t split_level(WorldId x, WorldId y) const {
    for (std::size_t level = 0; level < levels_.size(); ++level) {
      if (levels_[level][x] != levels_[level][y]) return level;
    }
    throw NoDistinguisher("worlds '" + m_.world_name(x) + "' and '" + m_.world_name(y) +
                          "' are collectively bisimilar");
  }

  Formula build(WorldId x, WorldId y) {
    const std::size_t level = split_level(x, y);
    if (level == 0) {
      for (const auto& p : atoms_) {
        const bool at_x = m_.holds(x, p);
        if (at_x != m_.holds(y, p)) {
          return at_x ? Formula::atom(p) : Formula::negation(Formula::atom(p));
        }
      }
    }
    const auto& prev = levels_[level - 1];
    for (const auto& g : groups_) {
      const WorldSet from_x = g.relation.row_set(x);
      const WorldSet from_y = g.relation.row_set(y);
      std::map<std::size_t, WorldId> reps_x;
      std::map<std::size_t, WorldId> reps_y;
      from_x.for_each([&](WorldId u) { reps_x.emplace(prev[u], u); });
      from_y.for_each([&](WorldId u) { reps_y.emplace(prev[u], u); });

      // x reaches a block y cannot: ¬D_G¬(⋀ over y's successors).
      for (const auto& [block, x_succ] : reps_x) {
        if (reps_y.count(block) != 0) continue;
        std::vector<Formula> parts;
        for (const auto& [other, y_succ] : reps_y) parts.push_back(distinguish(x_succ, y_succ));
        return Formula::possible(g.agents, Formula::conjunction_of(parts));
      }
      // y reaches a block x cannot: D_G¬(⋀ over x's successors).
      for (const auto& [block, y_succ] : reps_y) {
        if (reps_x.count(block) != 0) continue;
        std::vector<Formula> parts;
        for (const auto& [other, x_succ] : reps_x) parts.push_back(distinguish(y_succ, x_succ));
        return Formula::distributed(g.agents, Formula::negation(Formula::conjunction_of(parts)));
      }
    }
    throw Error("refinement history is inconsistent");
  }

  const KripkeModel& m_;
  AtomSet atoms_;
  std::vector<Group> groups_;
  std::vector<std::vector<std::size_t>> levels_;
  std::map<std::pair<WorldId, WorldId>, Formula> memo_;
};

AtomSet resolve_atoms(const KripkeModel& m, const std::optional<AtomSet>& atoms) {
  return atoms ? *atoms : m.atoms();
}

// ⋂ of the members' relations, an absent agent contributing the empty relation.
Relation lenient_group_relation(const KripkeModel& m, const AgentSet& group) {
  Relation r = Relation::full(m.world_count());
  for (const auto& agent : group) {
    if (auto i = m.find_agent(agent)) {
      r &= m.relation(*i);
    } else {
      return Relation(m.world_count());
    }
  }
  return r;
}

}  // namespace

bool Partition::is_closed(const WorldSet& s) const {
  for (const auto& block : blocks) {
    if (block.intersects(s) && !block.is_subset_of(s)) return false;
  }
  return true;
}

Partition bisim_classes(const KripkeModel& m, const std::optional<AtomSet>& atoms) {
  return Refinement(m, resolve_atoms(m, atoms)).partition();
}

bool is_bisimilar(const PointedModel& left, const PointedModel& right,
                  const std::optional<AtomSet>& atoms) {
  AtomSet q;
  if (atoms) {
    q = *atoms;
  } else {
    q = left.model.atoms();
    const AtomSet r = right.model.atoms();
    q.insert(r.begin(), r.end());
  }
  const KripkeModel u = disjoint_union(left.model, right.model);
  const Partition p = bisim_classes(u, q);
  return p.same_block(left.point, left.model.world_count() + right.point);
}

KripkeModel quotient(const KripkeModel& m, const std::optional<AtomSet>& atoms) {
  const AtomSet q = resolve_atoms(m, atoms);
  const Partition p = bisim_classes(m, q);
  const std::size_t k = p.size();

  std::vector<std::string> names;
  std::vector<AtomSet> valuation;
  for (const auto& block : p.blocks) {
    const WorldId rep = block.ids().front();
    names.push_back(m.world_name(rep));
    AtomSet val;
    for (const auto& atom : m.atoms_at(rep)) {
      if (q.count(atom) != 0) val.insert(atom);
    }
    valuation.push_back(std::move(val));
  }

  std::vector<Relation> relations;
  for (const auto& r : m.relations()) {
    Relation lifted(k);
    for (const auto& [v, u] : r.pairs()) lifted.set(p.block_of[v], p.block_of[u]);
    relations.push_back(std::move(lifted));
  }
  return KripkeModel(std::move(names), m.agents(), std::move(relations), std::move(valuation));
}

Formula distinguishing_formula(const KripkeModel& m, WorldId w, WorldId v,
                               const std::optional<AtomSet>& atoms) {
  Refinement refinement(m, resolve_atoms(m, atoms));
  return refinement.distinguish(w, v);
}

Formula characteristic_topic(const KripkeModel& m, const WorldSet& a) {
  Refinement refinement(m, m.atoms());
  const Partition p = refinement.partition();
  if (!p.is_closed(a)) throw ClosureError("world set is not a union of bisimulation classes");
  if (a.none()) return Formula::bottom();
  if (a.all()) return Formula::top();

  std::vector<WorldId> inside;
  std::vector<WorldId> outside;
  for (const auto& block : p.blocks) {
    const WorldId rep = block.ids().front();
    (a.test(rep) ? inside : outside).push_back(rep);
  }
  std::vector<Formula> disjuncts;
  for (WorldId x : inside) {
    std::vector<Formula> parts;
    for (WorldId y : outside) parts.push_back(refinement.distinguish(x, y));
    disjuncts.push_back(Formula::conjunction_of(parts));
  }
  return Formula::disjunction_of(disjuncts);
}

bool is_collective_bisimulation(const KripkeModel& left, const KripkeModel& right,
                                const std::vector<std::pair<WorldId, WorldId>>& pairs,
                                const std::optional<AtomSet>& atoms) {
  if (pairs.empty()) return false;
  AtomSet q;
  if (atoms) {
    q = *atoms;
  } else {
    q = left.atoms();
    const AtomSet r = right.atoms();
    q.insert(r.begin(), r.end());
  }
  std::vector<std::string> agents = left.agents();
  for (const auto& a : right.agents()) {
    if (std::find(agents.begin(), agents.end(), a) == agents.end()) agents.push_back(a);
  }

  const std::set<std::pair<WorldId, WorldId>> z(pairs.begin(), pairs.end());
  for (const auto& [x, y] : z) {
    for (const auto& p : q) {
      if (left.holds(x, p) != right.holds(y, p)) return false;
    }
  }

  for (std::size_t mask = 1; mask < (std::size_t{1} << agents.size()); ++mask) {
    AgentSet group;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (mask & (std::size_t{1} << i)) group.insert(agents[i]);
    }
    const Relation rl = lenient_group_relation(left, group);
    const Relation rr = lenient_group_relation(right, group);
    for (const auto& [x, y] : z) {
      // Forth
      for (WorldId x2 : rl.row_set(x).ids()) {
        bool matched = false;
        for (WorldId y2 : rr.row_set(y).ids()) matched = matched || z.count({x2, y2}) != 0;
        if (!matched) return false;
      }
      // Back
      for (WorldId y2 : rr.row_set(y).ids()) {
        bool matched = false;
        for (WorldId x2 : rl.row_set(x).ids()) matched = matched || z.count({x2, y2}) != 0;
        if (!matched) return false;
      }
    }
  }
  return true;
}

}  // namespace epimc
