#pragma once

// Shared helpers for the unit and property tests: fixture loading and
// brute-force oracles that work on explicit pair sets, independent of the
// bit-matrix code paths they check.

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epimc/model.hpp"
#include "epimc/model_json.hpp"

namespace epimc::testing {

using PairSet = std::set<std::pair<WorldId, WorldId>>;

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(EPIMC_FIXTURE_DIR) / name;
}

inline KripkeModel fixture(const std::string& name) { return load_model(fixture_path(name)).model; }

inline PairSet pair_set(const Relation& r) {
  PairSet out;
  for (WorldId v = 0; v < r.dimension(); ++v) {
    for (WorldId u = 0; u < r.dimension(); ++u) {
      if (r.test(v, u)) out.emplace(v, u);
    }
  }
  return out;
}

inline PairSet pair_set(const KripkeModel& m, const std::string& agent) {
  return pair_set(m.relation(agent));
}

inline PairSet named_pairs(const KripkeModel& m,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  PairSet out;
  for (const auto& [v, u] : pairs) out.emplace(m.world(v), m.world(u));
  return out;
}

inline PairSet intersect(const PairSet& a, const PairSet& b) {
  PairSet out;
  for (const auto& p : a) {
    if (b.count(p) != 0) out.insert(p);
  }
  return out;
}

// Group relation by explicit intersection; W×W for the empty group.
inline PairSet naive_group(const KripkeModel& m, const AgentSet& group) {
  PairSet out;
  for (WorldId v = 0; v < m.world_count(); ++v) {
    for (WorldId u = 0; u < m.world_count(); ++u) out.emplace(v, u);
  }
  for (const auto& agent : group) out = intersect(out, pair_set(m, agent));
  return out;
}

inline std::vector<AgentSet> nonempty_groups(const std::vector<std::string>& agents) {
  std::vector<AgentSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << agents.size()); ++mask) {
    AgentSet g;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (mask & (std::size_t{1} << i)) g.insert(agents[i]);
    }
    out.push_back(g);
  }
  return out;
}

// Largest collective bisimulation between two models, by deleting violating
// pairs from the atom-agreement relation until nothing changes.
inline PairSet naive_bisimulation(const KripkeModel& l, const KripkeModel& r, const AtomSet& atoms) {
  std::vector<std::string> agents = l.agents();
  for (const auto& a : r.agents()) {
    if (!l.find_agent(a)) agents.push_back(a);
  }
  auto group_pairs = [](const KripkeModel& m, const AgentSet& g) {
    PairSet out;
    for (WorldId v = 0; v < m.world_count(); ++v) {
      for (WorldId u = 0; u < m.world_count(); ++u) out.emplace(v, u);
    }
    for (const auto& agent : g) {
      out = m.find_agent(agent) ? intersect(out, pair_set(m, agent)) : PairSet{};
    }
    return out;
  };
  std::vector<std::pair<PairSet, PairSet>> groups;
  for (const auto& g : nonempty_groups(agents)) groups.emplace_back(group_pairs(l, g), group_pairs(r, g));

  PairSet z;
  for (WorldId x = 0; x < l.world_count(); ++x) {
    for (WorldId y = 0; y < r.world_count(); ++y) {
      bool same = true;
      for (const auto& p : atoms) same = same && l.holds(x, p) == r.holds(y, p);
      if (same) z.emplace(x, y);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = z.begin(); it != z.end();) {
      const auto [x, y] = *it;
      bool ok = true;
      for (const auto& [gl, gr] : groups) {
        for (const auto& [a, b] : gl) {
          if (a != x) continue;
          bool matched = false;
          for (const auto& [c, d] : gr) matched = matched || (c == y && z.count({b, d}) != 0);
          ok = ok && matched;
        }
        for (const auto& [c, d] : gr) {
          if (c != y) continue;
          bool matched = false;
          for (const auto& [a, b] : gl) matched = matched || (a == x && z.count({b, d}) != 0);
          ok = ok && matched;
        }
      }
      if (ok) {
        ++it;
      } else {
        it = z.erase(it);
        changed = true;
      }
    }
  }
  return z;
}

}  // namespace epimc::testing
