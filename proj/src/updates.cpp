#include "epimc/updates.hpp"

#include "epimc/error.hpp"

namespace epimc {

namespace {

void check_domain(const KripkeModel& m, const WorldSet& t) {
  if (t.size() != m.world_count()) throw InputError("truth set does not match the model's worlds");
}

}  // namespace

KripkeModel partial_comm_update(const KripkeModel& m, const AgentSet& group,
                                const WorldSet& topic_truthset) {
  check_domain(m, topic_truthset);
  const Relation shared = group_relation(m, group);
  const Relation agree = agreement_relation(m, topic_truthset);
  const auto& k = simd::active_kernels();

  std::vector<Relation> updated = m.relations();
  for (auto& r : updated) {
    for (WorldId v = 0; v < m.world_count(); ++v) {
      auto row = r.row(v);
      k.and_or_words(row.data(), shared.row(v).data(), agree.row(v).data(), row.data(), row.size());
    }
  }
  return m.with_relations(std::move(updated));
}

KripkeModel pa_edge_update(const KripkeModel& m, const WorldSet& topic_truthset) {
  check_domain(m, topic_truthset);
  const Relation agree = agreement_relation(m, topic_truthset);
  std::vector<Relation> updated = m.relations();
  for (auto& r : updated) r &= agree;
  return m.with_relations(std::move(updated));
}

KripkeModel pa_world_update(const KripkeModel& m, const WorldSet& topic_truthset) {
  check_domain(m, topic_truthset);
  if (topic_truthset.none()) throw EmptyDomainError("announcement would leave no worlds");

  const std::vector<WorldId> kept = topic_truthset.ids();
  std::vector<std::string> names;
  std::vector<AtomSet> valuation;
  for (WorldId w : kept) {
    names.push_back(m.world_name(w));
    valuation.push_back(m.atoms_at(w));
  }

  std::vector<Relation> relations;
  for (const auto& r : m.relations()) {
    Relation restricted(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (r.test(kept[i], kept[j])) restricted.set(i, j);
      }
    }
    relations.push_back(std::move(restricted));
  }
  return KripkeModel(std::move(names), m.agents(), std::move(relations), std::move(valuation));
}

}  // namespace epimc
