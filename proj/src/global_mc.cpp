#include "epimc/global_mc.hpp"

#include <tuple>

#include "epimc/error.hpp"

namespace epimc {

namespace {

using Key = std::tuple<std::optional<ModalityDescriptor>, Formula, Label>;

Key key_of(const LabelledSubformula& e) { return {e.symbol, e.formula, e.label}; }

}  // namespace

Labelling global_labelling(const KripkeModel& m, const Formula& f) {
  const auto& k = simd::active_kernels();
  const std::size_t n = m.world_count();

  Labelling out;
  out.order = ordered_subformulas(f);
  out.world_labels.assign(out.order.size(), WorldSet(n));
  out.edge_labels.emplace(Label{}, m.relations());

  std::map<Key, std::size_t> index;
  for (std::size_t e = 0; e < out.order.size(); ++e) index.emplace(key_of(out.order[e]), e);
  auto label_of = [&](const Formula& g, const Label& sigma) -> const WorldSet& {
    return out.world_labels[index.at(Key{std::nullopt, g, sigma})];
  };

  std::vector<simd::Word> row(simd::words_for(n));

  for (std::size_t e = 0; e < out.order.size(); ++e) {
    const LabelledSubformula& element = out.order[e];
    const Label& sigma = element.label;
    WorldSet& result = out.world_labels[e];

    if (element.is_symbol()) {
      const ModalityDescriptor& mod = *element.symbol;
      const WorldSet& topic = label_of(mod.topic, sigma);
      const WorldSet outside = topic.complement();
      const Relation shared = mod.announcement ? Relation(n) : group_relation(m, mod.group);

      std::vector<Relation> edges = out.edge_labels.at(sigma);
      for (auto& r : edges) {
        for (WorldId v = 0; v < n; ++v) {
          const WorldSet& agree = topic.test(v) ? topic : outside;
          auto rv = r.row(v);
          k.and_or_words(rv.data(), shared.row(v).data(), agree.words().data(), rv.data(),
                         rv.size());
        }
      }
      Label extended = sigma;
      extended.push_back(mod);
      out.edge_labels.emplace(std::move(extended), std::move(edges));
      continue;
    }

    const Formula& g = element.formula;
    switch (g.kind()) {
      case FormulaKind::Atom:
        result = m.extension(g.name());
        break;
      case FormulaKind::Not:
        result = label_of(g.operand(), sigma).complement();
        break;
      case FormulaKind::And:
        result = label_of(g.lhs(), sigma) & label_of(g.rhs(), sigma);
        break;
      case FormulaKind::Distributed: {
        const std::vector<std::size_t> group = m.agent_indices(g.group());
        const std::vector<Relation>& edges = out.edge_labels.at(sigma);
        const WorldSet& body = label_of(g.body(), sigma);
        for (WorldId w = 0; w < n; ++w) {
          auto first = edges[group.front()].row(w);
          std::copy(first.begin(), first.end(), row.begin());
          for (std::size_t idx = 1; idx < group.size(); ++idx) {
            k.and_words(row.data(), edges[group[idx]].row(w).data(), row.data(), row.size());
          }
          result.assign(w, !k.any_andnot(row.data(), body.words().data(), row.size()));
        }
        break;
      }
      case FormulaKind::PartialComm:
      case FormulaKind::PubAnn: {
        const bool announcement = g.kind() == FormulaKind::PubAnn;
        Label extended = sigma;
        extended.push_back({announcement, announcement ? AgentSet{} : g.group(), g.topic()});
        result = label_of(g.body(), extended);
        if (announcement) result |= label_of(g.topic(), sigma).complement();
        break;
      }
      case FormulaKind::ArbPartialComm:
      case FormulaKind::ArbPubAnn:
        throw UnsupportedFragment("the labelling checker does not handle quantified modalities");
    }
  }
  return out;
}

WorldSet global_mc(const KripkeModel& m, const Formula& f) {
  const Labelling l = global_labelling(m, f);
  for (std::size_t e = l.order.size(); e-- > 0;) {
    if (!l.order[e].is_symbol() && l.order[e].formula == f && l.order[e].label.empty()) {
      return l.world_labels[e];
    }
  }
  throw Error("root formula missing from the labelling");
}

}  // namespace epimc
