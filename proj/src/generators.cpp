#include "epimc/generators.hpp"

#include <cstdlib>

namespace epimc {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() % 1000000) < p * 1000000.0;
}

}  // namespace

std::vector<std::string> agent_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k)) : "ag" + std::to_string(k));
  }
  return out;
}

std::vector<std::string> atom_names(std::size_t count) {
  static const char* const letters = "pqrstuvxyz";
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(k < 10 ? std::string(1, letters[k]) : "p" + std::to_string(k));
  }
  return out;
}

KripkeModel random_model(std::mt19937_64& rng, const ModelBounds& bounds) {
  const std::size_t lo = std::max<std::size_t>(1, bounds.min_worlds);
  const std::size_t n = lo + draw(rng, bounds.max_worlds - lo + 1);
  const std::size_t agent_count = 1 + draw(rng, bounds.max_agents);
  const std::size_t atom_count = bounds.max_atoms == 0 ? 0 : 1 + draw(rng, bounds.max_atoms);

  ModelDescription desc;
  desc.agents = agent_names(agent_count);
  for (std::size_t w = 0; w < n; ++w) desc.worlds.push_back("w" + std::to_string(w));
  const auto atoms = atom_names(atom_count);
  for (const auto& w : desc.worlds) {
    auto& val = desc.valuation[w];
    for (const auto& p : atoms) {
      if (chance(rng, 0.5)) val.push_back(p);
    }
  }
  for (const auto& agent : desc.agents) {
    auto& pairs = desc.relations[agent];
    for (const auto& v : desc.worlds) {
      for (const auto& u : desc.worlds) {
        if (chance(rng, bounds.edge_probability)) pairs.emplace_back(v, u);
      }
    }
  }
  bool close = bounds.closure == Closure::ReflexiveSymmetric;
  if (bounds.closure == Closure::Mixed) close = chance(rng, 0.5);
  desc.reflexive_closure = close;
  desc.symmetric_closure = close;
  return KripkeModel::from_description(desc);
}

KripkeModel random_model(std::uint64_t seed, const ModelBounds& bounds) {
  std::mt19937_64 rng(seed);
  return random_model(rng, bounds);
}

AgentSet random_group(std::mt19937_64& rng, const std::vector<std::string>& agents,
                      bool allow_empty) {
  for (;;) {
    AgentSet group;
    for (const auto& a : agents) {
      if (chance(rng, 0.5)) group.insert(a);
    }
    if (allow_empty || !group.empty() || agents.empty()) return group;
  }
}

namespace {

class FormulaGenerator {
 public:
  FormulaGenerator(std::mt19937_64& rng, const FormulaShape& shape) : rng_(rng), shape_(shape) {}

  Formula generate(std::size_t depth, Layer layer) {
    if (depth == 0 || draw(rng_, depth + 2) == 0) return leaf();

    enum Op { Neg, Conj, Disj, Impl, Dist, Comm, Ann, ArbComm, ArbAnn };
    std::vector<Op> ops{Neg, Conj, Disj, Impl};
    if (layer != Layer::Boolean && !shape_.agents.empty()) ops.insert(ops.end(), {Dist, Dist});
    if (layer == Layer::PartialComm || layer == Layer::Quantified) {
      ops.insert(ops.end(), {Comm, Comm});
    }
    if (layer == Layer::Announcement || layer == Layer::QuantifiedAnnouncement) {
      ops.insert(ops.end(), {Ann, Ann});
    }
    if (layer == Layer::Quantified) ops.push_back(ArbComm);
    if (layer == Layer::QuantifiedAnnouncement) ops.push_back(ArbAnn);

    switch (ops[draw(rng_, ops.size())]) {
      case Neg:
        return Formula::negation(generate(depth - 1, layer));
      case Conj:
        return Formula::conjunction(generate(depth - 1, layer), generate(depth - 1, layer));
      case Disj:
        return Formula::disjunction(generate(depth - 1, layer), generate(depth - 1, layer));
      case Impl:
        return Formula::implies(generate(depth - 1, layer), generate(depth - 1, layer));
      case Dist:
        return Formula::distributed(random_group(rng_, shape_.agents, false),
                                    generate(depth - 1, layer));
      case Comm: {
        AgentSet group = random_group(rng_, shape_.agents, true);
        Formula topic = generate(depth - 1, topic_layer(layer));
        return Formula::partial_comm(std::move(group), std::move(topic), generate(depth - 1, layer));
      }
      case Ann: {
        Formula topic = generate(depth - 1, topic_layer(layer));
        return Formula::announcement(std::move(topic), generate(depth - 1, layer));
      }
      case ArbComm:
        return Formula::arbitrary_comm(random_group(rng_, shape_.agents, true),
                                       generate(depth - 1, layer));
      case ArbAnn:
        return Formula::arbitrary_announcement(generate(depth - 1, layer));
    }
    return leaf();
  }

 private:
  // Topics of quantified formulas stay quantifier-free to keep runs short.
  static Layer topic_layer(Layer layer) {
    if (layer == Layer::Quantified) return Layer::PartialComm;
    if (layer == Layer::QuantifiedAnnouncement) return Layer::Announcement;
    return layer;
  }

  Formula leaf() {
    if (shape_.atoms.empty() || draw(rng_, 12) == 0) {
      return draw(rng_, 2) == 0 ? Formula::top() : Formula::bottom();
    }
    return Formula::atom(shape_.atoms[draw(rng_, shape_.atoms.size())]);
  }

  std::mt19937_64& rng_;
  const FormulaShape& shape_;
};

}  // namespace

Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape) {
  return FormulaGenerator(rng, shape).generate(shape.depth, shape.layer);
}

Formula random_formula(std::uint64_t seed, const FormulaShape& shape) {
  std::mt19937_64 rng(seed);
  return random_formula(rng, shape);
}

std::uint64_t base_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("EPIMC_SEED"); env != nullptr && *env != '\0') {
    return std::strtoull(env, nullptr, 0);
  }
  return fallback;
}

}  // namespace epimc
