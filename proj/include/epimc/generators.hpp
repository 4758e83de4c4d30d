#pragma once

// Random models and formulas for property tests. Draws use `rng() % n` so a
// seed gives the same objects on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "epimc/formula.hpp"
#include "epimc/model.hpp"

namespace epimc {

enum class Closure { None, ReflexiveSymmetric, Mixed };

struct ModelBounds {
  std::size_t max_worlds = 6;
  std::size_t max_agents = 3;
  std::size_t max_atoms = 3;
  std::size_t min_worlds = 1;
  double edge_probability = 0.4;
  Closure closure = Closure::Mixed;
};

// Worlds w0.., agents a, b, c.., atoms p, q, r, s...
KripkeModel random_model(std::uint64_t seed, const ModelBounds& bounds = {});
KripkeModel random_model(std::mt19937_64& rng, const ModelBounds& bounds = {});

enum class Layer {
  Boolean,                // atoms and connectives
  Basic,                  // + D_G
  PartialComm,            // + [S!χ]
  Announcement,           // + [ξ!], no [S!χ]
  Quantified,             // + [S!χ] and [*S]
  QuantifiedAnnouncement, // + [ξ!] and [!*]
};

struct FormulaShape {
  std::size_t depth = 3;
  Layer layer = Layer::Basic;
  std::vector<std::string> agents{"a", "b"};
  std::vector<std::string> atoms{"p", "q"};
};

Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape);
Formula random_formula(std::uint64_t seed, const FormulaShape& shape);

// Random non-empty (or possibly empty) subset of `agents`.
AgentSet random_group(std::mt19937_64& rng, const std::vector<std::string>& agents,
                      bool allow_empty);

// EPIMC_SEED when set, otherwise `fallback`.
std::uint64_t base_seed(std::uint64_t fallback);

std::vector<std::string> agent_names(std::size_t count);
std::vector<std::string> atom_names(std::size_t count);

}  // namespace epimc
