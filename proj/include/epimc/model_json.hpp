#pragma once

// JSON model format:
//   {"agents":["a","b"], "worlds":["w0","u0"],
//    "relations":{"a":[["w0","u0"], ...]}, "valuation":{"w0":["p"], "u0":[]},
//    "point":"w0", "closure":["reflexive","symmetric"]}
// "point" and "closure" are optional.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "epimc/model.hpp"

namespace epimc {

// Structural errors (wrong JSON types, unknown closure names) throw InputError;
// semantic violations are left for validate().
ModelDescription description_from_json(const nlohmann::json& j);
ModelDescription read_model_description(const std::filesystem::path& path);

struct LoadedModel {
  KripkeModel model;
  std::optional<WorldId> point;
};

LoadedModel load_model(const std::filesystem::path& path);
LoadedModel model_from_json(const nlohmann::json& j);

// Pairs are emitted in world-declaration order, so output is deterministic.
nlohmann::json model_to_json(const KripkeModel& m, std::optional<WorldId> point = std::nullopt);

}  // namespace epimc
