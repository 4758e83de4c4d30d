#include "epimc/model_json.hpp"

#include <fstream>

#include "epimc/error.hpp"

namespace epimc {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(what + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ModelDescription description_from_json(const json& j) {
  if (!j.is_object()) throw InputError("model JSON must be an object");
  ModelDescription desc;
  if (j.contains("agents")) desc.agents = string_list(j.at("agents"), "agents");
  if (j.contains("worlds")) desc.worlds = string_list(j.at("worlds"), "worlds");

  if (j.contains("relations")) {
    const json& rels = j.at("relations");
    if (!rels.is_object()) throw InputError("relations must be an object");
    for (const auto& [agent, pairs] : rels.items()) {
      auto& out = desc.relations[agent];
      if (!pairs.is_array()) throw InputError("relation '" + agent + "' must be an array");
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
          throw InputError("relation '" + agent + "' entries must be [from, to] string pairs");
        }
        out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    }
  }

  if (j.contains("valuation")) {
    const json& val = j.at("valuation");
    if (!val.is_object()) throw InputError("valuation must be an object");
    for (const auto& [world, atoms] : val.items()) {
      desc.valuation[world] = string_list(atoms, "valuation of '" + world + "'");
    }
  }

  if (j.contains("point")) {
    if (!j.at("point").is_string()) throw InputError("point must be a string");
    desc.point = j.at("point").get<std::string>();
  }

  if (j.contains("closure")) {
    for (const auto& name : string_list(j.at("closure"), "closure")) {
      if (name == "reflexive") {
        desc.reflexive_closure = true;
      } else if (name == "symmetric") {
        desc.symmetric_closure = true;
      } else {
        throw InputError("unknown closure '" + name + "'");
      }
    }
  }
  return desc;
}

ModelDescription read_model_description(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return description_from_json(j);
}

LoadedModel model_from_json(const json& j) {
  const ModelDescription desc = description_from_json(j);
  KripkeModel m = KripkeModel::from_description(desc);
  std::optional<WorldId> point;
  if (desc.point) point = m.world(*desc.point);
  return {std::move(m), point};
}

LoadedModel load_model(const std::filesystem::path& path) {
  const ModelDescription desc = read_model_description(path);
  KripkeModel m = KripkeModel::from_description(desc);
  std::optional<WorldId> point;
  if (desc.point) point = m.world(*desc.point);
  return {std::move(m), point};
}

json model_to_json(const KripkeModel& m, std::optional<WorldId> point) {
  json j;
  j["agents"] = m.agents();
  j["worlds"] = m.world_names();
  json rels = json::object();
  for (std::size_t i = 0; i < m.agents().size(); ++i) {
    json pairs = json::array();
    for (const auto& [v, u] : m.relation(i).pairs()) {
      pairs.push_back({m.world_name(v), m.world_name(u)});
    }
    rels[m.agents()[i]] = std::move(pairs);
  }
  j["relations"] = std::move(rels);
  json val = json::object();
  for (WorldId w = 0; w < m.world_count(); ++w) {
    val[m.world_name(w)] = std::vector<std::string>(m.atoms_at(w).begin(), m.atoms_at(w).end());
  }
  j["valuation"] = std::move(val);
  if (point) j["point"] = m.world_name(*point);
  return j;
}

}  // namespace epimc
