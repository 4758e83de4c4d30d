#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "cli.hpp"
#include "epimc/generators.hpp"
#include "epimc/model_json.hpp"
#include "epimc/syntax.hpp"

using namespace epimc;
using namespace epimc::testing;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name).string(); }

class TempModel {
 public:
  TempModel(const KripkeModel& m, const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("epimc_cli_" + tag + "_" + std::to_string(::getpid()) + ".json");
    std::ofstream(path_) << model_to_json(m).dump();
  }
  ~TempModel() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("check on the first fixture pair") {
  const std::string f = "<* a,b> (K a p & ~K a K a p)";
  CHECK(run({"check", "-m", fx("pair1_mprime.json"), "-w", "w1'", "-f", f}).code == 0);
  const Result r = run({"check", "-m", fx("pair1_m.json"), "-w", "w", "-f", f});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("sharing among nobody leaves the model unchanged") {
  for (const std::string name : {"announce_two_worlds.json", "share_intransitive.json", "pair2_mprime.json"}) {
    const Result r = run({"update", "-m", fx(name), "--share", "", "--topic", "p"});
    REQUIRE(r.code == 0);
    const LoadedModel original = load_model(fx(name));
    CHECK(json::parse(r.out) == model_to_json(original.model, original.point));
  }
}

TEST_CASE("updated models load back") {
  const Result r = run({"update", "-m", fx("share_intransitive.json"), "--share", "a,b", "--topic", "(p <-> q)"});
  REQUIRE(r.code == 0);
  const LoadedModel back = model_from_json(json::parse(r.out));
  CHECK_FALSE(back.model.relation("a").test(back.model.world("w0"), back.model.world("u1")));
  CHECK(back.model.relation("a").test(back.model.world("u0"), back.model.world("u1")));
  CHECK(json::parse(r.out) == model_to_json(back.model, back.point));
}

TEST_CASE("world-removing announcement keeps the point when it survives") {
  const Result r = run({"update", "-m", fx("announce_two_worlds.json"), "--announce", "p", "--worlds"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["worlds"] == json::array({"w"}));
  CHECK(j["point"] == "w");
}

TEST_CASE("translation prints a basic formula") {
  const Result r = run({"translate", "-f", "[a ! p] q"});
  CHECK(r.code == 0);
  CHECK(is_basic(parse_formula(r.out)));
  CHECK(run({"translate", "-f", "[a ! p] K b q"}).code == 0);
  CHECK(run({"translate", "-f", "[* a] p"}).code == 2);
}

TEST_CASE("errors become JSON objects under --json") {
  Result r = run({"--json", "check", "-m", fx("announce_two_worlds.json"), "-w", "w", "-f", "(p & "});
  CHECK(r.code == 2);
  json j = json::parse(r.out);
  CHECK(j["error"]["kind"] == "syntax");
  CHECK(j["error"].contains("position"));

  r = run({"--json", "check", "-m", fx("announce_two_worlds.json"), "-w", "w", "-f", "D{} p"});
  CHECK(json::parse(r.out)["error"]["kind"] == "empty_group");

  r = run({"--json", "check", "-m", "/nonexistent.json", "-w", "w", "-f", "p"});
  CHECK(json::parse(r.out)["error"]["kind"] == "input");

  r = run({"--json", "global-check", "-m", fx("announce_two_worlds.json"), "-f", "[* a] p"});
  CHECK(json::parse(r.out)["error"]["kind"] == "unsupported_fragment");

  r = run({"--json", "nonsense"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["kind"] == "usage");

  r = run({"update", "-m", fx("announce_two_worlds.json"), "--share", "a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--topic") != std::string::npos);
}

TEST_CASE("bisim and classes") {
  Result r = run({"bisim", "-m1", fx("pair2_m.json"), "-w1", "w1", "-m2", fx("pair2_mprime.json"),
                  "-w2", "w1'", "--atoms", "p"});
  CHECK(r.code == 0);
  r = run({"--json", "bisim", "-m1", fx("pair2_m.json"), "-w1", "w1", "-m2",
           fx("pair2_mprime.json"), "-w2", "w1'"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["bisimilar"] == false);
  CHECK(j.contains("distinguisher"));

  r = run({"classes", "-m", fx("share_intransitive.json")});
  CHECK(json::parse(r.out)["classes"].size() == 3);
}

TEST_CASE("qbf verdicts") {
  Result r = run({"qbf", "-i", fx("qbf/forall_exists_iff.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "oracle: true\nencoded: true\n");
  r = run({"--json", "qbf", "-i", fx("qbf/exists_forall_iff.txt"), "--emit-model"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["oracle"] == false);
  CHECK_NOTHROW(model_from_json(j["model"]));
}

TEST_CASE("validate lists violations") {
  CHECK(run({"validate", "-m", fx("share_intransitive.json")}).out == "ok\n");
  const std::string bad =
      R"({"agents":["a"],"worlds":["w","w"],"relations":{"a":[["w","x"]]},"valuation":{}})";
  const auto path = std::filesystem::temp_directory_path() / "epimc_cli_bad.json";
  std::ofstream(path) << bad;
  const Result r = run({"--json", "validate", "-m", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["violations"].size() >= 2);
}

TEST_CASE("query files report each formula") {
  const auto path = std::filesystem::temp_directory_path() / "epimc_cli_queries.txt";
  std::ofstream(path) << "# two worlds\n[! p] K a p\nK a p\n";
  const Result r = run({"check", "-m", fx("announce_two_worlds.json"), "-w", "w", "-q", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 1);
  CHECK(r.out == "true\t[! p] K a p\nfalse\tK a p\n");
}

TEST_CASE("check and global-check agree; output is deterministic") {
  std::mt19937_64 rng(base_seed(1201));
  for (int k = 0; k < 25; ++k) {
    const KripkeModel m = random_model(rng, {5, 2, 2});
    const TempModel file(m, std::to_string(k));
    const std::string f = print_formula(random_formula(rng, {3, Layer::PartialComm, m.agents(), {"p", "q"}}));
    const Result g = run({"global-check", "-m", file.path(), "-f", f});
    REQUIRE(g.code == 0);
    CHECK(run({"global-check", "-m", file.path(), "-f", f}).out == g.out);
    const json worlds = json::parse(g.out);
    for (const auto& name : m.world_names()) {
      const Result c = run({"check", "-m", file.path(), "-w", name, "-f", f});
      const bool listed = std::find(worlds.begin(), worlds.end(), name) != worlds.end();
      CHECK(c.code == (listed ? 0 : 1));
    }
  }
}
