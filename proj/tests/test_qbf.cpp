#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "epimc/error.hpp"
#include "epimc/generators.hpp"
#include "epimc/qbf.hpp"
#include "epimc/quantified.hpp"
#include "epimc/semantics.hpp"
#include "epimc/syntax.hpp"
#include "epimc/updates.hpp"

using namespace epimc;
using namespace epimc::testing;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool encoded_verdict(const QbfInstance& q) {
  const QbfEncoding e = encode(q);
  return check_quantified(e.model, e.formula);
}

}  // namespace

TEST_CASE("brute-force evaluator") {
  CHECK(eval_qbf(parse_qbf("exists x1 : x1")));
  CHECK_FALSE(eval_qbf(parse_qbf("forall x1 : x1")));
  CHECK(eval_qbf(parse_qbf("forall x1 exists x2 : (x1 <-> x2)")));
  CHECK_FALSE(eval_qbf(parse_qbf("exists x1 forall x2 : (x1 <-> x2)")));
  CHECK(eval_qbf(parse_qbf("forall x y : ((x & y) -> x)")));
}

TEST_CASE("QBF parsing and validation") {
  const QbfInstance q = parse_qbf("forall x1 exists x2 : (x1 <-> x2)");
  CHECK(q.variables == std::vector<std::string>{"x1", "x2"});
  CHECK(q.quantifiers == std::vector<Quantifier>{Quantifier::Forall, Quantifier::Exists});
  CHECK(parse_qbf(print_qbf(q)).matrix == q.matrix);

  CHECK_THROWS_AS(parse_qbf("forall x1 x1"), SyntaxError);
  CHECK_THROWS_AS(parse_qbf("x1 : x1"), SyntaxError);
  CHECK_THROWS_AS(parse_qbf("forall x1 : (x1 &"), SyntaxError);
  CHECK_THROWS_AS(parse_qbf("forall x1 : x2"), InputError);
  CHECK_THROWS_AS(parse_qbf("forall x1 exists x1 : x1"), InputError);
  CHECK_THROWS_AS(parse_qbf("forall x1 : K a x1"), InputError);
  CHECK_THROWS_AS(parse_qbf(" : true"), InputError);
}

TEST_CASE("encoding shape") {
  const QbfEncoding e = encode(parse_qbf("exists x1 : x1"));
  const KripkeModel& m = e.model.model;
  CHECK(m.world_count() == 3);
  CHECK(m.world_name(e.model.point) == "w0");
  CHECK(m.relation("b") == Relation::identity(3));
  CHECK(m.relation("a").is_reflexive());
  CHECK(m.relation("a").is_symmetric());
  CHECK(m.relation("a").pair_count() == 3 + 4);
  CHECK(m.atoms_at(m.world("w1_1")) == AtomSet{"p1"});
  CHECK(m.atoms_at(m.world("w1_0")) == AtomSet{"q1"});

  const Formula khat_p = Formula::possible({"a"}, Formula::atom("p1"));
  CHECK(e.formula ==
        Formula::arbitrary_comm_diamond({"a", "b"}, Formula::conjunction(chosen(1, 1), khat_p)));
  CHECK(encoded_verdict(parse_qbf("exists x1 : x1")));
}

TEST_CASE("encoding of larger instances") {
  const QbfEncoding e = encode(parse_qbf("forall x1 exists x2 forall x3 : ((x1 | x3) -> x2)"));
  const KripkeModel& m = e.model.model;
  CHECK(m.world_count() == 7);
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::string one = "w" + std::to_string(i) + "_1";
    const std::string zero = "w" + std::to_string(i) + "_0";
    CHECK(m.relation("a").test(0, m.world(one)));
    CHECK(m.relation("a").test(m.world(zero), 0));
    CHECK_FALSE(m.relation("a").test(m.world(one), m.world(zero)));
  }
}

TEST_CASE("initially nothing is chosen") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::string text = "forall";
    for (std::size_t i = 1; i <= n; ++i) text += " x" + std::to_string(i);
    const QbfEncoding e = encode(parse_qbf(text + " : true"));
    CHECK(eval(e.model, chosen(0, n)));
    for (std::size_t k = 1; k <= n; ++k) CHECK_FALSE(eval(e.model, chosen(k, n)));
  }
}

TEST_CASE("chosen_n marks restrictions keeping one world per variable") {
  const QbfEncoding e = encode(parse_qbf("forall x1 x2 x3 : true"));
  const KripkeModel& m = e.model.model;
  const RestrictionEnumeration r = enumerate_restrictions(m, {"a", "b"});
  int matching = 0;
  for (std::uint64_t k = 0; k < r.size(); ++k) {
    const KripkeModel n = r.restriction(k);
    bool one_each = true;
    for (std::size_t i = 1; i <= 3; ++i) {
      const bool one = n.relation("a").test(0, n.world("w" + std::to_string(i) + "_1"));
      const bool zero = n.relation("a").test(0, n.world("w" + std::to_string(i) + "_0"));
      one_each = one_each && (one != zero);
    }
    const bool holds = eval(PointedModel(n, WorldId{0}), chosen(3, 3));
    CHECK(holds == one_each);
    matching += holds ? 1 : 0;
  }
  CHECK(matching == 8);
}

TEST_CASE("tautology and the two-variable example") {
  CHECK(encoded_verdict(parse_qbf("forall x1 : (x1 | ~x1)")));
  CHECK(encoded_verdict(parse_qbf("forall x1 exists x2 : (x1 <-> x2)")));
  CHECK_FALSE(encoded_verdict(parse_qbf("exists x1 forall x2 : (x1 <-> x2)")));
}

TEST_CASE("fixture instances agree with the oracle") {
  for (const auto& entry : std::filesystem::directory_iterator(fixture_path("qbf"))) {
    const QbfInstance q = parse_qbf(slurp(entry.path()));
    CHECK_MESSAGE(eval_qbf(q) == encoded_verdict(q), entry.path().filename().string());
  }
}

TEST_CASE("encoding size is polynomial") {
  std::size_t previous_model = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::string text = "exists";
    std::string matrix = "x1";
    for (std::size_t i = 1; i <= n; ++i) text += " x" + std::to_string(i);
    for (std::size_t i = 2; i <= n; ++i) matrix = "(" + matrix + " & x" + std::to_string(i) + ")";
    const QbfEncoding e = encode(parse_qbf(text + " : " + matrix));
    const std::size_t model = model_size(e.model.model);
    CHECK(model == (2 * n + 1) + (2 * n + 1 + 4 * n) + (2 * n + 1) + 2 * n);
    CHECK(model > previous_model);
    previous_model = model;
    CHECK(formula_size(e.formula) <= 200 * n * n + 50);
  }
}

TEST_CASE("random instances with three variables") {
  std::mt19937_64 rng(base_seed(901));
  for (int k = 0; k < 15; ++k) {
    QbfInstance q{{"x1", "x2", "x3"}, {}, Formula::top()};
    for (int i = 0; i < 3; ++i) q.quantifiers.push_back(rng() % 2 ? Quantifier::Forall : Quantifier::Exists);
    q.matrix = random_formula(rng, {3, Layer::Boolean, {}, q.variables});
    CHECK_MESSAGE(eval_qbf(q) == encoded_verdict(q), print_qbf(q));
  }
}
