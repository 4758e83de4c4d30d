#include <random>

#include "doctest.h"
#include "support.hpp"

#include "epimc/bisim.hpp"
#include "epimc/error.hpp"
#include "epimc/generators.hpp"
#include "epimc/semantics.hpp"
#include "epimc/syntax.hpp"
#include "epimc/updates.hpp"

using namespace epimc;
using namespace epimc::testing;

namespace {

std::vector<std::pair<WorldId, WorldId>> named(const KripkeModel& l, const KripkeModel& r,
                                               const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<WorldId, WorldId>> out;
  for (const auto& [x, y] : pairs) out.emplace_back(l.world(x), r.world(y));
  return out;
}

// All unions of blocks.
std::vector<WorldSet> closed_sets(const Partition& p, std::size_t n) {
  std::vector<WorldSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << p.size()); ++mask) {
    WorldSet a(n);
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (mask & (std::size_t{1} << b)) a |= p.blocks[b];
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("worlds with distinct valuations form singleton classes") {
  const KripkeModel m = fixture("share_intransitive.json");
  CHECK(bisim_classes(m).size() == 3);
}

TEST_CASE("two-world model beside its announced copy") {
  const KripkeModel m = fixture("announce_two_worlds.json");
  const KripkeModel u = disjoint_union(m, pa_edge_update(m, m.extension("p")));
  const Partition p = bisim_classes(u);
  CHECK_FALSE(p.same_block(u.world("1:u"), u.world("2:u")));
  CHECK_FALSE(p.same_block(u.world("1:w"), u.world("2:w")));

  const PairSet z = naive_bisimulation(u, u, u.atoms());
  for (WorldId x = 0; x < 4; ++x) {
    for (WorldId y = 0; y < 4; ++y) CHECK(p.same_block(x, y) == (z.count({x, y}) == 1));
  }
}

TEST_CASE("first fixture pair: the stated witness") {
  const KripkeModel m = fixture("pair1_m.json");
  const KripkeModel mp = fixture("pair1_mprime.json");
  const AtomSet q{"p"};
  CHECK(is_collective_bisimulation(m, mp, named(m, mp, {{"w", "w1'"}, {"w", "w2'"}, {"u", "u'"}}), q));
  CHECK_FALSE(is_collective_bisimulation(
      m, mp, named(m, mp, {{"w", "w1'"}, {"w", "w2'"}, {"u", "u'"}}), AtomSet{"p", "q"}));

  const KripkeModel u = disjoint_union(m, mp);
  const Partition p = bisim_classes(u, q);
  CHECK(p.size() == 2);
  CHECK(p.same_block(u.world("1:w"), u.world("2:w1'")));
  CHECK(p.same_block(u.world("1:w"), u.world("2:w2'")));
  CHECK(p.same_block(u.world("1:u"), u.world("2:u'")));
  CHECK(is_bisimilar(PointedModel(m, "w"), PointedModel(mp, "w1'"), q));
}

TEST_CASE("second fixture pair is bisimilar; the listed pairs need two more") {
  const KripkeModel m = fixture("pair2_m.json");
  const KripkeModel mp = fixture("pair2_mprime.json");
  const AtomSet q{"p"};
  CHECK(is_bisimilar(PointedModel(m, "w1"), PointedModel(mp, "w1'"), q));
  CHECK_FALSE(is_bisimilar(PointedModel(m, "w1"), PointedModel(mp, "w1'")));

  const auto listed = named(m, mp, {{"w1", "w1'"}, {"w2", "w2'"}, {"u", "u1'"}, {"u", "u2'"}});
  CHECK_FALSE(is_collective_bisimulation(m, mp, listed, q));
  auto completed = listed;
  const auto extra = named(m, mp, {{"w1", "w2'"}, {"w2", "w1'"}});
  completed.insert(completed.end(), extra.begin(), extra.end());
  CHECK(is_collective_bisimulation(m, mp, completed, q));
}

TEST_CASE("pointed bisimilarity basics") {
  const KripkeModel m = fixture("share_intransitive.json");
  for (WorldId w = 0; w < m.world_count(); ++w) {
    CHECK(is_bisimilar(PointedModel(m, w), PointedModel(m, w)));
  }
  const KripkeModel m33 = fixture("announce_two_worlds.json");
  const WorldSet t = m33.extension("p");
  CHECK(is_bisimilar(PointedModel(pa_edge_update(m33, t), "w"),
                     PointedModel(pa_world_update(m33, t), "w")));
}

TEST_CASE("partition refinement agrees with the naive greatest bisimulation") {
  std::mt19937_64 rng(base_seed(501));
  for (int k = 0; k < 80; ++k) {
    const KripkeModel m = random_model(rng, {6, 3, 2, 1, 0.35});
    const Partition p = bisim_classes(m);
    const PairSet z = naive_bisimulation(m, m, m.atoms());
    for (WorldId x = 0; x < m.world_count(); ++x) {
      for (WorldId y = 0; y < m.world_count(); ++y) {
        CHECK(p.same_block(x, y) == (z.count({x, y}) == 1));
      }
    }
  }
}

TEST_CASE("classes refine atoms and are stable under every group relation") {
  std::mt19937_64 rng(base_seed(503));
  for (int k = 0; k < 80; ++k) {
    const KripkeModel m = random_model(rng, {7, 3, 3});
    const Partition p = bisim_classes(m);
    for (const auto& block : p.blocks) {
      const auto ids = block.ids();
      for (WorldId x : ids) CHECK(m.atoms_at(x) == m.atoms_at(ids.front()));
      for (const auto& g : nonempty_groups(m.agents())) {
        const Relation r = group_relation(m, g);
        for (const auto& target : p.blocks) {
          const bool first = r.row_set(ids.front()).intersects(target);
          for (WorldId x : ids) CHECK(r.row_set(x).intersects(target) == first);
        }
      }
    }
  }
}

TEST_CASE("quotients") {
  const KripkeModel m = fixture("share_intransitive.json");
  CHECK(quotient(m) == m);

  ModelDescription twins;
  twins.agents = {"a"};
  twins.worlds = {"x", "y"};
  twins.valuation = {{"x", {"p"}}, {"y", {"p"}}};
  CHECK(quotient(KripkeModel::from_description(twins)).world_count() == 1);

  const KripkeModel c = fixture("quotient_counterexample.json");
  const KripkeModel qc = quotient(c);
  CHECK(qc.world_count() == 2);
  CHECK_FALSE(is_bisimilar(PointedModel(c, "x"), PointedModel(qc, "x")));
  // D_{a,b} false separates them: x has no joint successor, its class does.
  const Formula f = parse_formula("D{a,b} false");
  CHECK(eval(PointedModel(c, "x"), f));
  CHECK_FALSE(eval(PointedModel(qc, "x"), f));
}

TEST_CASE("random search finds models not bisimilar to their quotient") {
  std::mt19937_64 rng(base_seed(505));
  int found = 0;
  for (int k = 0; k < 4000 && found < 3; ++k) {
    const KripkeModel m = random_model(rng, {4, 2, 1, 2, 0.3, Closure::None});
    const KripkeModel qm = quotient(m);
    for (WorldId w = 0; w < m.world_count(); ++w) {
      const WorldId block = bisim_classes(m).block_of[w];
      if (!is_bisimilar(PointedModel(m, w), PointedModel(qm, block))) {
        ++found;
        break;
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("distinguishing formulas") {
  const KripkeModel m33 = fixture("announce_two_worlds.json");
  CHECK(distinguishing_formula(m33, m33.world("w"), m33.world("u")) == Formula::atom("p"));
  CHECK(distinguishing_formula(m33, m33.world("u"), m33.world("w")) ==
        Formula::negation(Formula::atom("p")));

  const KripkeModel m = fixture("share_intransitive.json");
  const Formula f = distinguishing_formula(m, m.world("w0"), m.world("u0"));
  CHECK(is_basic(f));
  CHECK(formula_depth(f) == 0);
  CHECK(eval(PointedModel(m, "w0"), f));
  CHECK_FALSE(eval(PointedModel(m, "u0"), f));

  ModelDescription twins;
  twins.agents = {"a"};
  twins.worlds = {"x", "y"};
  CHECK_THROWS_AS(distinguishing_formula(KripkeModel::from_description(twins), 0, 1), NoDistinguisher);
}

TEST_CASE("distinguishing formula needing modal depth") {
  // x and y share atoms; only x sees a p-world.
  ModelDescription d;
  d.agents = {"a", "b"};
  d.worlds = {"x", "y", "s", "t"};
  d.relations["a"] = {{"x", "s"}, {"y", "t"}};
  d.relations["b"] = {{"x", "s"}};
  d.valuation = {{"s", {"p"}}, {"t", {"p"}}};
  const KripkeModel m = KripkeModel::from_description(d);
  const Formula f = distinguishing_formula(m, m.world("x"), m.world("y"));
  CHECK(eval(PointedModel(m, "x"), f));
  CHECK_FALSE(eval(PointedModel(m, "y"), f));
  CHECK(formula_depth(f) >= 1);
}

TEST_CASE("distinguishers pass the evaluation post-check") {
  std::mt19937_64 rng(base_seed(507));
  for (int k = 0; k < 80; ++k) {
    const KripkeModel m = random_model(rng, {6, 3, 2});
    const Partition p = bisim_classes(m);
    for (WorldId x = 0; x < m.world_count(); ++x) {
      for (WorldId y = 0; y < m.world_count(); ++y) {
        if (p.same_block(x, y)) continue;
        const Formula f = distinguishing_formula(m, x, y);
        CHECK(is_basic(f));
        CHECK(eval(PointedModel(m, x), f));
        CHECK_FALSE(eval(PointedModel(m, y), f));
      }
    }
  }
}

TEST_CASE("characteristic topics") {
  const KripkeModel m = fixture("share_intransitive.json");
  CHECK(characteristic_topic(m, m.all_worlds()) == Formula::top());
  CHECK(characteristic_topic(m, WorldSet(3)) == Formula::bottom());
  const WorldSet a = m.world_set({"u0", "u1"});
  CHECK(truthset(m, characteristic_topic(m, a)) == a);
  const WorldSet single = m.world_set({"u1"});
  CHECK(truthset(m, characteristic_topic(m, single)) == single);

  ModelDescription twins;
  twins.agents = {"a"};
  twins.worlds = {"x", "y"};
  const KripkeModel t = KripkeModel::from_description(twins);
  CHECK_THROWS_AS(characteristic_topic(t, t.world_set({"x"})), ClosureError);
}

TEST_CASE("characteristic topics realise every closed set") {
  std::mt19937_64 rng(base_seed(509));
  for (int k = 0; k < 40; ++k) {
    const KripkeModel m = random_model(rng, {6, 3, 2});
    const Partition p = bisim_classes(m);
    for (const WorldSet& a : closed_sets(p, m.world_count())) {
      const Formula chi = characteristic_topic(m, a);
      CHECK(is_basic(chi));
      CHECK(truthset(m, chi) == a);
    }
  }
}
