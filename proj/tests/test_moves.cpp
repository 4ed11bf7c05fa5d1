#include <random>

#include "brauer/covering.hpp"
#include "brauer/moves.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;

namespace {

Permutation cycles_perm(const BrauerGraph& g, const Cycles& cycles) {
  return from_cycles(g.names(), {}, cycles).orientation();
}

// Sectors by the defining minimality condition, checked over all candidate r.
std::set<std::pair<int, int>> brute_maximal(const BrauerGraph& g, const HalfEdgeSet& s) {
  std::set<std::pair<int, int>> out;
  for (int h : s) {
    int len = static_cast<int>(g.sigma_orbit(h).size());
    for (int r = 0; r + 1 < len; ++r) {
      bool inside = true;
      for (int i = 0; i <= r; ++i) inside &= s.count(g.sigma(h, i)) > 0;
      if (inside && !s.count(g.sigma(h, r + 1)) && !s.count(g.sigma(h, -1))) out.insert({h, r});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("maximal sectors of the running examples") {
  auto g = fixtures::ex1();
  auto s = maximal_sectors(g, fixtures::named(g, {"1+", "1-", "2+", "2-"}));
  REQUIRE(s.size() == 2);
  std::set<std::pair<std::string, int>> got;
  for (auto& x : s) got.insert({g.name(x.h), x.r});
  CHECK(got == std::set<std::pair<std::string, int>>{{"2-", 1}, {"2+", 0}});

  auto g2 = fixtures::ex2();
  auto s2 = maximal_sectors(g2, fixtures::named(g2, {"1+", "1-", "4+", "4-"}));
  std::set<std::pair<std::string, int>> got2;
  for (auto& x : s2) got2.insert({g2.name(x.h), x.r});
  // σ^{-1}(4+) = 1+ lies in the subset, so the run at that vertex starts at 1+.
  CHECK(got2 == std::set<std::pair<std::string, int>>{{"1-", 0}, {"1+", 1}});

  CHECK(maximal_sectors(g, {}).empty());
  CHECK_THROWS(sectors(g, fixtures::named(g, {"1+"})));
}

TEST_CASE("move of the ordinary running example") {
  auto g = fixtures::ex1_graded();
  auto subset = fixtures::named(g.graph, {"1+", "1-", "2+", "2-"});
  auto moved = move_set(g, subset);
  CHECK(to_cycles(moved.graph, moved.graph.orientation()) ==
        Cycles{{"1-", "4+", "2-"}, {"2+", "4-", "3-"}});
  for (int h = 0; h < g.graph.size(); ++h) {
    const auto& name = moved.graph.name(h);
    CHECK(moved.graph.multiplicity(h) == ((name == "1+" || name == "3+") ? 2 : 1));
  }
  CHECK(moved.grading == g.grading);

  auto& G = g.graph;
  auto expected = cycles_perm(G, {{"2-", "4-"}}) * cycles_perm(G, {{"2+", "3+"}}) * G.orientation() *
                  cycles_perm(G, {{"1-", "4+"}}) * cycles_perm(G, {{"2+", "3-"}});
  CHECK(moved.graph.orientation() == expected);
  CHECK(faces(moved.graph).size() == 2);
  CHECK(oz_invariants(moved.graph) == oz_invariants(G));
}

TEST_CASE("move of the skew running example") {
  auto g = fixtures::ex2_graded();
  auto subset = fixtures::named(g.graph, {"1+", "1-", "4+", "4-"});
  auto moved = move_set(g, subset);
  const auto& M = moved.graph;
  auto expected = from_cycles(M.names(), {}, {{"5-", "1+", "4+"}, {"1-", "2", "3"}}).orientation();
  CHECK(M.orientation() == expected);
  CHECK(M.multiplicities() == g.graph.multiplicities());
  for (int h = 0; h < M.size(); ++h) {
    int want = (M.name(h) == "3" || M.name(h) == "1-") ? 1 : 0;
    CHECK(moved.grading.degrees[h] == want);
  }
  auto& G = g.graph;
  auto decomposed = cycles_perm(G, {{"1-", "3"}}) * cycles_perm(G, {{"1+", "5+"}}) * G.orientation() *
                    cycles_perm(G, {{"4+", "5-"}}) * cycles_perm(G, {{"1-", "3"}});
  CHECK(M.orientation() == decomposed);
}

TEST_CASE("trivial subsets leave the graph alone") {
  auto g = fixtures::ex1_graded();
  CHECK(move_set(g, {}) == g);
  HalfEdgeSet all;
  for (int h = 0; h < g.graph.size(); ++h) all.insert(h);
  CHECK(move_set(g, all) == g);
}

TEST_CASE("special case sector keeps the underlying graph") {
  // ισ^{r+1}h = σ^{-1}h: vertex (a c) where c pairs with the exit half-edge b.
  auto g = from_cycles({"a", "b", "c", "d"}, {{"a", "d"}, {"b", "c"}}, {{"a", "b", "c"}});
  REQUIRE(is_valid(g));
  GradedGraph gg{g, zero_grading(g)};
  auto subset = fixtures::named(g, {"a", "d"});
  auto s = maximal_sectors(g, subset);
  REQUIRE(s.size() == 1);
  CHECK(g.iota(g.sigma(s[0].h, s[0].r + 1)) == g.sigma(s[0].h, -1));
  auto moved = move_sector(gg, s[0], subset);
  CHECK(oz_invariants(moved.graph) == oz_invariants(g));
  std::multiset<std::size_t> a, b;
  for (auto& c : g.orientation().cycles()) a.insert(c.size());
  for (auto& c : moved.graph.orientation().cycles()) b.insert(c.size());
  CHECK(a == b);
}

TEST_CASE("fuzz: sectors, order independence, validity and OZ invariance") {
  std::mt19937_64 rng(7);
  int multi = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    bool skew = seed % 2 == 1;
    auto g = gen_random(seed, {4 + static_cast<int>(seed % 4) * 2, skew, 1 + static_cast<int>(seed % 3)});
    auto subset = fixtures::random_subset(g, rng);
    auto s = maximal_sectors(g, subset);
    std::set<std::pair<int, int>> got;
    for (auto& x : s) got.insert({x.h, x.r});
    REQUIRE(got == brute_maximal(g, subset));

    GradedGraph gg{g, default_grading(g, subset)};
    REQUIRE(grading_is_valid(g, gg.grading));
    auto moved = move_set(gg, subset);
    REQUIRE(is_valid(moved.graph));
    REQUIRE(grading_is_valid(moved.graph, moved.grading));
    auto before = oz_invariants(g), after = oz_invariants(moved.graph);
    if (g.is_skew()) {
      // The derived-invariant list is stated for ordinary graphs; bipartiteness
      // of skew graphs is not preserved (seed 33 is a witness).
      CHECK(before.edge_count == after.edge_count);
      CHECK(before.circ_vertex_count == after.circ_vertex_count);
      CHECK(before.cross_vertex_count == after.cross_vertex_count);
      CHECK(before.multiplicities == after.multiplicities);
    } else {
      CHECK(before == after);
    }
    for (auto& orbit : moved.graph.orientation().cycles())
      for (int h : orbit) CHECK(moved.graph.multiplicity(h) == moved.graph.multiplicity(orbit[0]));

    if (s.size() >= 2) {
      ++multi;
      auto reversed = s;
      std::reverse(reversed.begin(), reversed.end());
      CHECK(move_sectors(gg, reversed, subset) == moved);
    }
    // Random valid gradings behave too.
    GradedGraph rg{g, random_grading(g, seed)};
    auto rmoved = move_set(rg, subset);
    CHECK(grading_is_valid(rmoved.graph, rmoved.grading));
  }
  CHECK(multi > 100);
}
