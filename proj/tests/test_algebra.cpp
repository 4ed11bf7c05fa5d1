#include <random>

#include "brauer/models.hpp"
#include "brauer/moves.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;

namespace {

bool same_products(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.dim() != b.dim()) return false;
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y)
      if (!(a.product(x, y) == b.product(x, y))) return false;
  return true;
}

bool symmetric(const std::vector<std::vector<int>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

// Gram matrix of the socle form ⟨x, y⟩ = sum of socle coordinates of xy.
std::vector<std::vector<Rational>> socle_form(const BgaModel& m) {
  const int n = m.table.dim();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int s : m.socle) gram[x][y] += m.table.product(x, y).at(s);
  return gram;
}

BrauerGraph fuzz_graph(std::uint64_t seed, bool skew) {
  RandomGraphOptions o;
  o.halfedges = 4 + 2 * static_cast<int>(seed % 3) + (skew ? static_cast<int>(seed % 2) : 0);
  o.allow_skew = skew;
  o.max_multiplicity = 1 + static_cast<int>(seed % 3);
  return gen_random(seed, o);
}

}  // namespace

TEST_CASE("normal-form algebra of the ordinary running example") {
  auto g = fixtures::ex1();
  auto m = bga_model(g);
  CHECK(m.table.dim() == 27);
  CHECK(bga_dimension_formula(g) == 27);
  CHECK(check_algebra_laws(m.table).ok);
  CHECK(cartan(m.table) == std::vector<std::vector<int>>{{3, 1, 1, 1}, {1, 3, 3, 1}, {1, 3, 3, 1}, {1, 1, 1, 2}});
  CHECK(radical(m.table).size() == 23);

  auto model = ordinary_model(g);
  auto arrow = [&](const char* name) {
    for (std::size_t a = 0; a < model.quiver.arrows.size(); ++a)
      if (model.quiver.arrows[a].h == g.index(name)) return model.arrow_images[a];
    throw Error("no arrow");
  };
  CHECK_FALSE(m.table.multiply(arrow("1-"), arrow("2-")).empty());
  CHECK(m.table.multiply(arrow("1+"), arrow("2-")).empty());
  // α_{1+}² equals the special 1- cycle, which is the socle of edge 1.
  CHECK(m.table.multiply(arrow("1+"), arrow("1+")) == SparseVector::unit(m.socle[0]));
}

TEST_CASE("loop algebra") {
  auto g = from_cycles({"a", "b"}, {{"a", "b"}}, {}, {{"a", 2}});
  auto m = bga_model(g);
  CHECK(m.table.dim() == 3);
  CHECK(check_algebra_laws(m.table).ok);
  const auto a = SparseVector::unit(m.path[0][0]);
  CHECK(m.table.multiply(a, a) == SparseVector::unit(m.socle[0]));
}

TEST_CASE("semisimple table has identity cartan matrix") {
  AlgebraTable t({"e1", "e2"}, {0, 1}, {"1", "2"});
  t.set_product(0, 0, SparseVector::unit(0));
  t.set_product(1, 1, SparseVector::unit(1));
  t.finalize();
  CHECK(cartan(t) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(radical(t).empty());
  CHECK(same_products(skew_group_table(t, GroupAction::trivial(2)), t));
  auto triv = trivial_extension(t);
  CHECK(triv.dim() == 4);
  CHECK(check_algebra_laws(triv).ok);
}

TEST_CASE("trivial extension of the ground field") {
  AlgebraTable k({"1"}, {0}, {"v"});
  k.set_product(0, 0, SparseVector::unit(0));
  k.finalize();
  auto t = trivial_extension(k);
  CHECK(t.dim() == 2);
  CHECK(t.product(1, 1).empty());
  CHECK(t.product(0, 1) == SparseVector::unit(1));
  CHECK(t.product(1, 0) == SparseVector::unit(1));
}

TEST_CASE("socle form is symmetric and nondegenerate") {
  std::vector<BrauerGraph> graphs{fixtures::ex1(), from_cycles({"a", "b"}, {{"a", "b"}}, {}, {{"a", 2}})};
  for (std::uint64_t seed = 1; graphs.size() < 5; ++seed) graphs.push_back(fuzz_graph(seed, false));
  for (const auto& g : graphs) {
    auto m = bga_model(g);
    auto gram = socle_form(m);
    for (int x = 0; x < m.table.dim(); ++x)
      for (int y = 0; y < m.table.dim(); ++y) CHECK(gram[x][y] == gram[y][x]);
    CHECK(determinant(gram) != 0);
  }
}

TEST_CASE("skew group algebra and truncation of the ordinary covering") {
  auto c = cover(fixtures::ex1_graded());
  auto tm = truncation_model(c);
  CHECK(tm.skew.dim() == 2 * tm.total.table.dim());
  CHECK(check_algebra_laws(tm.skew, 100, 7).ok);
  CHECK(tm.model.table.dim() == 27);
  CHECK(symmetric(cartan(tm.model.table)));
  CHECK(cartan(tm.model.table) == cartan(bga_table(fixtures::ex1())));

  auto a = bga_table(fixtures::ex1());
  std::vector<Element> units;
  for (int v = 0; v < a.vertex_count(); ++v) units.push_back(a.idempotent(v));
  auto whole = truncate(a, units, a.vertex_labels());
  CHECK(whole.table.dim() == a.dim());
  CHECK(cartan(whole.table) == cartan(a));
  CHECK(check_algebra_laws(whole.table).ok);
  CHECK_THROWS(truncate(a, {a.idempotent(0), a.idempotent(0)}, {"x", "y"}));
}

TEST_CASE("skew model of the second running example") {
  auto g = fixtures::ex2();
  auto c = cover(fixtures::ex2_graded());
  auto model = truncation_model(c).model;
  CHECK(model.table.dim() == truncation_dimension_formula(c));
  CHECK(model.table.dim() == 63);
  CHECK(check_algebra_laws(model.table, 2000, 3).ok);
  CHECK(symmetric(cartan(model.table)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto other = cover({g, random_grading(g, seed)});
    CHECK(truncation_model(other).model.table.dim() == 63);
  }
}

TEST_CASE("group actions are checked") {
  auto c = cover(fixtures::ex1_graded());
  auto total = bga_model(c.total);
  auto shift = sheet_shift(c, total);
  CHECK(check_action(total.table, shift).ok);
  auto broken = shift;
  std::swap(broken.image[total.path[0][0]], broken.image[total.path[1][0]]);
  CHECK_FALSE(check_action(total.table, broken).ok);
  CHECK_THROWS(skew_group_table(total.table, broken));
}

TEST_CASE("trivial extension of a skew group algebra") {
  auto small = from_cycles({"1+", "1-", "2"}, {{"1+", "1-"}}, {{"1-", "2"}}, {});
  auto c = cover({small, zero_grading(small)});
  auto cut = cover_cut(c, fixtures::named(small, {"1-"}));
  CHECK(cut.algebra.dim() == 5);
  CHECK(check_action(cut.algebra.table(), cut.action).ok);
  auto report = check_trivial_extension_isomorphism(cut.algebra.table(), cut.action);
  CHECK_MESSAGE(report.isomorphism, report.detail);
  CHECK(trivial_extension(skew_group_table(cut.algebra.table(), cut.action)).dim() == 20);

  PathQuotient base_cut(admissible_cut(small, fixtures::named(small, {"1-"})), nonzero_path_bound(small) + 1);
  CHECK(trivial_extension(base_cut.table()).dim() == algebra_model(small).table.dim());
}

TEST_CASE("fuzz: normal-form algebras against formula and oracle") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto g = fuzz_graph(seed, false);
    auto m = bga_model(g);
    CHECK(m.table.dim() == bga_dimension_formula(g));
    CHECK(symmetric(cartan(m.table)));
    if (m.table.dim() > 40) continue;
    CHECK(check_algebra_laws(m.table).ok);
    PathQuotient oracle(presentation(g), nonzero_path_bound(g) + 1);
    CHECK(oracle.dim() == m.table.dim());
    CHECK(cartan(oracle.table()) == cartan(m.table));
  }
}

TEST_CASE("fuzz: cartan determinant survives moves") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 40; ++seed) {
    auto g = fuzz_graph(seed, seed % 2 == 1);
    auto subset = fixtures::random_subset(g, rng);
    auto graded = GradedGraph{g, default_grading(g, subset)};
    auto moved = move_set(graded, subset).graph;
    auto before = algebra_model(g);
    if (before.table.dim() > 40) continue;
    ++checked;
    auto after = algebra_model(moved);
    CHECK(std::llabs(cartan_determinant(before.table)) == std::llabs(cartan_determinant(after.table)));
  }
}
