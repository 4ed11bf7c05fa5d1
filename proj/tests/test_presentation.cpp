#include <random>

#include "brauer/match.hpp"
#include "brauer/models.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace brauer;

namespace {

std::vector<std::string> formatted(const Quiver& q, const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(format_path(q, p));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_relation(const Presentation& p, const std::string& text) {
  for (const auto& r : p.relations)
    if (format_relation(p.quiver, r) == text) return true;
  return false;
}

bool well_formed(const Quiver& q, const Relation& r) {
  const Path& first = r.terms.front().second;
  for (const auto& [c, p] : r.terms) {
    if (p.source != first.source || path_target(q, p) != path_target(q, first)) return false;
    int at = p.source;
    for (int a : p.arrows) {
      if (q.arrows[a].source != at) return false;
      at = q.arrows[a].target;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("quiver of the ordinary running example") {
  auto g = fixtures::ex1();
  Quiver q = quiver(g);
  CHECK(q.vertices.size() == 4);
  CHECK(q.arrows.size() == 7);
  int loops = 0;
  for (const auto& a : q.arrows) {
    CHECK(a.h != g.index("4+"));
    if (a.source == a.target) {
      ++loops;
      CHECK(a.label == "a(1+)");
    }
  }
  CHECK(loops == 1);
  CHECK_THROWS(special_cycles(g, q, g.index("4+")));
  CHECK(formatted(q, special_cycles(g, q, g.index("1-"))) ==
        std::vector<std::string>{"a(2-) a(3-) a(4-) a(1-)"});
}

TEST_CASE("quiver of the skew running example") {
  auto g = fixtures::ex2();
  Quiver q = quiver(g);
  std::vector<std::string> labels;
  for (const auto& v : q.vertices) labels.push_back(v.label);
  CHECK(labels == std::vector<std::string>{"1", "2_0", "2_1", "3_0", "3_1", "4", "5"});
  for (const char* l : {"a(3;0>0)", "a(3;1>0)", "a(3;0>1)", "a(3;1>1)"}) {
    bool found = false;
    for (const auto& a : q.arrows) found |= a.label == l;
    CHECK_MESSAGE(found, l);
  }
  for (const auto& a : q.arrows) CHECK(a.h != g.index("5-"));
  CHECK(formatted(q, special_cycles(g, q, g.index("1-"))) ==
        std::vector<std::string>{"a(2;0>) a(3;0>0) a(1-;>0)", "a(2;0>) a(3;1>0) a(1-;>1)",
                                 "a(2;1>) a(3;0>1) a(1-;>0)", "a(2;1>) a(3;1>1) a(1-;>1)"});
  CHECK(special_cycles(g, q, g.index("2"), 0).size() == 2);
  CHECK_THROWS(special_cycles(g, q, g.index("2")));
}

TEST_CASE("single loop quiver") {
  auto g = from_cycles({"a", "b"}, {{"a", "b"}}, {}, {{"a", 2}});
  Quiver q = quiver(g);
  CHECK(q.vertices.size() == 1);
  REQUIRE(q.arrows.size() == 1);
  CHECK(q.arrows[0].label == "a(a)");
}

TEST_CASE("relations of the running examples") {
  auto p1 = presentation(fixtures::ex1());
  CHECK(has_relation(p1, "[I] a(1+) a(1+) - a(2-) a(3-) a(4-) a(1-)"));
  CHECK(has_relation(p1, "[II] a(1+) a(1+) a(1+)"));
  CHECK(has_relation(p1, "[III] a(1+) a(2-)"));

  auto p2 = presentation(fixtures::ex2());
  CHECK(has_relation(p2, "[I] a(5+) a(4+) a(1+) - 16*(a(2;0>) a(3;0>0) a(1-;>0) a(2;0>) a(3;0>0) a(1-;>0))"));
  CHECK(has_relation(p2, "[V] a(3;0>0) a(1-;>0) - a(3;1>0) a(1-;>1)"));
  CHECK(has_relation(p2, "[V] a(3;0>1) a(1-;>0) - a(3;1>1) a(1-;>1)"));
  int type_one = 0;
  for (const auto& r : p2.relations) type_one += r.kind == "I";
  CHECK(type_one == 5);  // four special 1- cycles against C(1+), plus edge 4

  auto loops = from_cycles({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}, {});
  CHECK(presentation(loops).relations.size() > 0);
  auto bare = from_cycles({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}, {{"a", "c"}}, {});
  auto pb = presentation(bare);
  for (const auto& r : pb.relations) CHECK(well_formed(pb.quiver, r));
}

TEST_CASE("truncation presentation of the coverings") {
  auto c1 = cover(fixtures::ex1_graded());
  auto t1 = truncation_presentation(c1);
  CHECK(t1.quiver.arrows.size() == 7);
  CHECK(has_relation(t1, "[I'] b(1+) b(1+) - b(2-) b(3-) b(4-) b(1-)"));

  auto unit = fixtures::ex1();
  unit = unit.with_multiplicities(std::vector<int>(unit.size(), 1));
  auto c0 = cover({unit, zero_grading(unit)});
  auto t0 = truncation_presentation(c0);
  auto p0 = presentation(unit);
  REQUIRE(t0.relations.size() == p0.relations.size());
  for (std::size_t k = 0; k < p0.relations.size(); ++k)
    CHECK(t0.relations[k].terms.size() == p0.relations[k].terms.size());

  auto c2 = cover(fixtures::ex2_graded());
  auto t2 = truncation_presentation(c2);
  int route = 0, zero = 0;
  for (const auto& r : t2.relations) {
    route += r.kind == "IV'";
    zero += r.kind == "V'";
    CHECK(well_formed(t2.quiver, r));
  }
  CHECK(route == 4);
  CHECK(zero > 0);
}

TEST_CASE("presentations match on the running examples") {
  auto g1 = fixtures::ex1();
  auto r1 = presentations_match(g1, cover(fixtures::ex1_graded()));
  CHECK_MESSAGE(r1.match, r1.detail);
  CHECK(r1.model_dimension == 27);

  auto g2 = fixtures::ex2();
  auto r2 = presentations_match(g2, cover(fixtures::ex2_graded()));
  CHECK_MESSAGE(r2.match, r2.detail);
  CHECK(r2.model_dimension == 63);
  CHECK(r2.quotient_dimension == 63);
}

TEST_CASE("corrupted covering does not match") {
  auto g = fixtures::ex1();
  auto c = cover(fixtures::ex1_graded());
  const auto& t = c.total;
  // Swap the orientation images of two lifted half-edges.
  const HalfEdge x = c.lift(g.index("1-"), 0), y = c.lift(g.index("2+"), 0);
  auto sigma = t.orientation() * Permutation::transposition(t.size(), x, y);
  c.total = t.with_orientation(sigma);
  auto r = presentations_match(g, c);
  CHECK_FALSE(r.match);
  CHECK(!r.detail.empty());
}

TEST_CASE("fuzz: presentations match and special cycle counts") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 60; ++seed) {
    RandomGraphOptions o;
    o.halfedges = 4 + static_cast<int>(seed % 5);
    o.allow_skew = seed % 2 == 1;
    o.max_multiplicity = 1 + static_cast<int>(seed % 3);
    if (!o.allow_skew && o.halfedges % 2) ++o.halfedges;
    auto g = gen_random(seed, o);
    auto p = presentation(g);
    for (const auto& r : p.relations) CHECK(well_formed(p.quiver, r));
    for (HalfEdge h = 0; h < g.size(); ++h) {
      if (!g.induces_arrow(h)) continue;
      const int others = cross_count(g, h) - (g.is_cross(h) ? 1 : 0);
      for (int i : copies(g, h)) CHECK(special_cycles(g, p.quiver, h, i).size() == (1u << others));
    }
    auto c = cover({g, seed % 3 == 0 ? random_grading(g, seed) : default_grading(g, {})});
    if (truncation_dimension_formula(c) > 40) continue;
    ++checked;
    auto r = presentations_match(g, c);
    CHECK_MESSAGE(r.match, "seed " << seed << ": " << r.detail);
  }
}

TEST_CASE("admissible cuts") {
  auto g = fixtures::ex1();
  g = g.with_multiplicities(std::vector<int>(g.size(), 1));
  CHECK_THROWS(admissible_cut(fixtures::ex1(), fixtures::named(fixtures::ex1(), {"1-", "2+"})));
  auto cut = admissible_cut(g, fixtures::named(g, {"1-", "2+"}));
  CHECK(cut.quiver.arrows.size() == 4);
  CHECK(is_gentle(cut));
  CHECK_THROWS(admissible_cut(g, fixtures::named(g, {"1-"})));
  CHECK_THROWS(admissible_cut(g, fixtures::named(g, {"1-", "4-", "2+"})));

  auto skew = fixtures::ex2(true);
  const auto delta = fixtures::named(skew, {"1-", "1+"});
  auto c = cover({skew, zero_grading(skew)});
  auto cc = cover_cut(c, delta);
  CHECK(is_gentle(cc.presentation));
  PathQuotient cut_algebra(admissible_cut(skew, delta), nonzero_path_bound(skew) + 1);
  CHECK(trivial_extension(cut_algebra.table()).dim() == algebra_model(skew).table.dim());
}
