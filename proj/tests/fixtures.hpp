#pragma once

#include <random>

#include "brauer/graph.hpp"

namespace fixtures {

inline brauer::BrauerGraph ex1() {
  return brauer::from_cycles({"1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"},
                             {{"1+", "1-"}, {"2+", "2-"}, {"3+", "3-"}, {"4+", "4-"}},
                             {{"1-", "4-", "3-", "2-"}, {"2+", "3+"}},
                             {{"1+", 2}, {"2+", 2}, {"3+", 2}});
}

inline brauer::Grading ex1_grading(const brauer::BrauerGraph& g) {
  brauer::Grading d{2, std::vector<int>(g.size(), 0)};
  d.degrees[g.index("1+")] = 1;
  d.degrees[g.index("3+")] = 1;
  return d;
}

inline brauer::GradedGraph ex1_graded() {
  auto g = ex1();
  auto d = ex1_grading(g);
  return {g, d};
}

inline brauer::BrauerGraph ex2(bool unit_multiplicity = false) {
  std::map<std::string, int> m;
  if (!unit_multiplicity) m = {{"4-", 3}, {"3", 2}, {"2", 2}, {"1-", 2}};
  return brauer::from_cycles({"1+", "1-", "2", "3", "4+", "4-", "5+", "5-"},
                             {{"1+", "1-"}, {"4+", "4-"}, {"5+", "5-"}},
                             {{"1-", "3", "2"}, {"1+", "4+", "5+"}}, m);
}

inline brauer::GradedGraph ex2_graded(bool unit_multiplicity = false) {
  auto g = ex2(unit_multiplicity);
  return {g, brauer::zero_grading(g)};
}

inline brauer::HalfEdgeSet named(const brauer::BrauerGraph& g, std::initializer_list<const char*> names) {
  brauer::HalfEdgeSet s;
  for (const char* n : names) s.insert(g.index(n));
  return s;
}

// Union of randomly chosen edges, so automatically ι-stable.
inline brauer::HalfEdgeSet random_subset(const brauer::BrauerGraph& g, std::mt19937_64& rng, double p = 0.45) {
  brauer::HalfEdgeSet s;
  std::bernoulli_distribution take(p);
  for (const brauer::Edge& e : g.edges()) {
    if (!take(rng)) continue;
    s.insert(e.first);
    s.insert(e.second);
  }
  return s;
}

}  // namespace fixtures
