#pragma once

#include <cstdint>
#include <string>

#include "brauer/graph.hpp"

namespace brauer {

// Covering with half-edges H × Z/n; the lift of (h, i) has index h * n + i.
struct CoveredGraph {
  GradedGraph base;
  BrauerGraph total;
  int group_order = 1;

  HalfEdge lift(HalfEdge h, int sheet) const;
  HalfEdge base_of(HalfEdge x) const { return x / group_order; }
  int sheet_of(HalfEdge x) const { return x % group_order; }
};

CoveredGraph cover(const GradedGraph& g);

// Admissible grading concentrated on one half-edge per vertex, chosen so the
// moves of the subset are compatible with it; zero grading for skew graphs.
Grading default_grading(const BrauerGraph& g, const HalfEdgeSet& subset);
// A uniformly scattered valid grading, for property tests.
Grading random_grading(const BrauerGraph& g, std::uint64_t seed);

HalfEdgeSet lift_subset(const CoveredGraph& c, const HalfEdgeSet& subset);

struct CommuteReport {
  bool commutes = false;
  std::string detail;
};

CommuteReport check_cover_commutes(const GradedGraph& g, const HalfEdgeSet& subset);

}  // namespace brauer
