#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "brauer/graph.hpp"

namespace brauer {

// A run h, σh, ..., σ^r h inside a chosen ι-stable subset, with σ^{r+1}h outside.
struct Sector {
  HalfEdge h = 0;
  int r = 0;
  auto operator<=>(const Sector&) const = default;
};

void require_iota_stable(const BrauerGraph& g, const HalfEdgeSet& subset);

// Sector starting at h for the subset, if any (none when h is outside the
// subset or its whole σ-orbit lies inside).
std::optional<Sector> sector_at(const BrauerGraph& g, const HalfEdgeSet& subset, HalfEdge h);
std::vector<Sector> sectors(const BrauerGraph& g, const HalfEdgeSet& subset);
// Maximal sectors in canonical order: (smallest half-edge of the vertex, h).
std::vector<Sector> maximal_sectors(const BrauerGraph& g, const HalfEdgeSet& subset);

GradedGraph move_sector(const GradedGraph& g, const Sector& s, const HalfEdgeSet& subset);
// Moves the given sectors one after another; each must still be a sector when reached.
GradedGraph move_sectors(const GradedGraph& g, const std::vector<Sector>& order,
                         const HalfEdgeSet& subset);
GradedGraph move_set(const GradedGraph& g, const HalfEdgeSet& subset);
// Same orientation and multiplicity as move_set, without tracking degrees.
BrauerGraph move_set(const BrauerGraph& g, const HalfEdgeSet& subset);

// All half-edges of the named edges.
HalfEdgeSet edges_subset(const BrauerGraph& g, const std::vector<int>& edge_indices);

}  // namespace brauer
