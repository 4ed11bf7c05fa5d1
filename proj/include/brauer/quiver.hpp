#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/covering.hpp"
#include "brauer/graph.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

// Copy index of a quiver vertex: edges of ordinary half-edges have a single
// vertex (copy -1); an ι-fixed half-edge gives the two vertices [h]_0, [h]_1.
constexpr int kNoCopy = -1;

struct QuiverVertex {
  int edge = 0;
  int copy = kNoCopy;
  std::string label;
};

struct Arrow {
  HalfEdge h = 0;
  int source = 0;  // vertex indices
  int target = 0;
  std::string label;
};

struct Quiver {
  std::vector<QuiverVertex> vertices;
  std::vector<Arrow> arrows;

  int vertex(int edge, int copy) const;  // throws if absent
  std::optional<int> arrow(HalfEdge h, int source, int target) const;
  std::optional<int> vertex_by_label(const std::string& label) const;
};

// Arrows in traversal order: arrows[0] is applied first. A path with no
// arrows is the idempotent at `source`.
struct Path {
  int source = 0;
  std::vector<int> arrows;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

int path_target(const Quiver& q, const Path& p);

struct Relation {
  std::string kind;  // "I", "II", ... as in the generating lists
  std::vector<std::pair<Rational, Path>> terms;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

// `symbol` names the arrows: "a" for the Brauer graph algebra, "b" for the
// truncation of the covering.
Quiver quiver(const BrauerGraph& g, const std::string& symbol = "a");
// Copies of the quiver vertex of the edge containing h.
std::vector<int> copies(const BrauerGraph& g, HalfEdge h);

// Special cycles at [h]_copy (copy ignored for ordinary edges).
std::vector<Path> special_cycles(const BrauerGraph& g, const Quiver& q, HalfEdge h, int copy = kNoCopy);
int cross_count(const BrauerGraph& g, HalfEdge h);  // |H_× ∩ σ-orbit of h|

std::vector<Relation> relations(const BrauerGraph& g, const Quiver& q);
Presentation presentation(const BrauerGraph& g);
Presentation truncation_presentation(const CoveredGraph& c);

// Δ must hold one half-edge of every arrow-carrying σ-orbit; multiplicities must be one.
Presentation admissible_cut(const BrauerGraph& g, const HalfEdgeSet& delta);
bool is_gentle(const Presentation& p);

// Longest path length that can be nonzero in the algebra of the presentation.
int nonzero_path_bound(const BrauerGraph& g);

std::string format_path(const Quiver& q, const Path& p);
std::string format_relation(const Quiver& q, const Relation& r);

}  // namespace brauer
