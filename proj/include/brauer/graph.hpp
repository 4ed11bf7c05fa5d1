#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/permutation.hpp"

namespace brauer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-edges are indices into the graph's name table.
using HalfEdge = int;
using HalfEdgeSet = std::set<HalfEdge>;

struct Edge {
  HalfEdge first;
  HalfEdge second;  // equal to first for an ι-fixed half-edge
  bool degenerate() const { return first == second; }
};

// A (possibly skew) Brauer graph as a combinatorial map (H, ι, σ, m).
class BrauerGraph {
 public:
  BrauerGraph() = default;
  BrauerGraph(std::vector<std::string> names, Permutation pairing, Permutation orientation,
              std::vector<int> multiplicity);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(HalfEdge h) const { return names_.at(h); }
  HalfEdge index(std::string_view name) const;  // throws Error for unknown names
  bool contains(std::string_view name) const;

  const Permutation& pairing() const { return pairing_; }
  const Permutation& orientation() const { return orientation_; }
  const std::vector<int>& multiplicities() const { return multiplicity_; }
  int multiplicity(HalfEdge h) const { return multiplicity_.at(h); }

  HalfEdge iota(HalfEdge h) const { return pairing_(h); }
  HalfEdge sigma(HalfEdge h, int k = 1) const { return orientation_.power(h, k); }

  bool is_cross(HalfEdge h) const { return pairing_.fixes(h); }
  bool is_skew() const;
  int multiplicity_lcm() const;
  // Half-edges that are neither σ-fixed nor σ-fixed with multiplicity one.
  bool induces_arrow(HalfEdge h) const;
  std::vector<HalfEdge> sigma_orbit(HalfEdge h) const { return orientation_.orbit(h); }

  // Edges ordered by their smallest half-edge.
  std::vector<Edge> edges() const;
  int edge_of(HalfEdge h) const;
  std::string edge_label(const Edge& e) const;

  BrauerGraph with_orientation(Permutation sigma) const;
  BrauerGraph with_multiplicities(std::vector<int> m) const;

  // Equality as labeled maps: same names, same images, same multiplicities.
  bool operator==(const BrauerGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, HalfEdge, std::less<>> lookup_;
  Permutation pairing_;
  Permutation orientation_;
  std::vector<int> multiplicity_;
};

// Degrees are canonical residues in [0, modulus).
struct Grading {
  int modulus = 1;
  std::vector<int> degrees;
  bool operator==(const Grading&) const = default;
};

struct GradedGraph {
  BrauerGraph graph;
  Grading grading;
  bool operator==(const GradedGraph&) const = default;
};

enum class ViolationKind {
  PairingNotInvolution,
  NonPositiveMultiplicity,
  MultiplicityNotConstant,
  FixedByPairingAndOrientation,
  ExcludedComponent,
};

struct Violation {
  ViolationKind kind;
  std::vector<HalfEdge> halfedges;
  std::string message;
};

std::vector<Violation> validate(const BrauerGraph& g);
bool is_valid(const BrauerGraph& g);
std::string describe(const BrauerGraph& g, const Violation& v);

struct Vertex {
  std::vector<HalfEdge> halfedges;  // σ-orbit in cyclic order, or the single ι-fixed half-edge
  int multiplicity = 1;
  bool cross = false;
};

struct VertexSet {
  std::vector<Vertex> circ;
  std::vector<Vertex> cross;
};

VertexSet vertices(const BrauerGraph& g);

struct Face {
  std::vector<HalfEdge> halfedges;
  int perimeter() const { return static_cast<int>(halfedges.size()); }
};

// Orbits of σ∘ι. Throws for skew graphs.
std::vector<Face> faces(const BrauerGraph& g);

struct OZInvariants {
  int edge_count = 0;
  int circ_vertex_count = 0;
  int cross_vertex_count = 0;
  int face_count = 0;  // -1 for skew graphs
  std::multiset<int> perimeters;
  std::multiset<int> multiplicities;
  bool bipartite = true;
  bool operator==(const OZInvariants&) const = default;
};

OZInvariants oz_invariants(const BrauerGraph& g);

// Connected components as sorted half-edge lists.
std::vector<std::vector<HalfEdge>> components(const BrauerGraph& g);

// Required vertex sum of an admissible grading at the σ-orbit of h.
int required_vertex_degree(const BrauerGraph& g, HalfEdge h);
int grading_modulus(const BrauerGraph& g);
// Admissible (ordinary) or 0-homogeneous (skew) with the right modulus.
bool grading_is_valid(const BrauerGraph& g, const Grading& d);
Grading zero_grading(const BrauerGraph& g);

using Cycles = std::vector<std::vector<std::string>>;

// Builds a graph from disjoint cycles over the listed names; names missing from
// a permutation are fixed by it, missing multiplicities default to 1.
BrauerGraph from_cycles(const std::vector<std::string>& names, const Cycles& pairing,
                        const Cycles& orientation, const std::map<std::string, int>& multiplicity = {});
// Non-trivial cycles, each starting at its smallest half-edge, ordered by that half-edge.
Cycles to_cycles(const BrauerGraph& g, const Permutation& p);

struct RandomGraphOptions {
  int halfedges = 8;
  bool allow_skew = false;
  int max_multiplicity = 1;
};

BrauerGraph gen_random(std::uint64_t seed, const RandomGraphOptions& options = {});

}  // namespace brauer
