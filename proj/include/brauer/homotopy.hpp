#pragma once

#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

// Matrix of algebra elements; entry [row][col] is a map from the col-th
// source summand to the row-th target summand, i.e. an element of
// e_target A e_source. Composition is the matrix product.
using Matrix = std::vector<std::vector<Element>>;

// Two-term complex of indecomposable projectives e_v A in degrees -1 and 0.
struct Complex {
  std::vector<int> minus_one;  // vertices
  std::vector<int> zero;
  Matrix differential;         // zero.size() x minus_one.size()
  std::string label;
};

Complex stalk(int vertex, std::string label = {});

// Basis of Hom(e_source A, e_target A) = e_target A e_source.
std::vector<int> proj_hom(const AlgebraTable& a, int source, int target);

// A map from e_source A to a sum of projectives at `targets`.
struct Approximation {
  int source = 0;
  std::vector<int> targets;
  std::vector<Element> components;  // components[k] in e_targets[k] A e_source
};

// Left minimal approximation of e_source A by sums of e_w A, w in `allowed`:
// for every w, a complement of the maps that factor through the radical.
Approximation minimal_approximation(const AlgebraTable& a, int source, const std::vector<int>& allowed);

// Every map to an allowed projective factors through the approximation, and
// no component can be dropped (components are independent modulo maps that
// factor through the radical).
LawReport check_approximation(const AlgebraTable& a, const Approximation& f, const std::vector<int>& allowed);

Complex cone(const Approximation& f, std::string label = {});

// The half-edge walk defining the approximation of the projective at [h] on
// the graph side: σ is followed from h while it stays in the subset.
struct GraphApproximation {
  HalfEdge from = 0;
  int target_edge = -1;            // -1 when the whole σ-orbit lies in the subset
  std::vector<HalfEdge> walk;      // h, σh, ..., σ^r h
};
GraphApproximation graph_approximation(const BrauerGraph& g, const HalfEdgeSet& subset, HalfEdge h);

// Vertices of the quiver lying on edges of the subset.
std::vector<int> moved_vertices(const BrauerGraph& g, const Quiver& q, const HalfEdgeSet& subset);

// Left mutation of A at the projectives of `moved`: stalks e_v A for the
// other vertices, cones of minimal approximations for the moved ones, listed
// in vertex order.
std::vector<Complex> mutation_object(const AlgebraTable& a, const std::vector<int>& moved);

// Dimension of Hom(X, Y[shift]) in the homotopy category.
int hom_dimension(const AlgebraTable& a, const Complex& x, const Complex& y, int shift);

struct EndAlgebra {
  AlgebraTable table;
  std::vector<std::vector<int>> cartan;  // [b][a] = dim Hom(T_a, T_b)
};

// Endomorphism algebra of the sum of the complexes; throws "not tilting"
// when a shifted Hom between summands is nonzero.
EndAlgebra end_table(const AlgebraTable& a, const std::vector<Complex>& t);

struct MutationReport {
  bool silting = false;   // Hom(T, T[1]) = 0
  bool tilting = false;   // also Hom(T, T[-1]) = 0
  bool approximations = false;
  int end_dimension = 0;
  int moved_dimension = 0;
  bool cartan_equal = false;
  bool symmetric = false;
  bool laws = false;
  std::string detail;
  bool ok() const { return silting && tilting && approximations && end_dimension == moved_dimension && cartan_equal && symmetric && laws; }
};

// Mutates the algebra of g at the edges of the subset and compares the
// endomorphism algebra with the algebra of the moved graph. Doubled vertices
// of a cross edge may be matched in either order.
MutationReport verify_mutation(const BrauerGraph& g, const HalfEdgeSet& subset);

}  // namespace brauer
