#pragma once

#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/covering.hpp"
#include "brauer/path_quotient.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

// An algebra table together with the images of the vertices and arrows of a
// quiver, so paths and relations can be evaluated in it.
struct AlgebraModel {
  AlgebraTable table;
  Quiver quiver;
  std::vector<Element> vertex_images;
  std::vector<Element> arrow_images;

  Element evaluate(const Path& p) const;
  Element evaluate(const std::vector<std::pair<Rational, Path>>& terms) const;
};

// Normal-form model of an ordinary Brauer graph algebra on its own quiver.
AlgebraModel ordinary_model(const BrauerGraph& g);

// The truncation f (B_d ⋊ G) f of the covering's skew group algebra, on the
// quiver of the truncation presentation.
struct TruncationModel {
  AlgebraModel model;
  BgaModel total;       // algebra of the covering total
  AlgebraTable skew;    // B_d ⋊ G
  Truncation truncation;
};
TruncationModel truncation_model(const CoveredGraph& c);

// Model of the algebra of any valid graph: the normal-form model for
// ordinary graphs, the truncation of the zero-graded covering for skew ones.
AlgebraModel algebra_model(const BrauerGraph& g);

// Σ_{[h],[h']} Σ_k dim e_[h_0] B_d e_[h'_k], read off the covering's algebra.
int truncation_dimension_formula(const CoveredGraph& c);

// Admissible cut of the covering total along the lift of a cut of the base,
// with the sheet shift acting on the cut algebra.
struct CoverCut {
  Presentation presentation;
  PathQuotient algebra;
  GroupAction action;
};
CoverCut cover_cut(const CoveredGraph& c, const HalfEdgeSet& delta);

}  // namespace brauer
