#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/covering.hpp"
#include "brauer/graph.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

// Elements are sparse coordinate vectors over a table's basis.
using Element = SparseVector;

// Finite-dimensional algebra given by structure constants. Products read
// right to left like paths: product(a, b) is "b, then a".
class AlgebraTable {
 public:
  AlgebraTable() = default;
  AlgebraTable(std::vector<std::string> labels, std::vector<int> idempotents,
               std::vector<std::string> vertex_labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int b) const { return labels_[b]; }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_product(int a, int b, SparseVector value);
  const SparseVector& product(int a, int b) const { return products_[a * dim() + b]; }
  Element multiply(const Element& x, const Element& y) const;

  const std::vector<int>& idempotents() const { return idempotents_; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  int vertex_count() const { return static_cast<int>(idempotents_.size()); }
  Element idempotent(int vertex) const { return SparseVector::unit(idempotents_[vertex]); }
  Element unit() const;

  // Corner data, filled by finalize(): e_target b e_source = b, or -1 when a
  // basis element is not homogeneous.
  void finalize();
  int source(int b) const { return sources_[b]; }
  int target(int b) const { return targets_[b]; }
  bool corner_adapted() const;
  // Basis elements of e_target A e_source (requires corner adaptation).
  std::vector<int> corner(int target, int source) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> idempotents_;
  std::vector<std::string> vertex_labels_;
  std::vector<SparseVector> products_;
  std::vector<int> sources_;
  std::vector<int> targets_;
};

struct LawReport {
  bool ok = true;
  std::string detail;
};

// Associativity on all triples when `samples` is 0, otherwise on that many
// random triples; also the unit and idempotent laws.
LawReport check_algebra_laws(const AlgebraTable& a, int samples = 0, std::uint64_t seed = 1);

std::vector<std::vector<int>> cartan(const AlgebraTable& a);
long long cartan_determinant(const AlgebraTable& a);

// Basis of the Jacobson radical via the trace form (characteristic zero).
std::vector<Element> radical(const AlgebraTable& a);

// Cyclic group action: the generator sends basis element k to scale[k] * basis[image[k]].
struct GroupAction {
  int order = 1;
  std::vector<int> image;
  std::vector<Rational> scale;

  Element apply(const Element& x, int power = 1) const;
  static GroupAction trivial(int dim);
};

LawReport check_action(const AlgebraTable& a, const GroupAction& g);

// Basis index of b ⊗ g^k is b * order + k.
AlgebraTable skew_group_table(const AlgebraTable& a, const GroupAction& g);

struct Truncation {
  AlgebraTable table;
  std::vector<Element> embedding;  // new basis element -> element of the big algebra

  // Coordinates of an element of fAf in the truncated basis; throws otherwise.
  Element coordinates(const AlgebraTable& big, const Element& x) const;

  std::vector<std::vector<int>> corner_of;        // [t][s] -> position in corner_basis
  std::vector<std::vector<std::vector<int>>> corner_basis;  // new basis indices per corner
};

// Model of fAf for f the sum of the given orthogonal idempotents.
Truncation truncate(const AlgebraTable& a, const std::vector<Element>& idempotents,
                    const std::vector<std::string>& vertex_labels);

// Basis: a's basis followed by the dual basis (index dim + k).
AlgebraTable trivial_extension(const AlgebraTable& a);
// Action on Triv(a) induced by (g.φ)(b) = φ(g^{-1}.b).
GroupAction trivial_extension_action(const AlgebraTable& a, const GroupAction& g);

struct PhiReport {
  bool isomorphism = false;
  std::string detail;
};

// The map Triv(ΛG) → Triv(Λ)G, (a⊗g, φ) ↦ (a,0)⊗g + Σ_h (0, φ_h)⊗h with
// φ_h(b) = φ((h^{-1}.b)⊗h^{-1}), checked for bijectivity and multiplicativity.
PhiReport check_trivial_extension_isomorphism(const AlgebraTable& lambda, const GroupAction& g);

// Normal-form basis of the Brauer graph algebra of an ordinary graph.
struct BgaModel {
  AlgebraTable table;
  std::vector<int> edge_idempotent;          // per edge
  std::vector<int> socle;                    // per edge
  std::vector<std::vector<int>> path;        // path[h][k-1]: k arrows starting with α_h
};

BgaModel bga_model(const BrauerGraph& g);
inline AlgebraTable bga_table(const BrauerGraph& g) { return bga_model(g).table; }
int bga_dimension_formula(const BrauerGraph& g);  // Σ_v m̃(v) val(v)²

// Shift of sheets h_i ↦ h_{i+1} on the algebra of a covering total.
GroupAction sheet_shift(const CoveredGraph& c, const BgaModel& total);

}  // namespace brauer
