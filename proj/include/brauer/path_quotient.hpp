#pragma once

#include <map>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

// Brute-force model of kQ/I: all paths up to `length` are enumerated, the
// ideal generated by the relations is closed under arrow multiplication in
// the path algebra truncated above `length`, and the quotient is read off.
// Construction fails when some path of maximal length survives, which means
// the bound was too small to see the whole algebra.
class PathQuotient {
 public:
  PathQuotient() = default;
  PathQuotient(const Presentation& p, int length);

  const Quiver& quiver() const { return quiver_; }
  const AlgebraTable& table() const { return table_; }
  int dim() const { return table_.dim(); }
  const std::vector<Path>& basis_paths() const { return basis_paths_; }

  // Coordinates of a linear combination of paths in the quotient basis.
  Element reduce(const std::vector<std::pair<Rational, Path>>& terms) const;
  Element reduce(const Path& p) const { return reduce({{Rational(1), p}}); }

 private:
  std::optional<int> index_of(const Path& p) const;
  SparseVector to_vector(const std::vector<std::pair<Rational, Path>>& terms) const;

  Quiver quiver_;
  int length_ = 0;
  std::vector<Path> paths_;
  std::map<Path, int> index_;
  Echelon ideal_;
  std::vector<int> position_;  // path index -> basis position, or -1
  std::vector<Path> basis_paths_;
  AlgebraTable table_;
};

// Action of a quiver automorphism of finite order on the quotient, given by
// where it sends vertices and arrows. Throws unless it maps basis paths to
// multiples of basis paths.
GroupAction induced_action(const PathQuotient& q, const std::vector<int>& vertex_image,
                           const std::vector<int>& arrow_image, int order);

}  // namespace brauer
