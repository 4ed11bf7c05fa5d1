#include "brauer/covering.hpp"

#include <algorithm>
#include <random>

#include "brauer/moves.hpp"

namespace brauer {

HalfEdge CoveredGraph::lift(HalfEdge h, int sheet) const {
  return h * group_order + ((sheet % group_order) + group_order) % group_order;
}

CoveredGraph cover(const GradedGraph& g) {
  const BrauerGraph& base = g.graph;
  if (!grading_is_valid(base, g.grading)) throw Error("invalid grading for covering");
  CoveredGraph c;
  c.base = g;
  c.group_order = g.grading.modulus;
  const int n = c.group_order;
  const int size = base.size() * n;
  std::vector<std::string> names(size);
  std::vector<int> iota(size), sigma(size), m(size);
  const bool skew = base.is_skew();
  for (HalfEdge h = 0; h < base.size(); ++h) {
    for (int i = 0; i < n; ++i) {
      HalfEdge x = c.lift(h, i);
      names[x] = base.name(h) + "_" + std::to_string(i);
      iota[x] = base.is_cross(h) ? c.lift(h, i + 1) : c.lift(base.iota(h), i);
      sigma[x] = c.lift(base.sigma(h), i + g.grading.degrees[h]);
      m[x] = skew ? base.multiplicity(h) : 1;
    }
  }
  c.total = BrauerGraph(std::move(names), Permutation(std::move(iota)),
                        Permutation(std::move(sigma)), std::move(m));
  return c;
}

Grading default_grading(const BrauerGraph& g, const HalfEdgeSet& subset) {
  Grading d = zero_grading(g);
  if (g.is_skew()) return d;
  const auto maximal = maximal_sectors(g, subset);
  for (const auto& orbit : g.orientation().cycles()) {
    const int need = required_vertex_degree(g, orbit.front());
    if (need == 0) continue;
    bool inside = false, outside = false;
    for (HalfEdge h : orbit) (subset.count(h) ? inside : outside) = true;
    HalfEdge chosen = *std::min_element(orbit.begin(), orbit.end());
    if (inside && outside) {
      HalfEdge best = -1;
      for (const Sector& s : maximal)
        if (std::find(orbit.begin(), orbit.end(), s.h) != orbit.end() && (best < 0 || s.h < best))
          best = s.h;
      chosen = g.sigma(best, -1);
    }
    d.degrees[chosen] = need;
  }
  return d;
}

Grading random_grading(const BrauerGraph& g, std::uint64_t seed) {
  Grading d = zero_grading(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d.modulus - 1);
  for (const auto& orbit : g.orientation().cycles()) {
    long sum = 0;
    for (std::size_t k = 1; k < orbit.size(); ++k) {
      d.degrees[orbit[k]] = pick(rng);
      sum += d.degrees[orbit[k]];
    }
    const long need = required_vertex_degree(g, orbit.front());
    d.degrees[orbit.front()] = static_cast<int>((((need - sum) % d.modulus) + d.modulus) % d.modulus);
  }
  return d;
}

HalfEdgeSet lift_subset(const CoveredGraph& c, const HalfEdgeSet& subset) {
  HalfEdgeSet out;
  for (HalfEdge h : subset)
    for (int i = 0; i < c.group_order; ++i) out.insert(c.lift(h, i));
  return out;
}

CommuteReport check_cover_commutes(const GradedGraph& g, const HalfEdgeSet& subset) {
  const CoveredGraph upstairs = cover(g);
  const GradedGraph moved = move_set(g, subset);
  if (!grading_is_valid(moved.graph, moved.grading))
    return {false, "moved grading is not valid"};
  const BrauerGraph left = cover(moved).total;
  const BrauerGraph right = move_set(upstairs.total, lift_subset(upstairs, subset));
  if (left == right) return {true, "commutes"};
  for (HalfEdge x = 0; x < left.size(); ++x) {
    HalfEdge y = right.index(left.name(x));
    if (left.name(left.sigma(x)) != right.name(right.sigma(y)))
      return {false, "orientation differs at " + left.name(x)};
    if (left.multiplicity(x) != right.multiplicity(y))
      return {false, "multiplicity differs at " + left.name(x)};
  }
  return {false, "graphs differ"};
}

}  // namespace brauer
