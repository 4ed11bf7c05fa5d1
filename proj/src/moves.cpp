#include "brauer/moves.hpp"

#include <algorithm>
#include <optional>

namespace brauer {

void require_iota_stable(const BrauerGraph& g, const HalfEdgeSet& subset) {
  for (HalfEdge h : subset) {
    if (h < 0 || h >= g.size()) throw Error("half-edge subset out of range");
    if (!subset.count(g.iota(h))) throw Error("subset is not stable under the pairing");
  }
}

std::optional<Sector> sector_at(const BrauerGraph& g, const HalfEdgeSet& subset, HalfEdge h) {
  if (!subset.count(h)) return std::nullopt;
  const auto orbit = g.sigma_orbit(h);
  for (std::size_t k = 1; k < orbit.size(); ++k)
    if (!subset.count(orbit[k])) return Sector{h, static_cast<int>(k) - 1};
  return std::nullopt;
}

std::vector<Sector> sectors(const BrauerGraph& g, const HalfEdgeSet& subset) {
  require_iota_stable(g, subset);
  std::vector<Sector> out;
  for (HalfEdge h : subset)
    if (auto s = sector_at(g, subset, h)) out.push_back(*s);
  return out;
}

std::vector<Sector> maximal_sectors(const BrauerGraph& g, const HalfEdgeSet& subset) {
  std::vector<Sector> out;
  for (const Sector& s : sectors(g, subset))
    if (!subset.count(g.sigma(s.h, -1))) out.push_back(s);
  auto key = [&](const Sector& s) {
    auto orbit = g.sigma_orbit(s.h);
    return std::pair{*std::min_element(orbit.begin(), orbit.end()), s.h};
  };
  std::sort(out.begin(), out.end(),
            [&](const Sector& a, const Sector& b) { return key(a) < key(b); });
  return out;
}

namespace {

int residue(long x, int n) { return static_cast<int>(((x % n) + n) % n); }

void apply_sector(BrauerGraph& g, Grading* d, const Sector& s, const HalfEdgeSet& subset) {
  auto current = sector_at(g, subset, s.h);
  if (!current || current->r != s.r) throw Error("not a sector for the chosen subset");

  const int n = g.size();
  const HalfEdge h = s.h;
  const HalfEdge last = g.sigma(h, s.r);
  const HalfEdge exit = g.sigma(h, s.r + 1);
  const HalfEdge across = g.iota(exit);
  const HalfEdge before = g.sigma(h, -1);

  if (d) {
    const int mod = d->modulus;
    auto& deg = d->degrees;
    long run = 0;
    for (int i = 0; i <= s.r; ++i) run += deg[g.sigma(h, i)];
    const long with_before = run + deg[before];
    const int cross = g.is_cross(exit) ? 1 : 0;
    const bool special = across == before;

    const int new_across = residue(-run - cross, mod);
    const int new_last =
        special ? residue(with_before + deg[last] + cross, mod)
                : residue(deg[across] + deg[last] + cross, mod);
    const int new_before = special ? new_across : residue(with_before, mod);
    deg[before] = new_before;
    deg[last] = new_last;
    deg[across] = new_across;
  }

  std::vector<int> m = g.multiplicities();
  const int moved = g.multiplicity(across);
  for (int i = 0; i <= s.r; ++i) m[g.sigma(h, i)] = moved;

  Permutation sigma = Permutation::transposition(n, h, exit) * g.orientation() *
                      Permutation::transposition(n, last, across);
  g = BrauerGraph(g.names(), g.pairing(), std::move(sigma), std::move(m));
}

}  // namespace

GradedGraph move_sector(const GradedGraph& g, const Sector& s, const HalfEdgeSet& subset) {
  require_iota_stable(g.graph, subset);
  GradedGraph out = g;
  apply_sector(out.graph, &out.grading, s, subset);
  return out;
}

GradedGraph move_sectors(const GradedGraph& g, const std::vector<Sector>& order,
                         const HalfEdgeSet& subset) {
  require_iota_stable(g.graph, subset);
  GradedGraph out = g;
  for (const Sector& s : order) apply_sector(out.graph, &out.grading, s, subset);
  return out;
}

GradedGraph move_set(const GradedGraph& g, const HalfEdgeSet& subset) {
  return move_sectors(g, maximal_sectors(g.graph, subset), subset);
}

BrauerGraph move_set(const BrauerGraph& g, const HalfEdgeSet& subset) {
  BrauerGraph out = g;
  for (const Sector& s : maximal_sectors(g, subset)) apply_sector(out, nullptr, s, subset);
  return out;
}

HalfEdgeSet edges_subset(const BrauerGraph& g, const std::vector<int>& edge_indices) {
  const auto all = g.edges();
  HalfEdgeSet out;
  for (int e : edge_indices) {
    if (e < 0 || e >= static_cast<int>(all.size())) throw Error("edge index out of range");
    out.insert(all[e].first);
    out.insert(all[e].second);
  }
  return out;
}

}  // namespace brauer
