#include "brauer/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace brauer {

BrauerGraph::BrauerGraph(std::vector<std::string> names, Permutation pairing,
                         Permutation orientation, std::vector<int> multiplicity)
    : names_(std::move(names)),
      pairing_(std::move(pairing)),
      orientation_(std::move(orientation)),
      multiplicity_(std::move(multiplicity)) {
  const int n = size();
  if (pairing_.size() != n || orientation_.size() != n ||
      static_cast<int>(multiplicity_.size()) != n)
    throw Error("half-edge data of inconsistent sizes");
  for (int h = 0; h < n; ++h) {
    if (!lookup_.emplace(names_[h], h).second) throw Error("duplicate half-edge '" + names_[h] + "'");
  }
}

HalfEdge BrauerGraph::index(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw Error("unknown half-edge '" + std::string(name) + "'");
  return it->second;
}

bool BrauerGraph::contains(std::string_view name) const { return lookup_.find(name) != lookup_.end(); }

bool BrauerGraph::is_skew() const {
  for (int h = 0; h < size(); ++h)
    if (is_cross(h)) return true;
  return false;
}

int BrauerGraph::multiplicity_lcm() const {
  int l = 1;
  for (int m : multiplicity_) l = std::lcm(l, m);
  return l;
}

bool BrauerGraph::induces_arrow(HalfEdge h) const {
  return !orientation_.fixes(h) || multiplicity_[h] > 1;
}

std::vector<Edge> BrauerGraph::edges() const {
  std::vector<Edge> out;
  for (int h = 0; h < size(); ++h)
    if (pairing_(h) >= h) out.push_back({h, pairing_(h)});
  return out;
}

int BrauerGraph::edge_of(HalfEdge h) const {
  int lo = std::min(h, pairing_(h));
  int count = 0;
  for (int x = 0; x < lo; ++x)
    if (pairing_(x) >= x) ++count;
  return count;
}

std::string BrauerGraph::edge_label(const Edge& e) const {
  const std::string& a = names_[e.first];
  if (e.degenerate()) return a;
  const std::string& b = names_[e.second];
  if (a.size() == b.size()) {
    int diff = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      bool signs = (a[i] == '+' && b[i] == '-') || (a[i] == '-' && b[i] == '+');
      if (diff >= 0 || !signs) {
        diff = -2;
        break;
      }
      diff = static_cast<int>(i);
    }
    if (diff >= 0) return a.substr(0, diff) + a.substr(diff + 1);
  }
  return a + "|" + b;
}

BrauerGraph BrauerGraph::with_orientation(Permutation sigma) const {
  return BrauerGraph(names_, pairing_, std::move(sigma), multiplicity_);
}

BrauerGraph BrauerGraph::with_multiplicities(std::vector<int> m) const {
  return BrauerGraph(names_, pairing_, orientation_, std::move(m));
}

bool BrauerGraph::operator==(const BrauerGraph& other) const {
  if (size() != other.size()) return false;
  for (int h = 0; h < size(); ++h) {
    if (!other.contains(names_[h])) return false;
    int k = other.index(names_[h]);
    if (other.name(other.iota(k)) != names_[iota(h)]) return false;
    if (other.name(other.sigma(k)) != names_[sigma(h)]) return false;
    if (other.multiplicity(k) != multiplicity_[h]) return false;
  }
  return true;
}

std::vector<std::vector<HalfEdge>> components(const BrauerGraph& g) {
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < n; ++h) {
    parent[find(h)] = find(g.iota(h));
    parent[find(h)] = find(g.sigma(h));
  }
  std::map<int, std::vector<HalfEdge>> groups;
  for (int h = 0; h < n; ++h) groups[find(h)].push_back(h);
  std::vector<std::vector<HalfEdge>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_excluded_component(const BrauerGraph& g, const std::vector<HalfEdge>& comp) {
  for (HalfEdge h : comp)
    if (!g.orientation().fixes(h) || g.multiplicity(h) != 1) return false;
  if (comp.size() == 1) return g.is_cross(comp[0]);
  return comp.size() == 2 && g.iota(comp[0]) == comp[1];
}

}  // namespace

std::vector<Violation> validate(const BrauerGraph& g) {
  std::vector<Violation> out;
  const int n = g.size();
  std::vector<HalfEdge> bad;
  for (int h = 0; h < n; ++h)
    if (g.iota(g.iota(h)) != h) bad.push_back(h);
  if (!bad.empty()) {
    out.push_back({ViolationKind::PairingNotInvolution, bad, "pairing is not an involution"});
    return out;
  }
  bad.clear();
  for (int h = 0; h < n; ++h)
    if (g.multiplicity(h) < 1) bad.push_back(h);
  if (!bad.empty())
    out.push_back({ViolationKind::NonPositiveMultiplicity, bad, "multiplicity must be positive"});
  for (const auto& orbit : g.orientation().cycles()) {
    for (HalfEdge h : orbit) {
      if (g.multiplicity(h) != g.multiplicity(orbit.front())) {
        out.push_back({ViolationKind::MultiplicityNotConstant, orbit,
                       "m not constant on σ-orbit"});
        break;
      }
    }
  }
  bad.clear();
  for (int h = 0; h < n; ++h)
    if (g.is_cross(h) && g.orientation().fixes(h)) bad.push_back(h);
  if (!bad.empty())
    out.push_back({ViolationKind::FixedByPairingAndOrientation, bad,
                   "half-edge fixed by both pairing and orientation"});
  for (const auto& comp : components(g))
    if (is_excluded_component(g, comp))
      out.push_back({ViolationKind::ExcludedComponent, comp, "excluded component"});
  return out;
}

bool is_valid(const BrauerGraph& g) { return validate(g).empty(); }

std::string describe(const BrauerGraph& g, const Violation& v) {
  std::string s = v.message + ":";
  for (HalfEdge h : v.halfedges) s += " " + g.name(h);
  return s;
}

VertexSet vertices(const BrauerGraph& g) {
  VertexSet out;
  for (auto& orbit : g.orientation().cycles()) {
    int m = g.multiplicity(orbit.front());
    out.circ.push_back({std::move(orbit), m, false});
  }
  for (int h = 0; h < g.size(); ++h)
    if (g.is_cross(h)) out.cross.push_back({{h}, 1, true});
  return out;
}

std::vector<Face> faces(const BrauerGraph& g) {
  if (g.is_skew()) throw Error("faces undefined for skew graphs");
  Permutation phi = g.orientation() * g.pairing();
  std::vector<Face> out;
  for (auto& c : phi.cycles()) out.push_back({std::move(c)});
  return out;
}

OZInvariants oz_invariants(const BrauerGraph& g) {
  OZInvariants inv;
  VertexSet vs = vertices(g);
  inv.edge_count = static_cast<int>(g.edges().size());
  inv.circ_vertex_count = static_cast<int>(vs.circ.size());
  inv.cross_vertex_count = static_cast<int>(vs.cross.size());
  for (const auto& v : vs.circ) inv.multiplicities.insert(v.multiplicity);
  if (g.is_skew()) {
    inv.face_count = -1;
  } else {
    auto fs = faces(g);
    inv.face_count = static_cast<int>(fs.size());
    for (const auto& f : fs) inv.perimeters.insert(f.perimeter());
  }

  // Two-colouring of the multigraph whose nodes are circ vertices followed by cross vertices.
  std::vector<int> node_of(g.size());
  for (int i = 0; i < inv.circ_vertex_count; ++i)
    for (HalfEdge h : vs.circ[i].halfedges) node_of[h] = i;
  const int nodes = inv.circ_vertex_count + inv.cross_vertex_count;
  std::vector<std::vector<int>> adj(nodes);
  int next_cross = inv.circ_vertex_count;
  for (const Edge& e : g.edges()) {
    int a = node_of[e.first];
    int b = e.degenerate() ? next_cross++ : node_of[e.second];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(nodes, -1);
  for (int s = 0; s < nodes && inv.bipartite; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && inv.bipartite) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          inv.bipartite = false;
        }
      }
    }
  }
  return inv;
}

int grading_modulus(const BrauerGraph& g) { return g.is_skew() ? 2 : g.multiplicity_lcm(); }

int required_vertex_degree(const BrauerGraph& g, HalfEdge h) {
  if (g.is_skew()) return 0;
  int mbar = g.multiplicity_lcm();
  return (mbar / g.multiplicity(h)) % mbar;
}

bool grading_is_valid(const BrauerGraph& g, const Grading& d) {
  if (d.modulus != grading_modulus(g) || static_cast<int>(d.degrees.size()) != g.size())
    return false;
  for (int x : d.degrees)
    if (x < 0 || x >= d.modulus) return false;
  for (const auto& orbit : g.orientation().cycles()) {
    long sum = 0;
    for (HalfEdge h : orbit) sum += d.degrees[h];
    if (sum % d.modulus != required_vertex_degree(g, orbit.front())) return false;
  }
  return true;
}

Grading zero_grading(const BrauerGraph& g) {
  return {grading_modulus(g), std::vector<int>(g.size(), 0)};
}

namespace {

Permutation permutation_from_cycles(const std::vector<std::string>& names,
                                    const std::map<std::string, int, std::less<>>& lookup,
                                    const Cycles& cycles, const char* what) {
  std::vector<int> images(names.size());
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(names.size(), false);
  for (const auto& cycle : cycles) {
    std::vector<int> ids;
    for (const auto& name : cycle) {
      auto it = lookup.find(name);
      if (it == lookup.end()) throw Error("unknown half-edge '" + name + "' in " + what);
      if (used[it->second]) throw Error(std::string("cycles in ") + what + " are not disjoint at '" + name + "'");
      used[it->second] = true;
      ids.push_back(it->second);
    }
    for (std::size_t k = 0; k < ids.size(); ++k) images[ids[k]] = ids[(k + 1) % ids.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace

BrauerGraph from_cycles(const std::vector<std::string>& names, const Cycles& pairing,
                        const Cycles& orientation, const std::map<std::string, int>& multiplicity) {
  std::map<std::string, int, std::less<>> lookup;
  for (int h = 0; h < static_cast<int>(names.size()); ++h)
    if (!lookup.emplace(names[h], h).second) throw Error("duplicate half-edge '" + names[h] + "'");
  for (const auto& cycle : pairing)
    if (cycle.size() > 2) throw Error("pairing cycles have length at most two");
  std::vector<int> m(names.size(), 1);
  for (const auto& [name, value] : multiplicity) {
    auto it = lookup.find(name);
    if (it == lookup.end()) throw Error("unknown half-edge '" + name + "' in multiplicity");
    m[it->second] = value;
  }
  return BrauerGraph(names, permutation_from_cycles(names, lookup, pairing, "pairing"),
                     permutation_from_cycles(names, lookup, orientation, "orientation"), std::move(m));
}

Cycles to_cycles(const BrauerGraph& g, const Permutation& p) {
  Cycles out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    std::vector<std::string> names;
    for (HalfEdge h : c) names.push_back(g.name(h));
    out.push_back(std::move(names));
  }
  return out;
}

BrauerGraph gen_random(std::uint64_t seed, const RandomGraphOptions& options) {
  const int n = options.halfedges;
  if (n < 2 || (!options.allow_skew && n % 2 != 0))
    throw Error("random graphs need at least two half-edges, an even number when ordinary");
  std::mt19937_64 rng(seed);
  for (;;) {
    int fixed = 0;
    if (options.allow_skew) {
      std::uniform_int_distribution<int> pick(0, n / 2);
      fixed = 2 * pick(rng) + (n % 2);
      if (fixed == 0 && n >= 2) fixed = 2;  // a skew request yields a skew graph
      fixed = std::min(fixed, n);
    }
    std::vector<int> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);

    std::vector<std::string> names(n);
    std::vector<int> iota(n);
    int label = 1;
    int pos = 0;
    for (; pos < n - fixed; pos += 2, ++label) {
      int a = slots[pos], b = slots[pos + 1];
      names[a] = std::to_string(label) + "+";
      names[b] = std::to_string(label) + "-";
      iota[a] = b;
      iota[b] = a;
    }
    for (; pos < n; ++pos, ++label) {
      names[slots[pos]] = std::to_string(label);
      iota[slots[pos]] = slots[pos];
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[order[i]] = order[(i + 1) % n];
    // Cut the single long cycle into random consecutive blocks.
    std::bernoulli_distribution cut(0.4);
    int start = 0;
    for (int i = 0; i < n; ++i) {
      if (i + 1 == n || cut(rng)) {
        sigma[order[i]] = order[start];
        start = i + 1;
      }
    }

    Permutation orientation(sigma);
    std::vector<int> m(n, 1);
    std::uniform_int_distribution<int> mult(1, std::max(1, options.max_multiplicity));
    for (const auto& orbit : orientation.cycles()) {
      int value = mult(rng);
      for (HalfEdge h : orbit) m[h] = value;
    }
    // Relabel so that half-edge indices follow name order.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](int h) {
      std::string s = names[h];
      std::size_t digits = s.find_first_not_of("0123456789");
      int num = std::stoi(s.substr(0, digits));
      int suffix = digits == std::string::npos ? 0 : (s[digits] == '+' ? 1 : 2);
      return std::pair{num, suffix};
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> where(n);
    for (int i = 0; i < n; ++i) where[perm[i]] = i;
    std::vector<std::string> names2(n);
    std::vector<int> iota2(n), sigma2(n), m2(n);
    for (int i = 0; i < n; ++i) {
      int h = perm[i];
      names2[i] = names[h];
      iota2[i] = where[iota[h]];
      sigma2[i] = where[sigma[h]];
      m2[i] = m[h];
    }
    BrauerGraph g(std::move(names2), Permutation(std::move(iota2)), Permutation(std::move(sigma2)),
                  std::move(m2));
    if (is_valid(g)) return g;
  }
}

}  // namespace brauer
