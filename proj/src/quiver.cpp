#include "brauer/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace brauer {

int Quiver::vertex(int edge, int copy) const {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
    if (vertices[v].edge == edge && vertices[v].copy == copy) return v;
  throw Error("no quiver vertex for edge " + std::to_string(edge));
}

std::optional<int> Quiver::arrow(HalfEdge h, int source, int target) const {
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
    if (arrows[a].h == h && arrows[a].source == source && arrows[a].target == target) return a;
  return std::nullopt;
}

std::optional<int> Quiver::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
    if (vertices[v].label == label) return v;
  return std::nullopt;
}

int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].target;
}

std::vector<int> copies(const BrauerGraph& g, HalfEdge h) {
  if (g.is_cross(h)) return {0, 1};
  return {kNoCopy};
}

Quiver quiver(const BrauerGraph& g, const std::string& symbol) {
  Quiver q;
  const auto edges = g.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    std::string label = g.edge_label(edges[e]);
    if (edges[e].degenerate()) {
      q.vertices.push_back({e, 0, label + "_0"});
      q.vertices.push_back({e, 1, label + "_1"});
    } else {
      q.vertices.push_back({e, kNoCopy, label});
    }
  }
  auto copy_tag = [](int c) { return c == kNoCopy ? std::string() : std::to_string(c); };
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.induces_arrow(h)) continue;
    const HalfEdge next = g.sigma(h);
    for (int i : copies(g, h)) {
      for (int j : copies(g, next)) {
        std::string label = symbol + "(" + g.name(h);
        if (i != kNoCopy || j != kNoCopy) label += ";" + copy_tag(i) + ">" + copy_tag(j);
        label += ")";
        q.arrows.push_back({h, q.vertex(g.edge_of(h), i), q.vertex(g.edge_of(next), j), label});
      }
    }
  }
  return q;
}

int cross_count(const BrauerGraph& g, HalfEdge h) {
  int n = 0;
  for (HalfEdge x : g.sigma_orbit(h)) n += g.is_cross(x);
  return n;
}

namespace {

constexpr int kAnyCopy = -2;

// Every walk of `length` arrows following σ from [h]_start, with free copy
// choices at the intermediate vertices and the final copy constrained to `end`.
std::vector<Path> walks(const BrauerGraph& g, const Quiver& q, HalfEdge h, int length, int start,
                        int end) {
  std::vector<Path> out;
  Path current{q.vertex(g.edge_of(h), start), {}};
  std::function<void(HalfEdge, int, int)> step = [&](HalfEdge x, int copy, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    const HalfEdge next = g.sigma(x);
    for (int c : copies(g, next)) {
      if (remaining == 1 && end != kAnyCopy && c != end) continue;
      auto a = q.arrow(x, q.vertex(g.edge_of(x), copy), q.vertex(g.edge_of(next), c));
      if (!a) throw Error("half-edge " + g.name(x) + " induces no arrow");
      current.arrows.push_back(*a);
      step(next, c, remaining - 1);
      current.arrows.pop_back();
    }
  };
  step(h, start, length);
  return out;
}

Path repeat(const Path& p, int times) {
  Path out{p.source, {}};
  for (int k = 0; k < times; ++k) out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

Path then(Path first, const Path& second) {
  first.arrows.insert(first.arrows.end(), second.arrows.begin(), second.arrows.end());
  return first;
}

Rational power(const Rational& base, int exp) {
  Rational r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

int orbit_length(const BrauerGraph& g, HalfEdge h) { return static_cast<int>(g.sigma_orbit(h).size()); }

int single_arrow(const BrauerGraph& g, const Quiver& q, HalfEdge h, int from, int to) {
  auto a = q.arrow(h, q.vertex(g.edge_of(h), from), q.vertex(g.edge_of(g.sigma(h)), to));
  if (!a) throw Error("half-edge " + g.name(h) + " induces no arrow");
  return *a;
}

// Generators of type (III): α_{ισh} α_h for σh ∈ H_∘.
void add_zero_relations(const BrauerGraph& g, const Quiver& q, const std::string& kind,
                        std::vector<Relation>& out) {
  for (HalfEdge h = 0; h < g.size(); ++h) {
    const HalfEdge next = g.sigma(h);
    if (!g.induces_arrow(h) || g.is_cross(next) || !g.induces_arrow(g.iota(next))) continue;
    const HalfEdge turn = g.iota(next);
    for (int i : copies(g, h))
      for (int j : copies(g, g.sigma(turn))) {
        Path p{q.vertex(g.edge_of(h), i),
               {single_arrow(g, q, h, i, kNoCopy), single_arrow(g, q, turn, kNoCopy, j)}};
        out.push_back({kind, {{Rational(1), p}}});
      }
  }
}

// Generators of type (V): the two routes through a doubled vertex agree.
void add_route_relations(const BrauerGraph& g, const Quiver& q, const std::string& kind,
                         std::vector<Relation>& out) {
  for (HalfEdge h = 0; h < g.size(); ++h) {
    const HalfEdge next = g.sigma(h);
    if (next == h || !g.is_cross(next)) continue;
    for (int i : copies(g, h))
      for (int j : copies(g, g.sigma(next))) {
        int src = q.vertex(g.edge_of(h), i);
        Path via0{src, {single_arrow(g, q, h, i, 0), single_arrow(g, q, next, 0, j)}};
        Path via1{src, {single_arrow(g, q, h, i, 1), single_arrow(g, q, next, 1, j)}};
        out.push_back({kind, {{Rational(1), via0}, {Rational(-1), via1}}});
      }
  }
}

}  // namespace

std::vector<Path> special_cycles(const BrauerGraph& g, const Quiver& q, HalfEdge h, int copy) {
  if (!g.induces_arrow(h)) throw Error("half-edge " + g.name(h) + " induces no arrow");
  if (!g.is_cross(h)) copy = kNoCopy;
  else if (copy != 0 && copy != 1) throw Error("copy index required for a doubled vertex");
  return walks(g, q, h, orbit_length(g, h), copy, copy);
}

std::vector<Relation> relations(const BrauerGraph& g, const Quiver& q) {
  std::vector<Relation> out;
  // (I) the two special cycle powers of an edge agree up to the crossing scalars.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    const HalfEdge other = g.iota(h);
    if (g.is_cross(h) || other < h || !g.induces_arrow(h) || !g.induces_arrow(other)) continue;
    const Rational lhs = power(Rational(1 << cross_count(g, h)), g.multiplicity(h));
    const Rational rhs = power(Rational(1 << cross_count(g, other)), g.multiplicity(other));
    for (const Path& c : special_cycles(g, q, h))
      for (const Path& d : special_cycles(g, q, other))
        out.push_back({"I", {{lhs, repeat(c, g.multiplicity(h))}, {-rhs, repeat(d, g.multiplicity(other))}}});
  }
  // (II) one more arrow after a full cycle power vanishes.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.induces_arrow(h)) continue;
    for (int i : copies(g, h))
      for (const Path& c : special_cycles(g, q, h, i)) {
        Path p = repeat(c, g.multiplicity(h));
        p.arrows.push_back(c.arrows.front());
        out.push_back({"II", {{Rational(1), p}}});
      }
  }
  add_zero_relations(g, q, "III", out);
  // (IV) a cycle power through a doubled vertex that ends on the other copy vanishes.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.is_cross(h)) continue;
    for (int i : {0, 1})
      for (const Path& c : special_cycles(g, q, h, i)) {
        Path last = c;
        const Arrow& final_arrow = q.arrows[last.arrows.back()];
        last.arrows.back() = single_arrow(g, q, final_arrow.h, q.vertices[final_arrow.source].copy, 1 - i);
        out.push_back({"IV", {{Rational(1), then(repeat(c, g.multiplicity(h) - 1), last)}}});
      }
  }
  add_route_relations(g, q, "V", out);
  return out;
}

Presentation presentation(const BrauerGraph& g) {
  Presentation p;
  p.quiver = quiver(g);
  p.relations = relations(g, p.quiver);
  return p;
}

Presentation truncation_presentation(const CoveredGraph& c) {
  const BrauerGraph& g = c.base.graph;
  Presentation p;
  p.quiver = quiver(g, "b");
  const Quiver& q = p.quiver;
  if (!g.is_skew()) {
    p.relations = relations(g, q);
    for (auto& r : p.relations) r.kind += "'";
    return p;
  }
  auto sum_of = [](const std::vector<Path>& paths, const Rational& sign,
                   std::vector<std::pair<Rational, Path>>& terms) {
    for (const Path& w : paths) terms.push_back({sign, w});
  };
  // (I') all routes from [h]_i to [h]_{i+1} of full cycle-power length sum to zero.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.is_cross(h)) continue;
    const int len = orbit_length(g, h) * g.multiplicity(h);
    for (int i : {0, 1}) {
      Relation r{"I'", {}};
      sum_of(walks(g, q, h, len, i, 1 - i), 1, r.terms);
      p.relations.push_back(std::move(r));
    }
  }
  // (II') summed cycle powers at both ends of an ordinary edge agree.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    const HalfEdge other = g.iota(h);
    if (g.is_cross(h) || other < h || !g.induces_arrow(h) || !g.induces_arrow(other)) continue;
    Relation r{"II'", {}};
    sum_of(walks(g, q, h, orbit_length(g, h) * g.multiplicity(h), kNoCopy, kNoCopy), 1, r.terms);
    sum_of(walks(g, q, other, orbit_length(g, other) * g.multiplicity(other), kNoCopy, kNoCopy), -1,
           r.terms);
    p.relations.push_back(std::move(r));
  }
  // (III') summed cycle power followed by one more arrow.
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.induces_arrow(h)) continue;
    const int len = orbit_length(g, h) * g.multiplicity(h) + 1;
    for (int i : copies(g, h))
      for (int j : copies(g, g.sigma(h))) {
        Relation r{"III'", {}};
        sum_of(walks(g, q, h, len, i, j), 1, r.terms);
        p.relations.push_back(std::move(r));
      }
  }
  add_route_relations(g, q, "IV'", p.relations);
  add_zero_relations(g, q, "V'", p.relations);
  return p;
}

int nonzero_path_bound(const BrauerGraph& g) {
  int bound = 0;
  for (HalfEdge h = 0; h < g.size(); ++h)
    if (g.induces_arrow(h)) bound = std::max(bound, orbit_length(g, h) * g.multiplicity(h));
  return bound;
}

Presentation admissible_cut(const BrauerGraph& g, const HalfEdgeSet& delta) {
  for (HalfEdge h = 0; h < g.size(); ++h)
    if (g.multiplicity(h) != 1) throw Error("admissible cuts need multiplicity one");
  for (HalfEdge h : delta)
    if (h < 0 || h >= g.size() || !g.induces_arrow(h)) throw Error("cut half-edge induces no arrow");
  for (const auto& orbit : g.orientation().cycles()) {
    if (!g.induces_arrow(orbit.front())) continue;
    int hits = 0;
    for (HalfEdge h : orbit) hits += delta.count(h);
    if (hits != 1) throw Error("cut is not a transversal of the σ-orbits");
  }
  Presentation full = presentation(g);
  Presentation cut;
  cut.quiver.vertices = full.quiver.vertices;
  std::vector<int> renumber(full.quiver.arrows.size(), -1);
  for (int a = 0; a < static_cast<int>(full.quiver.arrows.size()); ++a) {
    if (delta.count(full.quiver.arrows[a].h)) continue;
    renumber[a] = static_cast<int>(cut.quiver.arrows.size());
    cut.quiver.arrows.push_back(full.quiver.arrows[a]);
  }
  for (const Relation& r : full.relations) {
    Relation kept{r.kind, {}};
    for (const auto& [c, path] : r.terms) {
      Path moved{path.source, {}};
      bool survives = true;
      for (int a : path.arrows) {
        if (renumber[a] < 0) {
          survives = false;
          break;
        }
        moved.arrows.push_back(renumber[a]);
      }
      if (survives) kept.terms.push_back({c, moved});
    }
    if (!kept.terms.empty()) cut.relations.push_back(std::move(kept));
  }
  return cut;
}

bool is_gentle(const Presentation& p) {
  const Quiver& q = p.quiver;
  const int nv = static_cast<int>(q.vertices.size());
  const int na = static_cast<int>(q.arrows.size());
  std::vector<int> in(nv, 0), out(nv, 0);
  for (const Arrow& a : q.arrows) {
    ++out[a.source];
    ++in[a.target];
  }
  for (int v = 0; v < nv; ++v)
    if (in[v] > 2 || out[v] > 2) return false;
  std::set<std::pair<int, int>> zero;  // (first, second) with the composite in the ideal
  for (const Relation& r : p.relations) {
    if (r.terms.size() != 1 || r.terms[0].second.arrows.size() != 2) return false;
    zero.insert({r.terms[0].second.arrows[0], r.terms[0].second.arrows[1]});
  }
  for (int b = 0; b < na; ++b) {
    int before_zero = 0, before_live = 0, after_zero = 0, after_live = 0;
    for (int a = 0; a < na; ++a) {
      if (q.arrows[a].target == q.arrows[b].source) (zero.count({a, b}) ? before_zero : before_live)++;
      if (q.arrows[b].target == q.arrows[a].source) (zero.count({b, a}) ? after_zero : after_live)++;
    }
    if (before_zero > 1 || before_live > 1 || after_zero > 1 || after_live > 1) return false;
  }
  return true;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e[" + q.vertices[p.source].label + "]";
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += q.arrows[*it].label;
  }
  return s;
}

std::string format_relation(const Quiver& q, const Relation& r) {
  std::string s = "[" + r.kind + "] ";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const auto& [c, path] = r.terms[k];
    if (k > 0) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational magnitude = abs(c);
    if (magnitude != 1) s += to_string(magnitude) + "*(" + format_path(q, path) + ")";
    else s += format_path(q, path);
  }
  return s;
}

}  // namespace brauer
