#include "brauer/algebra.hpp"

#include <algorithm>
#include <random>

namespace brauer {

AlgebraTable::AlgebraTable(std::vector<std::string> labels, std::vector<int> idempotents,
                           std::vector<std::string> vertex_labels)
    : labels_(std::move(labels)),
      idempotents_(std::move(idempotents)),
      vertex_labels_(std::move(vertex_labels)),
      products_(labels_.size() * labels_.size()) {
  if (idempotents_.size() != vertex_labels_.size())
    throw Error("one vertex label per idempotent expected");
}

void AlgebraTable::set_product(int a, int b, SparseVector value) {
  products_[a * dim() + b] = std::move(value);
}

Element AlgebraTable::multiply(const Element& x, const Element& y) const {
  std::vector<Term> acc;
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) {
      const Rational c = s.value * t.value;
      for (const auto& p : product(s.index, t.index).terms()) acc.push_back({p.index, c * p.value});
    }
  return SparseVector(std::move(acc));
}

Element AlgebraTable::unit() const {
  std::vector<Term> t;
  for (int e : idempotents_) t.push_back({e, Rational(1)});
  return SparseVector(std::move(t));
}

void AlgebraTable::finalize() {
  sources_.assign(dim(), -1);
  targets_.assign(dim(), -1);
  for (int b = 0; b < dim(); ++b) {
    const SparseVector self = SparseVector::unit(b);
    for (int v = 0; v < vertex_count(); ++v) {
      if (product(b, idempotents_[v]) == self) sources_[b] = v;
      if (product(idempotents_[v], b) == self) targets_[b] = v;
    }
  }
}

bool AlgebraTable::corner_adapted() const {
  for (int b = 0; b < dim(); ++b)
    if (sources_.empty() || sources_[b] < 0 || targets_[b] < 0) return false;
  return true;
}

std::vector<int> AlgebraTable::corner(int target, int source) const {
  if (!corner_adapted()) throw Error("algebra basis is not adapted to its idempotents");
  std::vector<int> out;
  for (int b = 0; b < dim(); ++b)
    if (sources_[b] == source && targets_[b] == target) out.push_back(b);
  return out;
}

LawReport check_algebra_laws(const AlgebraTable& a, int samples, std::uint64_t seed) {
  const int n = a.dim();
  const Element one = a.unit();
  for (int b = 0; b < n; ++b) {
    const Element x = SparseVector::unit(b);
    if (!(a.multiply(one, x) == x) || !(a.multiply(x, one) == x))
      return {false, "unit fails on " + a.label(b)};
  }
  for (int i = 0; i < a.vertex_count(); ++i)
    for (int j = 0; j < a.vertex_count(); ++j) {
      Element p = a.multiply(a.idempotent(i), a.idempotent(j));
      if (!(p == (i == j ? a.idempotent(i) : Element())))
        return {false, "idempotents not orthogonal: " + a.vertex_labels()[i]};
    }
  auto check = [&](int x, int y, int z) {
    Element left = a.multiply(a.product(x, y), SparseVector::unit(z));
    Element right = a.multiply(SparseVector::unit(x), a.product(y, z));
    return left == right;
  };
  if (samples == 0) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!check(x, y, z))
            return {false, "not associative on " + a.label(x) + ", " + a.label(y) + ", " + a.label(z)};
  } else if (n > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < samples; ++s) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      if (!check(x, y, z))
        return {false, "not associative on " + a.label(x) + ", " + a.label(y) + ", " + a.label(z)};
    }
  }
  return {};
}

std::vector<std::vector<int>> cartan(const AlgebraTable& a) {
  const int r = a.vertex_count();
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  if (a.corner_adapted()) {
    for (int b = 0; b < a.dim(); ++b) ++c[a.target(b)][a.source(b)];
    return c;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Echelon span(false);
      for (int b = 0; b < a.dim(); ++b)
        span.insert(a.multiply(a.multiply(a.idempotent(i), SparseVector::unit(b)), a.idempotent(j)));
      c[i][j] = span.rank();
    }
  return c;
}

long long cartan_determinant(const AlgebraTable& a) {
  auto c = cartan(a);
  std::vector<std::vector<Rational>> m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int x : c[i]) m[i].push_back(Rational(x));
  Rational d = determinant(std::move(m));
  return d.get_num().get_si();
}

std::vector<Element> radical(const AlgebraTable& a) {
  const int n = a.dim();
  std::vector<Rational> trace(n);
  for (int z = 0; z < n; ++z)
    for (int c = 0; c < n; ++c) trace[z] += a.product(z, c).at(c);
  std::vector<SparseVector> columns;
  for (int x = 0; x < n; ++x) {
    std::vector<Term> row;
    for (int y = 0; y < n; ++y) {
      Rational t = 0;
      for (const auto& p : a.product(x, y).terms()) t += p.value * trace[p.index];
      if (t != 0) row.push_back({y, t});
    }
    columns.emplace_back(std::move(row));
  }
  return kernel(columns);
}

Element GroupAction::apply(const Element& x, int power) const {
  power = ((power % order) + order) % order;
  std::vector<Term> out;
  for (const auto& t : x.terms()) {
    int b = t.index;
    Rational c = t.value;
    for (int k = 0; k < power; ++k) {
      c *= scale[b];
      b = image[b];
    }
    out.push_back({b, c});
  }
  return SparseVector(std::move(out));
}

GroupAction GroupAction::trivial(int dim) {
  GroupAction g;
  g.order = 1;
  g.image.resize(dim);
  for (int k = 0; k < dim; ++k) g.image[k] = k;
  g.scale.assign(dim, Rational(1));
  return g;
}

LawReport check_action(const AlgebraTable& a, const GroupAction& g) {
  const int n = a.dim();
  if (static_cast<int>(g.image.size()) != n || static_cast<int>(g.scale.size()) != n)
    return {false, "action has the wrong size"};
  for (int b = 0; b < n; ++b) {
    Element x = SparseVector::unit(b);
    Element y = x;
    for (int k = 0; k < g.order; ++k) y = g.apply(y, 1);
    if (!(y == x)) return {false, "generator does not have the stated order on " + a.label(b)};
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Element lhs = g.apply(a.product(x, y));
      Element rhs = a.multiply(g.apply(SparseVector::unit(x)), g.apply(SparseVector::unit(y)));
      if (!(lhs == rhs)) return {false, "action is not multiplicative on " + a.label(x) + ", " + a.label(y)};
    }
  return {};
}

AlgebraTable skew_group_table(const AlgebraTable& a, const GroupAction& g) {
  if (auto r = check_action(a, g); !r.ok) throw Error("action not an automorphism: " + r.detail);
  const int n = g.order;
  const int d = a.dim();
  std::vector<std::string> labels(d * n);
  for (int b = 0; b < d; ++b)
    for (int k = 0; k < n; ++k) labels[b * n + k] = k == 0 ? a.label(b) : a.label(b) + "*g^" + std::to_string(k);
  std::vector<int> idem;
  for (int e : a.idempotents()) idem.push_back(e * n);
  AlgebraTable out(std::move(labels), std::move(idem), a.vertex_labels());
  for (int x = 0; x < d; ++x)
    for (int i = 0; i < n; ++i)
      for (int y = 0; y < d; ++y) {
        const Element moved = g.apply(SparseVector::unit(y), i);
        const Element prod = a.multiply(SparseVector::unit(x), moved);
        for (int j = 0; j < n; ++j) {
          std::vector<Term> terms;
          for (const auto& t : prod.terms()) terms.push_back({t.index * n + (i + j) % n, t.value});
          out.set_product(x * n + i, y * n + j, SparseVector(std::move(terms)));
        }
      }
  out.finalize();
  return out;
}

Element Truncation::coordinates(const AlgebraTable& big, const Element& x) const {
  (void)big;
  Echelon span;
  for (const Element& e : embedding) span.insert(e);
  auto c = span.solve(x);
  if (!c) throw Error("element does not lie in the truncation");
  return *c;
}

Truncation truncate(const AlgebraTable& a, const std::vector<Element>& idempotents,
                    const std::vector<std::string>& vertex_labels) {
  const int r = static_cast<int>(idempotents.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Element p = a.multiply(idempotents[i], idempotents[j]);
      if (!(p == (i == j ? idempotents[i] : Element())))
        throw Error("truncation idempotents are not orthogonal idempotents");
    }
  Truncation t;
  t.corner_of.assign(r, std::vector<int>(r, -1));
  t.corner_basis.assign(r, std::vector<std::vector<int>>(r));
  std::vector<std::string> labels;
  std::vector<int> idem(r, -1);
  std::vector<std::vector<Echelon>> solvers(r, std::vector<Echelon>(r));

  std::vector<std::vector<Element>> left(r);  // left[t][b] = f_t b
  for (int tgt = 0; tgt < r; ++tgt)
    for (int b = 0; b < a.dim(); ++b) left[tgt].push_back(a.multiply(idempotents[tgt], SparseVector::unit(b)));

  for (int tgt = 0; tgt < r; ++tgt)
    for (int src = 0; src < r; ++src) {
      Echelon& span = solvers[tgt][src];
      auto take = [&](const Element& x, const std::string& label) {
        if (x.empty() || span.contains(x)) return;
        span.insert(x);
        int id = static_cast<int>(t.embedding.size());
        t.embedding.push_back(x);
        t.corner_basis[tgt][src].push_back(id);
        labels.push_back(label);
        return;
      };
      if (tgt == src) {
        idem[tgt] = static_cast<int>(t.embedding.size());
        take(idempotents[tgt], "f[" + vertex_labels[tgt] + "]");
      }
      for (int b = 0; b < a.dim(); ++b)
        take(a.multiply(left[tgt][b], idempotents[src]),
             vertex_labels[tgt] + "|" + a.label(b) + "|" + vertex_labels[src]);
    }

  const int n = static_cast<int>(t.embedding.size());
  std::vector<int> where(n);  // position inside its corner
  std::vector<int> tgt_of(n), src_of(n);
  for (int tgt = 0; tgt < r; ++tgt)
    for (int src = 0; src < r; ++src)
      for (std::size_t k = 0; k < t.corner_basis[tgt][src].size(); ++k) {
        int id = t.corner_basis[tgt][src][k];
        where[id] = static_cast<int>(k);
        tgt_of[id] = tgt;
        src_of[id] = src;
      }

  AlgebraTable out(std::move(labels), idem, vertex_labels);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (src_of[x] != tgt_of[y]) continue;
      Element p = a.multiply(t.embedding[x], t.embedding[y]);
      if (p.empty()) continue;
      const int tgt = tgt_of[x], src = src_of[y];
      auto c = solvers[tgt][src].solve(p);
      if (!c) throw Error("truncated product left its corner");
      std::vector<Term> terms;
      for (const auto& term : c->terms()) terms.push_back({t.corner_basis[tgt][src][term.index], term.value});
      out.set_product(x, y, SparseVector(std::move(terms)));
    }
  out.finalize();
  t.table = std::move(out);
  return t;
}

AlgebraTable trivial_extension(const AlgebraTable& a) {
  const int d = a.dim();
  std::vector<std::string> labels = a.labels();
  for (int b = 0; b < d; ++b) labels.push_back("D(" + a.label(b) + ")");
  AlgebraTable out(std::move(labels), a.idempotents(), a.vertex_labels());
  std::vector<std::vector<Term>> left(d * d), right(d * d);  // [i*d+j]: a_i·b_j*, b_j*·a_i
  for (int l = 0; l < d; ++l)
    for (int i = 0; i < d; ++i)
      for (const auto& t : a.product(l, i).terms()) {
        // (a_i · b_j*)(b_l) = b_j*(b_l a_i); (b_j* · a_l)(b_i) = b_j*(a_l b_i)
        left[i * d + t.index].push_back({d + l, t.value});
        right[l * d + t.index].push_back({d + i, t.value});
      }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      out.set_product(x, y, a.product(x, y));
      out.set_product(x, d + y, SparseVector(left[x * d + y]));
      out.set_product(d + y, x, SparseVector(right[x * d + y]));
    }
  out.finalize();
  return out;
}

GroupAction trivial_extension_action(const AlgebraTable& a, const GroupAction& g) {
  const int d = a.dim();
  GroupAction out;
  out.order = g.order;
  out.image = g.image;
  out.scale = g.scale;
  for (int j = 0; j < d; ++j) {
    out.image.push_back(d + g.image[j]);
    out.scale.push_back(1 / g.scale[j]);
  }
  return out;
}

PhiReport check_trivial_extension_isomorphism(const AlgebraTable& lambda, const GroupAction& g) {
  const int d = lambda.dim();
  const int n = g.order;
  const AlgebraTable skew = skew_group_table(lambda, g);
  const AlgebraTable source = trivial_extension(skew);
  const AlgebraTable triv = trivial_extension(lambda);
  const AlgebraTable target = skew_group_table(triv, trivial_extension_action(lambda, g));
  const int dim = source.dim();
  if (dim != target.dim()) return {false, "dimensions differ"};

  std::vector<Element> phi(dim);
  for (int b = 0; b < d; ++b)
    for (int k = 0; k < n; ++k) {
      phi[b * n + k] = SparseVector::unit(b * n + k);
      // Dual of b ⊗ g^k goes to (0, Σ_l [g^k.b_l]_b b_l*) ⊗ g^{-k}.
      std::vector<Term> terms;
      for (int l = 0; l < d; ++l) {
        Rational c = g.apply(SparseVector::unit(l), k).at(b);
        if (c != 0) terms.push_back({(d + l) * n + (n - k) % n, c});
      }
      phi[d * n + b * n + k] = SparseVector(std::move(terms));
    }
  Echelon image(false);
  for (const auto& v : phi) image.insert(v);
  if (image.rank() != dim) return {false, "map is not bijective"};
  auto apply = [&](const Element& x) {
    SparseVector out;
    for (const auto& t : x.terms()) out.add_scaled(phi[t.index], t.value);
    return out;
  };
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      Element lhs = apply(source.product(x, y));
      Element rhs = target.multiply(phi[x], phi[y]);
      if (!(lhs == rhs))
        return {false, "not multiplicative on " + source.label(x) + ", " + source.label(y)};
    }
  if (!(apply(source.unit()) == target.unit())) return {false, "unit not preserved"};
  return {true, "isomorphism"};
}

BgaModel bga_model(const BrauerGraph& g) {
  if (g.is_skew()) throw Error("normal-form basis needs an ordinary graph");
  BgaModel model;
  const auto edges = g.edges();
  const int ne = static_cast<int>(edges.size());
  std::vector<std::string> labels, vertex_labels;
  std::vector<int> idem;
  for (int e = 0; e < ne; ++e) {
    model.edge_idempotent.push_back(static_cast<int>(labels.size()));
    idem.push_back(static_cast<int>(labels.size()));
    vertex_labels.push_back(g.edge_label(edges[e]));
    labels.push_back("e[" + vertex_labels.back() + "]");
  }
  struct Info {
    HalfEdge h;
    int length;  // 0 for idempotents, -1 for socles
    int source_edge;
    int target_edge;
  };
  std::vector<Info> info;
  for (int e = 0; e < ne; ++e) info.push_back({edges[e].first, 0, e, e});
  model.path.resize(g.size());
  for (HalfEdge h = 0; h < g.size(); ++h) {
    if (!g.induces_arrow(h)) continue;
    const int full = static_cast<int>(g.sigma_orbit(h).size()) * g.multiplicity(h);
    std::string label;
    for (int k = 1; k < full; ++k) {
      std::string arrow = "a(" + g.name(g.sigma(h, k - 1)) + ")";
      label = label.empty() ? arrow : arrow + " " + label;
      model.path[h].push_back(static_cast<int>(labels.size()));
      labels.push_back(label);
      info.push_back({h, k, g.edge_of(h), g.edge_of(g.sigma(h, k))});
    }
  }
  for (int e = 0; e < ne; ++e) {
    model.socle.push_back(static_cast<int>(labels.size()));
    labels.push_back("s[" + vertex_labels[e] + "]");
    info.push_back({edges[e].first, -1, e, e});
  }
  AlgebraTable t(std::move(labels), std::move(idem), std::move(vertex_labels));
  const int n = t.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Info& a = info[x];  // applied second
      const Info& b = info[y];  // applied first
      if (a.length == 0) {
        if (b.target_edge == a.source_edge) t.set_product(x, y, SparseVector::unit(y));
        continue;
      }
      if (b.length == 0) {
        if (a.source_edge == b.target_edge) t.set_product(x, y, SparseVector::unit(x));
        continue;
      }
      if (a.length < 0 || b.length < 0) continue;
      if (g.sigma(b.h, b.length) != a.h) continue;
      const int full = static_cast<int>(g.sigma_orbit(b.h).size()) * g.multiplicity(b.h);
      const int total = a.length + b.length;
      if (total < full) t.set_product(x, y, SparseVector::unit(model.path[b.h][total - 1]));
      else if (total == full) t.set_product(x, y, SparseVector::unit(model.socle[b.source_edge]));
    }
  t.finalize();
  model.table = std::move(t);
  return model;
}

int bga_dimension_formula(const BrauerGraph& g) {
  int d = 0;
  for (const auto& v : vertices(g).circ) {
    const int val = static_cast<int>(v.halfedges.size());
    d += v.multiplicity * val * val;
  }
  return d;
}

GroupAction sheet_shift(const CoveredGraph& c, const BgaModel& total) {
  const BrauerGraph& t = c.total;
  const int n = total.table.dim();
  GroupAction g;
  g.order = c.group_order;
  g.image.assign(n, -1);
  g.scale.assign(n, Rational(1));
  auto up = [&](HalfEdge x) { return c.lift(c.base_of(x), c.sheet_of(x) + 1); };
  const auto edges = t.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const int to = t.edge_of(up(edges[e].first));
    g.image[total.edge_idempotent[e]] = total.edge_idempotent[to];
    g.image[total.socle[e]] = total.socle[to];
  }
  for (HalfEdge x = 0; x < t.size(); ++x)
    for (std::size_t k = 0; k < total.path[x].size(); ++k) g.image[total.path[x][k]] = total.path[up(x)][k];
  return g;
}

}  // namespace brauer
