#include "brauer/homotopy.hpp"

#include "brauer/models.hpp"
#include "brauer/moves.hpp"

namespace brauer {

namespace {

// Dense-shaped matrix of algebra elements; keeps its shape when empty.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Element> entries;

  Mat(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}
  Element& at(int r, int c) { return entries[r * cols + c]; }
  const Element& at(int r, int c) const { return entries[r * cols + c]; }
};

Mat from_matrix(const Matrix& m, int rows, int cols) {
  Mat out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(r, c) = m[r][c];
  return out;
}

Mat multiply(const AlgebraTable& a, const Mat& g, const Mat& f) {
  Mat out(g.rows, f.cols);
  for (int r = 0; r < g.rows; ++r)
    for (int p = 0; p < f.cols; ++p) {
      SparseVector sum;
      for (int q = 0; q < g.cols; ++q) sum.add_scaled(a.multiply(g.at(r, q), f.at(q, p)), 1);
      out.at(r, p) = std::move(sum);
    }
  return out;
}

Mat identity(const AlgebraTable& a, const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  Mat out(n, n);
  for (int k = 0; k < n; ++k) out.at(k, k) = a.idempotent(vertices[k]);
  return out;
}

// Elementary matrices spanning Hom(⊕ e_src A, ⊕ e_tgt A).
std::vector<Mat> elementary(const AlgebraTable& a, const std::vector<int>& src, const std::vector<int>& tgt) {
  std::vector<Mat> out;
  const int rows = static_cast<int>(tgt.size()), cols = static_cast<int>(src.size());
  for (int q = 0; q < rows; ++q)
    for (int p = 0; p < cols; ++p)
      for (int b : a.corner(tgt[q], src[p])) {
        Mat m(rows, cols);
        m.at(q, p) = SparseVector::unit(b);
        out.push_back(std::move(m));
      }
  return out;
}

void flatten_into(const Mat& m, int dim, int offset, std::vector<Term>& out) {
  for (int k = 0; k < static_cast<int>(m.entries.size()); ++k)
    for (const auto& t : m.entries[k].terms()) out.push_back({offset + k * dim + t.index, t.value});
}

SparseVector flatten(const Mat& m, int dim) {
  std::vector<Term> out;
  flatten_into(m, dim, 0, out);
  return SparseVector(std::move(out));
}

struct ChainMap {
  Mat minus_one;
  Mat zero;
};

struct Shapes {
  const AlgebraTable& a;
  const Complex& x;
  const Complex& y;
  int x1() const { return static_cast<int>(x.minus_one.size()); }
  int x0() const { return static_cast<int>(x.zero.size()); }
  int y1() const { return static_cast<int>(y.minus_one.size()); }
  int y0() const { return static_cast<int>(y.zero.size()); }
  Mat dx() const { return from_matrix(x.differential, x0(), x1()); }
  Mat dy() const { return from_matrix(y.differential, y0(), y1()); }
};

SparseVector flatten(const ChainMap& f, int dim) {
  std::vector<Term> out;
  flatten_into(f.minus_one, dim, 0, out);
  flatten_into(f.zero, dim, static_cast<int>(f.minus_one.entries.size()) * dim, out);
  return SparseVector(std::move(out));
}

Mat combine(const std::vector<Mat>& basis, const SparseVector& coefficients, int rows, int cols) {
  Mat out(rows, cols);
  for (const auto& t : coefficients.terms())
    for (int k = 0; k < static_cast<int>(out.entries.size()); ++k)
      out.entries[k].add_scaled(basis[t.index].entries[k], t.value);
  return out;
}

// Chain maps X -> Y together with the null-homotopic ones.
struct HomSpace {
  std::vector<ChainMap> reps;
  Echelon reducer;  // homotopies first, then representatives
  int homotopies = 0;

  SparseVector coordinates(const ChainMap& f, int dim) const {
    auto c = reducer.solve(flatten(f, dim));
    if (!c) throw Error("composite is not a chain map");
    std::vector<Term> out;
    for (const auto& t : c->terms())
      if (t.index >= homotopies) out.push_back({t.index - homotopies, t.value});
    return SparseVector(std::move(out));
  }
};

HomSpace hom_space(const Shapes& s, bool identity_first) {
  const AlgebraTable& a = s.a;
  const int dim = a.dim();
  const Mat dx = s.dx(), dy = s.dy();
  const auto low = elementary(a, s.x.minus_one, s.y.minus_one);
  const auto high = elementary(a, s.x.zero, s.y.zero);

  // Chain condition f0 dX - dY f1 = 0, as a linear map on (f1, f0).
  std::vector<SparseVector> columns;
  for (const Mat& e : low) columns.push_back(flatten(multiply(a, dy, e), dim).scaled(-1));
  for (const Mat& e : high) columns.push_back(flatten(multiply(a, e, dx), dim));
  const int n_low = static_cast<int>(low.size());

  HomSpace out{{}, Echelon(true), 0};
  for (const Mat& h : elementary(a, s.x.zero, s.y.minus_one)) {
    auto v = flatten(ChainMap{multiply(a, h, dx), multiply(a, dy, h)}, dim);
    if (out.reducer.contains(v)) continue;
    out.reducer.insert(v);
    ++out.homotopies;
  }
  auto consider = [&](ChainMap f) {
    auto v = flatten(f, dim);
    if (out.reducer.contains(v)) return false;
    out.reducer.insert(v);
    out.reps.push_back(std::move(f));
    return true;
  };
  if (identity_first && !consider({identity(a, s.x.minus_one), identity(a, s.x.zero)}))
    throw Error("complex " + s.x.label + " is null-homotopic");
  for (const auto& k : kernel(columns)) {
    std::vector<Term> lo, hi;
    for (const auto& t : k.terms()) (t.index < n_low ? lo : hi).push_back({t.index < n_low ? t.index : t.index - n_low, t.value});
    consider({combine(low, SparseVector(lo), s.y1(), s.x1()), combine(high, SparseVector(hi), s.y0(), s.x0())});
  }
  return out;
}

int rank_of(const std::vector<SparseVector>& vs) {
  Echelon e(false);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

std::vector<Element> radical_corner(const AlgebraTable& a, const std::vector<Element>& rad, int target, int source) {
  std::vector<Element> out;
  for (const auto& r : rad) {
    Element x = a.multiply(a.multiply(a.idempotent(target), r), a.idempotent(source));
    if (!x.empty()) out.push_back(std::move(x));
  }
  return out;
}

Approximation minimal_approximation(const AlgebraTable& a, const std::vector<Element>& rad, int source,
                                    const std::vector<int>& allowed) {
  Approximation f;
  f.source = source;
  for (int w : allowed) {
    Echelon factored(false);
    for (int w2 : allowed)
      for (const auto& j : radical_corner(a, rad, w, w2))
        for (int u : a.corner(w2, source)) factored.insert(a.multiply(j, SparseVector::unit(u)));
    for (int u : a.corner(w, source)) {
      const auto x = SparseVector::unit(u);
      if (factored.contains(x)) continue;
      factored.insert(x);
      f.targets.push_back(w);
      f.components.push_back(x);
    }
  }
  return f;
}

}  // namespace

Complex stalk(int vertex, std::string label) { return {{}, {vertex}, Matrix(1), std::move(label)}; }

std::vector<int> proj_hom(const AlgebraTable& a, int source, int target) { return a.corner(target, source); }

Approximation minimal_approximation(const AlgebraTable& a, int source, const std::vector<int>& allowed) {
  return minimal_approximation(a, radical(a), source, allowed);
}

LawReport check_approximation(const AlgebraTable& a, const Approximation& f, const std::vector<int>& allowed) {
  const auto rad = radical(a);
  for (int w : allowed) {
    Echelon reached(false);
    for (std::size_t k = 0; k < f.targets.size(); ++k)
      for (int y : a.corner(w, f.targets[k])) reached.insert(a.multiply(SparseVector::unit(y), f.components[k]));
    if (reached.rank() != static_cast<int>(a.corner(w, f.source).size()))
      return {false, "a map to " + a.vertex_labels()[w] + " does not factor"};
    Echelon factored(false);
    for (int w2 : allowed)
      for (const auto& j : radical_corner(a, rad, w, w2))
        for (int u : a.corner(w2, f.source)) factored.insert(a.multiply(j, SparseVector::unit(u)));
    for (std::size_t k = 0; k < f.targets.size(); ++k) {
      if (f.targets[k] != w) continue;
      if (factored.contains(f.components[k]))
        return {false, "component to " + a.vertex_labels()[w] + " can be dropped"};
      factored.insert(f.components[k]);
    }
  }
  return {};
}

Complex cone(const Approximation& f, std::string label) {
  Complex c;
  c.minus_one = {f.source};
  c.zero = f.targets;
  for (const auto& x : f.components) c.differential.push_back({x});
  c.label = std::move(label);
  return c;
}

GraphApproximation graph_approximation(const BrauerGraph& g, const HalfEdgeSet& subset, HalfEdge h) {
  if (!subset.count(h)) throw Error("half-edge " + g.name(h) + " is not in the subset");
  GraphApproximation out;
  out.from = h;
  HalfEdge x = h;
  do {
    out.walk.push_back(x);
    x = g.sigma(x);
  } while (subset.count(x) && x != h);
  if (subset.count(x)) {
    out.walk.clear();
    return out;
  }
  out.target_edge = g.edge_of(x);
  return out;
}

std::vector<int> moved_vertices(const BrauerGraph& g, const Quiver& q, const HalfEdgeSet& subset) {
  const auto edges = g.edges();
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    if (subset.count(edges[q.vertices[v].edge].first)) out.push_back(v);
  return out;
}

std::vector<Complex> mutation_object(const AlgebraTable& a, const std::vector<int>& moved) {
  std::vector<int> allowed;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (std::find(moved.begin(), moved.end(), v) == moved.end()) allowed.push_back(v);
  const auto rad = radical(a);
  std::vector<Complex> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const std::string& label = a.vertex_labels()[v];
    if (std::find(moved.begin(), moved.end(), v) == moved.end()) out.push_back(stalk(v, label));
    else out.push_back(cone(minimal_approximation(a, rad, v, allowed), label));
  }
  return out;
}

int hom_dimension(const AlgebraTable& a, const Complex& x, const Complex& y, int shift) {
  const Shapes s{a, x, y};
  const int dim = a.dim();
  if (shift == 0) {
    const HomSpace h = hom_space(s, false);
    return static_cast<int>(h.reps.size());
  }
  if (shift == 1) {
    // Every X^{-1} -> Y^0 is a chain map; homotopies are dY h1 + h0 dX.
    const int total = static_cast<int>(elementary(a, x.minus_one, y.zero).size());
    std::vector<SparseVector> image;
    const Mat dx = s.dx(), dy = s.dy();
    for (const Mat& h : elementary(a, x.minus_one, y.minus_one)) image.push_back(flatten(multiply(a, dy, h), dim));
    for (const Mat& h : elementary(a, x.zero, y.zero)) image.push_back(flatten(multiply(a, h, dx), dim));
    return total - rank_of(image);
  }
  if (shift == -1) {
    // Maps X^0 -> Y^{-1} killed by dY on the left and by dX on the right.
    const auto basis = elementary(a, x.zero, y.minus_one);
    const Mat dx = s.dx(), dy = s.dy();
    std::vector<SparseVector> columns;
    const int offset = static_cast<int>(y.zero.size() * x.zero.size()) * dim;
    for (const Mat& f : basis) {
      std::vector<Term> t;
      flatten_into(multiply(a, dy, f), dim, 0, t);
      flatten_into(multiply(a, f, dx), dim, offset, t);
      columns.emplace_back(std::move(t));
    }
    return static_cast<int>(kernel(columns).size());
  }
  return 0;
}

EndAlgebra end_table(const AlgebraTable& a, const std::vector<Complex>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int shift : {1, -1})
        if (hom_dimension(a, t[i], t[j], shift) != 0)
          throw Error("not tilting: Hom(" + t[i].label + ", " + t[j].label + "[" + std::to_string(shift) + "]) != 0");

  std::vector<std::vector<HomSpace>> homs(n);  // homs[b][a] = Hom(T_a, T_b)
  std::vector<std::vector<int>> offset(n, std::vector<int>(n));
  std::vector<std::string> labels;
  EndAlgebra out;
  out.cartan.assign(n, std::vector<int>(n));
  for (int b = 0; b < n; ++b)
    for (int s = 0; s < n; ++s) {
      homs[b].push_back(hom_space(Shapes{a, t[s], t[b]}, s == b));
      offset[b][s] = static_cast<int>(labels.size());
      out.cartan[b][s] = static_cast<int>(homs[b][s].reps.size());
      for (std::size_t k = 0; k < homs[b][s].reps.size(); ++k)
        labels.push_back(t[b].label + "<-" + t[s].label + "#" + std::to_string(k));
    }
  std::vector<int> idem;
  std::vector<std::string> vertex_labels;
  for (int v = 0; v < n; ++v) {
    idem.push_back(offset[v][v]);
    vertex_labels.push_back(t[v].label);
  }
  AlgebraTable table(std::move(labels), std::move(idem), std::move(vertex_labels));
  for (int b = 0; b < n; ++b)
    for (int m = 0; m < n; ++m)
      for (int s = 0; s < n; ++s)
        for (std::size_t i = 0; i < homs[b][m].reps.size(); ++i)
          for (std::size_t j = 0; j < homs[m][s].reps.size(); ++j) {
            const ChainMap& g = homs[b][m].reps[i];
            const ChainMap& f = homs[m][s].reps[j];
            ChainMap composite{multiply(a, g.minus_one, f.minus_one), multiply(a, g.zero, f.zero)};
            SparseVector c = homs[b][s].coordinates(composite, a.dim());
            std::vector<Term> shifted;
            for (const auto& term : c.terms()) shifted.push_back({offset[b][s] + term.index, term.value});
            table.set_product(offset[b][m] + static_cast<int>(i), offset[m][s] + static_cast<int>(j),
                              SparseVector(std::move(shifted)));
          }
  table.finalize();
  out.table = std::move(table);
  return out;
}

namespace {

bool is_symmetric(const std::vector<std::vector<int>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

// Whether the matrices agree after swapping the two copies of some doubled vertices.
bool equal_up_to_copies(const Quiver& q, const std::vector<std::vector<int>>& x,
                        const std::vector<std::vector<int>>& y) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    if (q.vertices[v].copy == 0) pairs.push_back({v, q.vertex(q.vertices[v].edge, 1)});
  const int n = static_cast<int>(x.size());
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) std::swap(perm[pairs[k].first], perm[pairs[k].second]);
    bool same = true;
    for (int i = 0; i < n && same; ++i)
      for (int j = 0; j < n && same; ++j) same = x[i][j] == y[perm[i]][perm[j]];
    if (same) return true;
  }
  return false;
}

}  // namespace

MutationReport verify_mutation(const BrauerGraph& g, const HalfEdgeSet& subset) {
  MutationReport r;
  try {
    const AlgebraModel model = algebra_model(g);
    const AlgebraTable& a = model.table;
    const auto moved = moved_vertices(g, model.quiver, subset);
    std::vector<int> allowed;
    for (int v = 0; v < a.vertex_count(); ++v)
      if (std::find(moved.begin(), moved.end(), v) == moved.end()) allowed.push_back(v);

    const auto t = mutation_object(a, moved);
    r.approximations = true;
    for (int v : moved) {
      Approximation f{v, t[v].zero, {}};
      for (const auto& row : t[v].differential) f.components.push_back(row[0]);
      if (auto check = check_approximation(a, f, allowed); !check.ok) {
        r.approximations = false;
        r.detail = check.detail;
      }
    }
    r.silting = r.tilting = true;
    for (const auto& x : t)
      for (const auto& y : t) {
        r.silting = r.silting && hom_dimension(a, x, y, 1) == 0;
        r.tilting = r.tilting && hom_dimension(a, x, y, -1) == 0;
      }
    r.tilting = r.tilting && r.silting;
    if (!r.tilting) {
      r.detail = r.silting ? "negative self-extensions" : "positive self-extensions";
      return r;
    }
    const EndAlgebra end = end_table(a, t);
    r.end_dimension = end.table.dim();
    const auto laws = check_algebra_laws(end.table, end.table.dim() <= 40 ? 0 : 3000);
    r.laws = laws.ok;

    const AlgebraModel after = algebra_model(move_set(g, subset));
    const auto target = cartan(after.table);
    r.moved_dimension = after.table.dim();
    r.cartan_equal = equal_up_to_copies(model.quiver, end.cartan, target);
    r.symmetric = is_symmetric(end.cartan) && is_symmetric(target);
    if (r.detail.empty()) r.detail = laws.ok ? "dim End(T) = " + std::to_string(r.end_dimension) : laws.detail;
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace brauer
