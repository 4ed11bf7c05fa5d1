#include "brauer/models.hpp"

namespace brauer {

Element AlgebraModel::evaluate(const Path& p) const {
  Element x = vertex_images[p.source];
  for (int a : p.arrows) x = table.multiply(arrow_images[a], x);
  return x;
}

Element AlgebraModel::evaluate(const std::vector<std::pair<Rational, Path>>& terms) const {
  SparseVector sum;
  for (const auto& [c, p] : terms) sum.add_scaled(evaluate(p), c);
  return sum;
}

AlgebraModel ordinary_model(const BrauerGraph& g) {
  BgaModel bga = bga_model(g);
  AlgebraModel m;
  m.quiver = quiver(g);
  for (const auto& v : m.quiver.vertices) m.vertex_images.push_back(SparseVector::unit(bga.edge_idempotent[v.edge]));
  for (const auto& a : m.quiver.arrows) m.arrow_images.push_back(SparseVector::unit(bga.path[a.h].front()));
  m.table = std::move(bga.table);
  return m;
}

namespace {

int residue(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

TruncationModel truncation_model(const CoveredGraph& c) {
  const BrauerGraph& g = c.base.graph;
  const int n = c.group_order;
  TruncationModel out;
  out.total = bga_model(c.total);
  out.skew = skew_group_table(out.total.table, sheet_shift(c, out.total));
  const AlgebraTable& big = out.skew;

  auto tensor = [n](const Element& x, int power) {
    std::vector<Term> terms;
    for (const auto& t : x.terms()) terms.push_back({t.index * n + residue(power, n), t.value});
    return SparseVector(std::move(terms));
  };

  Quiver q = quiver(g, "b");
  std::vector<Element> f;
  std::vector<std::string> labels;
  for (const auto& v : q.vertices) {
    const HalfEdge h = g.edges()[v.edge].first;
    const Element e = SparseVector::unit(out.total.edge_idempotent[c.total.edge_of(c.lift(h, 0))]);
    if (v.copy == kNoCopy) {
      f.push_back(tensor(e, 0));
    } else {
      SparseVector x = tensor(e, 0).scaled(Rational(1, 2));
      x.add_scaled(tensor(e, 1), Rational(v.copy == 0 ? 1 : -1, 2));
      f.push_back(std::move(x));
    }
    labels.push_back(v.label);
  }
  out.truncation = truncate(big, f, labels);

  AlgebraModel& m = out.model;
  m.table = out.truncation.table;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    m.vertex_images.push_back(out.truncation.coordinates(big, f[v]));
  for (const auto& a : q.arrows) {
    const int d = c.base.grading.degrees[a.h];
    const HalfEdge lifted = c.lift(a.h, residue(-d, n));
    const Element beta = tensor(SparseVector::unit(out.total.path[lifted].front()), -d);
    const Element corner = big.multiply(big.multiply(f[a.target], beta), f[a.source]);
    m.arrow_images.push_back(out.truncation.coordinates(big, corner));
  }
  m.quiver = std::move(q);
  return out;
}

AlgebraModel algebra_model(const BrauerGraph& g) {
  if (!g.is_skew()) return ordinary_model(g);
  return truncation_model(cover({g, zero_grading(g)})).model;
}

int truncation_dimension_formula(const CoveredGraph& c) {
  const BgaModel total = bga_model(c.total);
  const auto table = cartan(total.table);
  const auto base_edges = c.base.graph.edges();
  int sum = 0;
  for (const auto& e : base_edges)
    for (const auto& e2 : base_edges)
      for (int k = 0; k < c.group_order; ++k) {
        const int from = c.total.edge_of(c.lift(e.first, 0));
        const int to = c.total.edge_of(c.lift(e2.first, k));
        sum += table[from][to];
      }
  return sum;
}

}  // namespace brauer

namespace brauer {

CoverCut cover_cut(const CoveredGraph& c, const HalfEdgeSet& delta) {
  const BrauerGraph& t = c.total;
  CoverCut out;
  out.presentation = admissible_cut(t, lift_subset(c, delta));
  out.algebra = PathQuotient(out.presentation, nonzero_path_bound(t) + 1);
  const Quiver& q = out.presentation.quiver;
  auto up = [&](HalfEdge x) { return c.lift(c.base_of(x), c.sheet_of(x) + 1); };
  std::vector<int> vertex_image, arrow_image;
  for (const auto& v : q.vertices) vertex_image.push_back(q.vertex(t.edge_of(up(t.edges()[v.edge].first)), kNoCopy));
  for (const auto& a : q.arrows) {
    auto image = q.arrow(up(a.h), vertex_image[a.source], vertex_image[a.target]);
    if (!image) throw Error("cut is not stable under the sheet shift");
    arrow_image.push_back(*image);
  }
  out.action = induced_action(out.algebra, vertex_image, arrow_image, c.group_order);
  return out;
}

}  // namespace brauer
