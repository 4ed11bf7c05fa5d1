#include "brauer/match.hpp"

#include "brauer/models.hpp"
#include "brauer/path_quotient.hpp"

namespace brauer {

namespace {

MatchReport fail(std::string detail) { return {false, std::move(detail)}; }

bool same_quiver(const Quiver& a, const Quiver& b) {
  if (a.vertices.size() != b.vertices.size() || a.arrows.size() != b.arrows.size()) return false;
  for (std::size_t v = 0; v < a.vertices.size(); ++v)
    if (a.vertices[v].edge != b.vertices[v].edge || a.vertices[v].copy != b.vertices[v].copy) return false;
  for (std::size_t k = 0; k < a.arrows.size(); ++k)
    if (a.arrows[k].h != b.arrows[k].h || a.arrows[k].source != b.arrows[k].source ||
        a.arrows[k].target != b.arrows[k].target)
      return false;
  return true;
}

// Dimension of the subalgebra generated by the vertex and arrow images.
int generated_dimension(const AlgebraModel& m) {
  Echelon span(false);
  std::vector<Element> frontier;
  for (const auto& e : m.vertex_images)
    if (!span.normal_form(e).empty()) {
      span.insert(e);
      frontier.push_back(e);
    }
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& a : m.arrow_images) {
        Element y = m.table.multiply(a, x);
        if (y.empty() || span.contains(y)) continue;
        span.insert(y);
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return span.rank();
}

}  // namespace

MatchReport presentations_match(const BrauerGraph& g, const CoveredGraph& c) {
  try {
    if (!(c.base.graph == g)) return fail("covering does not lie over the graph");
    const Presentation source = presentation(g);
    const Presentation target = truncation_presentation(c);
    if (!same_quiver(source.quiver, target.quiver)) return fail("quivers do not correspond");

    const TruncationModel tm = truncation_model(c);
    const AlgebraModel& m = tm.model;
    if (auto laws = check_algebra_laws(m.table, m.table.dim() <= 40 ? 0 : 10000); !laws.ok)
      return fail("truncation model: " + laws.detail);
    SparseVector unit;
    for (const auto& e : m.vertex_images) unit.add_scaled(e, 1);
    if (!(unit == m.table.unit())) return fail("vertex images do not sum to the unit");

    for (const auto& r : source.relations)
      if (!m.evaluate(r.terms).empty()) return fail("relation does not vanish: " + format_relation(source.quiver, r));
    for (const auto& r : target.relations)
      if (!m.evaluate(r.terms).empty())
        return fail("truncation relation does not vanish: " + format_relation(target.quiver, r));

    if (g.is_skew()) {
      for (HalfEdge h = 0; h < g.size(); ++h) {
        if (!g.induces_arrow(h)) continue;
        for (int i : copies(g, h)) {
          const auto cycles = special_cycles(g, source.quiver, h, i);
          const Element first = m.evaluate(cycles.front());
          for (const auto& cycle : cycles)
            if (!(m.evaluate(cycle) == first))
              return fail("special cycles differ in the model: " + format_path(source.quiver, cycle));
        }
      }
    }

    MatchReport report;
    report.model_dimension = m.table.dim();
    if (generated_dimension(m) != report.model_dimension) {
      report.detail = "vertex and arrow images do not generate the model";
      return report;
    }
    const PathQuotient quotient(source, nonzero_path_bound(g) + 1);
    report.quotient_dimension = quotient.dim();
    if (report.quotient_dimension != report.model_dimension) {
      report.detail = "dimension " + std::to_string(report.model_dimension) + " of the model differs from " +
                      std::to_string(report.quotient_dimension) + " of the quotient";
      return report;
    }
    report.match = true;
    report.detail = "isomorphic, dimension " + std::to_string(report.model_dimension);
    return report;
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace brauer
