#include "brauer/path_quotient.hpp"

#include <deque>

namespace brauer {

namespace {

std::optional<Path> concat(const Quiver& q, const Path& first, const Path& second) {
  if (path_target(q, first) != second.source) return std::nullopt;
  Path out = first;
  out.arrows.insert(out.arrows.end(), second.arrows.begin(), second.arrows.end());
  return out;
}

}  // namespace

PathQuotient::PathQuotient(const Presentation& p, int length) : quiver_(p.quiver), length_(length), ideal_(false) {
  // Paths ordered by length, then by arrow sequence.
  std::vector<Path> level;
  for (int v = 0; v < static_cast<int>(quiver_.vertices.size()); ++v) level.push_back({v, {}});
  for (int len = 0; len <= length_; ++len) {
    for (const Path& path : level) {
      index_.emplace(path, static_cast<int>(paths_.size()));
      paths_.push_back(path);
    }
    if (len == length_) break;
    std::vector<Path> next;
    for (const Path& path : level) {
      const int end = path_target(quiver_, path);
      for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
        if (quiver_.arrows[a].source != end) continue;
        Path longer = path;
        longer.arrows.push_back(a);
        next.push_back(std::move(longer));
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) {
      return std::tie(x.arrows, x.source) < std::tie(y.arrows, y.source);
    });
    level = std::move(next);
  }

  std::vector<Path> arrows;
  for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a)
    arrows.push_back({quiver_.arrows[a].source, {a}});

  auto multiply = [&](const SparseVector& v, const Path& arrow, bool arrow_first) {
    std::vector<Term> out;
    for (const auto& t : v.terms()) {
      auto prod = arrow_first ? concat(quiver_, arrow, paths_[t.index]) : concat(quiver_, paths_[t.index], arrow);
      if (!prod) continue;
      if (auto k = index_of(*prod)) out.push_back({*k, t.value});
    }
    return SparseVector(std::move(out));
  };

  std::deque<SparseVector> queue;
  for (const Relation& r : p.relations) queue.push_back(to_vector(r.terms));
  while (!queue.empty()) {
    SparseVector v = ideal_.normal_form(queue.front());
    queue.pop_front();
    if (v.empty()) continue;
    ideal_.insert(v);
    for (const Path& a : arrows) {
      queue.push_back(multiply(v, a, true));
      queue.push_back(multiply(v, a, false));
    }
  }

  for (const Path& path : paths_)
    if (static_cast<int>(path.arrows.size()) == length_ && !ideal_.contains(to_vector({{Rational(1), path}})))
      throw Error("path of length " + std::to_string(length_) + " survives in the quotient");

  position_.assign(paths_.size(), -1);
  std::vector<std::string> labels;
  for (int k = 0; k < static_cast<int>(paths_.size()); ++k) {
    if (ideal_.is_pivot(k)) continue;
    position_[k] = static_cast<int>(basis_paths_.size());
    basis_paths_.push_back(paths_[k]);
    labels.push_back(format_path(quiver_, paths_[k]));
  }
  std::vector<int> idem;
  std::vector<std::string> vertex_labels;
  for (int v = 0; v < static_cast<int>(quiver_.vertices.size()); ++v) {
    idem.push_back(position_[v]);
    vertex_labels.push_back(quiver_.vertices[v].label);
  }
  table_ = AlgebraTable(std::move(labels), std::move(idem), std::move(vertex_labels));
  const int n = table_.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (auto prod = concat(quiver_, basis_paths_[y], basis_paths_[x]))
        table_.set_product(x, y, reduce({{Rational(1), *prod}}));
  table_.finalize();
}

std::optional<int> PathQuotient::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector PathQuotient::to_vector(const std::vector<std::pair<Rational, Path>>& terms) const {
  std::vector<Term> out;
  for (const auto& [c, path] : terms) {
    if (static_cast<int>(path.arrows.size()) > length_) continue;
    auto k = index_of(path);
    if (!k) throw Error("path is not a path of the quiver");
    out.push_back({*k, c});
  }
  return SparseVector(std::move(out));
}

Element PathQuotient::reduce(const std::vector<std::pair<Rational, Path>>& terms) const {
  SparseVector nf = ideal_.normal_form(to_vector(terms));
  std::vector<Term> out;
  for (const auto& t : nf.terms()) out.push_back({position_[t.index], t.value});
  return SparseVector(std::move(out));
}

}  // namespace brauer

namespace brauer {

GroupAction induced_action(const PathQuotient& q, const std::vector<int>& vertex_image,
                           const std::vector<int>& arrow_image, int order) {
  GroupAction g;
  g.order = order;
  for (const Path& p : q.basis_paths()) {
    Path moved{vertex_image[p.source], {}};
    for (int a : p.arrows) moved.arrows.push_back(arrow_image[a]);
    const Element image = q.reduce(moved);
    if (image.size() != 1) throw Error("quiver automorphism does not act monomially on the basis");
    g.image.push_back(image.terms()[0].index);
    g.scale.push_back(image.terms()[0].value);
  }
  return g;
}

}  // namespace brauer
