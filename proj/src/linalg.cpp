#include "brauer/linalg.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace brauer {

SparseVector::SparseVector(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().index == t.index) {
      terms_.back().value += t.value;
      if (terms_.back().value == 0) terms_.pop_back();
    } else if (t.value != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

SparseVector SparseVector::unit(int index, Rational value) {
  SparseVector v;
  if (value != 0) v.terms_.push_back({index, std::move(value)});
  return v;
}

Rational SparseVector::at(int index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, int i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) return it->value;
  return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
  if (factor == 0 || other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Rational s = a->value + factor * b->value;
      if (s != 0) merged.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector out;
  if (factor == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.value *= factor;
  return out;
}

bool SparseVector::operator==(const SparseVector& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].index != other.terms_[i].index || terms_[i].value != other.terms_[i].value)
      return false;
  }
  return true;
}

std::vector<Rational> to_dense(const SparseVector& v, int dim) {
  std::vector<Rational> out(dim);
  for (const auto& t : v.terms()) out.at(t.index) = t.value;
  return out;
}

SparseVector to_sparse(const std::vector<Rational>& v) {
  std::vector<Term> terms;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) terms.push_back({i, v[i]});
  return SparseVector(std::move(terms));
}

Echelon::Reduction Echelon::reduce(const SparseVector& v) const {
  std::map<int, Rational> work;
  for (const auto& t : v.terms()) work.emplace(t.index, t.value);
  std::vector<Term> kept;
  SparseVector combination;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    int pivot = top->first;
    Rational c = std::move(top->second);
    work.erase(top);
    auto row = rows_.find(pivot);
    if (row == rows_.end()) {
      kept.push_back({pivot, std::move(c)});
      continue;
    }
    for (const auto& t : row->second.vector.terms()) {
      if (t.index == pivot) continue;
      auto [it, fresh] = work.try_emplace(t.index, 0);
      it->second -= c * t.value;
      if (it->second == 0) work.erase(it);
    }
    if (track_) combination.add_scaled(row->second.combination, c);
  }
  std::reverse(kept.begin(), kept.end());
  return {SparseVector(std::move(kept)), std::move(combination)};
}

std::optional<SparseVector> Echelon::insert(const SparseVector& v) {
  Reduction r = reduce(v);
  int id = generators_++;
  SparseVector combination;
  if (track_) {
    combination = SparseVector::unit(id);
    combination.add_scaled(r.combination, -1);
  }
  if (r.remainder.empty()) return combination;
  Rational lead = r.remainder.terms().back().value;
  Rational inv = 1 / lead;
  int pivot = r.remainder.leading();
  rows_.emplace(pivot, Row{r.remainder.scaled(inv), combination.scaled(inv)});
  return std::nullopt;
}

std::optional<SparseVector> Echelon::solve(const SparseVector& v) const {
  if (!track_) throw std::logic_error("Echelon::solve needs tracking");
  Reduction r = reduce(v);
  if (!r.remainder.empty()) return std::nullopt;
  return r.combination;
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
  Echelon e;
  std::vector<SparseVector> out;
  for (const auto& c : columns)
    if (auto rel = e.insert(c)) out.push_back(std::move(*rel));
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace brauer
