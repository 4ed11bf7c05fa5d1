#include "brauer/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace brauer {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int y : images_) {
    if (y < 0 || y >= size() || hit[y]) throw std::invalid_argument("not a bijection");
    hit[y] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

int Permutation::power(int x, int k) const {
  if (k < 0) {
    Permutation inv = inverse();
    for (int i = 0; i < -k; ++i) x = inv(x);
    return x;
  }
  for (int i = 0; i < k; ++i) x = images_[x];
  return x;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int x = 0; x < size(); ++x) v[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::operator*(const Permutation& right) const {
  if (right.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> v(images_.size());
  for (int x = 0; x < size(); ++x) v[x] = images_[right(x)];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<int> Permutation::orbit(int x) const {
  std::vector<int> out{x};
  for (int y = images_[x]; y != x; y = images_[y]) out.push_back(y);
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    out.push_back(orbit(x));
    for (int y : out.back()) seen[y] = true;
  }
  return out;
}

}  // namespace brauer
