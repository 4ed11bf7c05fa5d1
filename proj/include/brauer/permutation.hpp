#pragma once

#include <vector>

namespace brauer {

// Bijection of {0, ..., n-1}. Products read right to left: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws unless bijective
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  int power(int x, int k) const;  // k may be negative
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& right) const;
  bool operator==(const Permutation&) const = default;

  bool fixes(int x) const { return images_[x] == x; }
  bool is_identity() const;
  // Orbit of x listed as x, p(x), p(p(x)), ...
  std::vector<int> orbit(int x) const;
  // All cycles including fixed points, each starting at its smallest element,
  // ordered by that element.
  std::vector<std::vector<int>> cycles() const;

 private:
  std::vector<int> images_;
};

}  // namespace brauer
