#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

using Rational = mpq_class;

struct Term {
  int index;
  Rational value;
};

// Sparse vector with strictly increasing indices and no zero values.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::vector<Term> terms);  // sorts and merges
  static SparseVector unit(int index, Rational value = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational at(int index) const;
  int leading() const { return terms_.back().index; }

  // this += factor * other
  void add_scaled(const SparseVector& other, const Rational& factor);
  SparseVector scaled(const Rational& factor) const;
  bool operator==(const SparseVector&) const;

 private:
  std::vector<Term> terms_;
};

std::vector<Rational> to_dense(const SparseVector& v, int dim);
SparseVector to_sparse(const std::vector<Rational>& v);

// Incremental row echelon form over the rationals. Pivots are the largest
// index of each row, so reduction towards small indices produces normal forms
// with respect to the index order. Each row remembers which combination of
// the inserted generators produced it, which gives kernels and coordinates.
class Echelon {
 public:
  struct Reduction {
    SparseVector remainder;
    SparseVector combination;  // over generator ids: v = remainder + sum c_g gen_g
  };

  explicit Echelon(bool track = true) : track_(track) {}

  Reduction reduce(const SparseVector& v) const;
  SparseVector normal_form(const SparseVector& v) const { return reduce(v).remainder; }

  // Inserts v as generator number generator_count(). Returns the kernel
  // relation (over generator ids, including the new one) when v is dependent.
  std::optional<SparseVector> insert(const SparseVector& v);

  bool contains(const SparseVector& v) const { return reduce(v).remainder.empty(); }
  // Coordinates over generator ids, when v lies in the span.
  std::optional<SparseVector> solve(const SparseVector& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int generator_count() const { return generators_; }
  bool is_pivot(int index) const { return rows_.count(index) != 0; }

 private:
  struct Row {
    SparseVector vector;
    SparseVector combination;
  };
  bool track_;
  int generators_ = 0;
  std::map<int, Row> rows_;
};

// Basis of the kernel of the linear map whose columns are given.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns);

Rational determinant(std::vector<std::vector<Rational>> m);

std::string to_string(const Rational& q);

}  // namespace brauer
