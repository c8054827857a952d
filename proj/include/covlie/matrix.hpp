#pragma once

#include <vector>

#include "covlie/basis.hpp"

namespace covlie {

/// Small dense square matrix over an exact scalar field.
class DenseMatrix {
 public:
  DenseMatrix(long long n, const FieldDesc& f);  // zero matrix
  static DenseMatrix identity(long long n, const FieldDesc& f);

  long long size() const { return n_; }
  const FieldDesc& field() const { return f_; }

  Scalar& at(long long i, long long j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Scalar& at(long long i, long long j) const {
    return e_[static_cast<std::size_t>(i * n_ + j)];
  }

  DenseMatrix transpose() const;
  DenseMatrix operator-() const;
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Scalar& c, const DenseMatrix& a);

  bool operator==(const DenseMatrix& o) const;
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Flattened as an element over Mat(i,j) labels (for rank computations).
  Element to_element() const;
  /// As an element over Loop(i,j,degree) labels.
  Element to_loop_element(long long degree) const;

 private:
  long long n_;
  FieldDesc f_;
  std::vector<Scalar> e_;
};

DenseMatrix mat_pow(const DenseMatrix& m, long long k);  // k >= 0
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace covlie
