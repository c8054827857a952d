#include "covlie/matrix.hpp"

#include "covlie/errors.hpp"

namespace covlie {

DenseMatrix::DenseMatrix(long long n, const FieldDesc& f)
    : n_(n), f_(f), e_(static_cast<std::size_t>(n * n), scalar_zero(f)) {
  if (n < 1) throw UnsupportedInputError("matrix size must be >= 1");
}

DenseMatrix DenseMatrix::identity(long long n, const FieldDesc& f) {
  DenseMatrix m(n, f);
  for (long long i = 0; i < n; ++i) m.at(i, i) = scalar_one(f);
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(n_, f_);
  for (long long i = 0; i < n_; ++i) {
    for (long long j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix m(n_, f_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix m(a.n_, a.f_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return a + (-b); }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix m(a.n_, a.f_);
  for (long long i = 0; i < a.n_; ++i) {
    for (long long k = 0; k < a.n_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (long long j = 0; j < a.n_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) = m.at(i, j) + aik * bkj;
      }
    }
  }
  return m;
}

DenseMatrix operator*(const Scalar& c, const DenseMatrix& a) {
  DenseMatrix m(a.n_, a.f_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = c * a.e_[i];
  return m;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != o.e_[i]) return false;
  }
  return true;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Element DenseMatrix::to_element() const {
  Element e;
  for (long long i = 0; i < n_; ++i) {
    for (long long j = 0; j < n_; ++j) e.add(BasisId::mat(i, j), at(i, j));
  }
  return e;
}

Element DenseMatrix::to_loop_element(long long degree) const {
  Element e;
  for (long long i = 0; i < n_; ++i) {
    for (long long j = 0; j < n_; ++j) e.add(BasisId::loop(i, j, degree), at(i, j));
  }
  return e;
}

DenseMatrix mat_pow(const DenseMatrix& m, long long k) {
  if (k < 0) throw UnsupportedInputError("mat_pow expects a nonnegative exponent");
  DenseMatrix acc = DenseMatrix::identity(m.size(), m.field());
  DenseMatrix base = m;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

}  // namespace covlie
