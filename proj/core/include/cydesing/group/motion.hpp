#pragma once

#include "cydesing/exact/cyclotomic.hpp"
#include "cydesing/exact/smith.hpp"

namespace cydesing {

// Real coordinates of C^n are ordered (x_1, y_1, ..., x_n, y_n).
RatMatrix complex_structure(std::size_t n);
// diag(1, -1, ..., 1, -1): the conjugation z -> conj(z).
RatMatrix conjugation_matrix(std::size_t n);

// Invertible real-linear map of R^{2n} with exact rational entries.
class Motion {
 public:
  explicit Motion(RatMatrix m);

  static Motion identity(std::size_t dim_real);
  // z -> A z, or z -> A conj(z) when `conjugate` is set. Entries of A must be Gaussian rationals.
  static Motion from_complex(const Matrix<Cyclotomic>& a, bool conjugate = false);

  std::size_t dim_real() const { return m_.rows(); }
  std::size_t complex_dim() const { return m_.rows() / 2; }
  const RatMatrix& matrix() const { return m_; }

  bool is_isometry() const { return isometry_; }
  bool is_complex_linear() const { return complex_linear_; }
  bool is_anti_linear() const { return anti_linear_; }
  bool is_identity() const;

  // A with g(z) = A z (complex-linear) or g(z) = A conj(z) (anti-linear).
  Matrix<Cyclotomic> complex_matrix() const;

  Motion operator*(const Motion& o) const;
  Motion inverse() const;
  Vector<Rational> apply(const Vector<Rational>& v) const { return m_ * v; }

  friend bool operator==(const Motion& a, const Motion& b) { return a.m_ == b.m_; }
  friend bool operator<(const Motion& a, const Motion& b) { return a.m_ < b.m_; }

  std::string str() const;

 private:
  RatMatrix m_;
  bool isometry_ = false;
  bool complex_linear_ = false;
  bool anti_linear_ = false;
};

}  // namespace cydesing
