#include "cydesing/group/motion.hpp"

#include "cydesing/exact/field_linalg.hpp"

#include <sstream>

namespace cydesing {

RatMatrix complex_structure(std::size_t n) {
  RatMatrix j(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = -1;
    j(2 * k + 1, 2 * k) = 1;
  }
  return j;
}

RatMatrix conjugation_matrix(std::size_t n) {
  RatMatrix c(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    c(2 * k, 2 * k) = 1;
    c(2 * k + 1, 2 * k + 1) = -1;
  }
  return c;
}

Motion::Motion(RatMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0 || m_.rows() % 2)
    throw PreconditionError("motion matrix must be square of positive even size");
  if (determinant(m_).is_zero()) throw PreconditionError("motion matrix is singular");
  const std::size_t n = m_.rows() / 2;
  isometry_ = m_.transpose() * m_ == RatMatrix::identity(m_.rows());
  RatMatrix j = complex_structure(n);
  RatMatrix mj = m_ * j, jm = j * m_;
  complex_linear_ = mj == jm;
  anti_linear_ = mj == jm.scaled(Rational(-1));
}

Motion Motion::identity(std::size_t dim_real) { return Motion(RatMatrix::identity(dim_real)); }

Motion Motion::from_complex(const Matrix<Cyclotomic>& a, bool conjugate) {
  if (!a.is_square()) throw PreconditionError("complex matrix must be square");
  const std::size_t n = a.rows();
  RatMatrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto [re, im] = a(r, c).gaussian_parts();
      m(2 * r, 2 * c) = re;
      m(2 * r, 2 * c + 1) = -im;
      m(2 * r + 1, 2 * c) = im;
      m(2 * r + 1, 2 * c + 1) = re;
    }
  if (conjugate) m = m * conjugation_matrix(n);
  return Motion(std::move(m));
}

bool Motion::is_identity() const { return m_ == RatMatrix::identity(m_.rows()); }

Matrix<Cyclotomic> Motion::complex_matrix() const {
  RatMatrix lin;
  if (complex_linear_) lin = m_;
  else if (anti_linear_) lin = m_ * conjugation_matrix(complex_dim());
  else throw PreconditionError("motion is neither complex-linear nor anti-linear");
  const std::size_t n = complex_dim();
  Matrix<Cyclotomic> a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Cyclotomic::gaussian(lin(2 * r, 2 * c), lin(2 * r + 1, 2 * c));
  return a;
}

Motion Motion::operator*(const Motion& o) const {
  if (dim_real() != o.dim_real()) throw PreconditionError("motions of different dimension");
  return Motion(m_ * o.m_);
}

Motion Motion::inverse() const {
  auto inv = cydesing::inverse(m_, 1u << 20);
  return Motion(std::move(*inv));
}

std::string Motion::str() const {
  if (complex_linear_ || anti_linear_) {
    std::ostringstream os;
    os << complex_matrix().str();
    if (anti_linear_ && !complex_linear_) os << " conj";
    return os.str();
  }
  return m_.str();
}

}  // namespace cydesing
