#include "cydesing/exact/smith.hpp"

#include "cydesing/exact/field_linalg.hpp"

namespace cydesing {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
}

// col_i += f * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m, std::size_t cap) {
  check_matrix_cap(m.rows(), m.cols(), cap, "snf");
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (pi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(d, t, bad, Integer(1));
      add_row(u, t, bad, Integer(1));
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithDecomposition out;
  out.invariant_factors.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.invariant_factors.push_back(d(t, t));
  out.U = std::move(u);
  out.D = std::move(d);
  out.V = std::move(v);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(convert<Rational>(m), 1u << 20);
  if (!inv) throw PreconditionError("matrix is singular");
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (!x.is_integer()) throw PreconditionError("matrix is not unimodular");
      r(i, j) = x.num();
    }
  return r;
}

}  // namespace cydesing
