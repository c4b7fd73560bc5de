#pragma once

#include "cydesing/exact/matrix.hpp"
#include "cydesing/exact/rational.hpp"

#include <string>
#include <vector>

namespace cydesing {

// Element of Q(zeta_m), stored as coefficients of 1, zeta, ..., zeta^{phi(m)-1}
// reduced modulo the m-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(int q) : Cyclotomic(Rational(q)) {}
  Cyclotomic(const Rational& q);
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(unsigned order, long long k = 1);
  // re + im*i in Q(zeta_4).
  static Cyclotomic gaussian(const Rational& re, const Rational& im);
  // Accepts rationals, "i", "-i", "a+bi", "a-bi", "bi", "1/2+1/2i".
  static Cyclotomic parse_gaussian(std::string_view text);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // The same element viewed in Q(zeta_{order}); order must be a multiple of order().
  Cyclotomic embed(unsigned order) const;
  // Smallest order n with the element in Q(zeta_n).
  Cyclotomic normalized() const;

  bool is_zero() const;
  bool is_rational() const;
  // Rational value; throws PreconditionError if the element is irrational.
  Rational as_rational() const;
  // Complex conjugate: zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  // Gaussian components (re, im); throws unless the element lies in Q(i).
  std::pair<Rational, Rational> gaussian_parts() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  void demote_if_rational();

  unsigned order_ = 1;
  std::vector<Rational> c_;
};

unsigned euler_phi(unsigned m);
// Integer coefficients of Phi_m, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);
unsigned lcm_order(unsigned a, unsigned b);


}  // namespace cydesing
