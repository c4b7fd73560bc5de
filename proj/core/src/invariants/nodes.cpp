#include "cydesing/invariants/nodes.hpp"

#include "cydesing/error.hpp"
#include "cydesing/exact/field_linalg.hpp"

#include <algorithm>
#include <optional>

namespace cydesing {

namespace {

void check_config(const NodeConfiguration& cfg) {
  if (cfg.classes.empty()) throw PreconditionError("node configuration has no classes");
  for (const auto& c : cfg.classes)
    if (c.size() != cfg.dimension) throw PreconditionError("class dimension does not match configuration");
}

Vector<Rational> primitive(Vector<Rational> v) {
  Integer l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, x.den());
  for (auto& x : v) {
    x = x * Rational(l);
    g = gcd(g, x.num());
  }
  if (g != 0)
    for (auto& x : v) x = Rational(x.num() / g);
  auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
  if (first != v.end() && first->sign() < 0)
    for (auto& x : v) x = -x;
  return v;
}

// a . x >= b
struct Inequality {
  Vector<Rational> a;
  Rational b;
};

}  // namespace

SmoothabilityResult node_smoothable(const NodeConfiguration& cfg) {
  check_config(cfg);
  const std::size_t k = cfg.classes.size();
  auto cols = Matrix<Rational>::from_columns(cfg.classes, cfg.dimension);
  auto ker = kernel_basis(cols);

  for (std::size_t j = 0; j < k; ++j)
    if (std::all_of(ker.begin(), ker.end(), [j](const auto& v) { return v[j].is_zero(); })) return {};

  // Moment-curve combination sum t^i ker_i; only finitely many t give a zero coordinate.
  for (long t = 1;; ++t) {
    Vector<Rational> lambda(k, Rational(0));
    Rational p(1);
    for (const auto& v : ker) {
      lambda = lambda + scale(v, p);
      p = p * Rational(t);
    }
    if (std::none_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x.is_zero(); })) {
      lambda = primitive(lambda);
      if (!is_zero_vector(cols * lambda)) throw InternalError("smoothing relation failed verification");
      return {true, lambda};
    }
  }
}

KahlerResult node_kahler(const NodeConfiguration& cfg, std::size_t constraint_cap) {
  check_config(cfg);
  const std::size_t d = cfg.dimension;
  // Strict homogeneous positivity is equivalent to f . v >= 1 after scaling.
  std::vector<Inequality> system;
  for (const auto& v : cfg.classes) system.push_back({v, Rational(1)});

  std::vector<std::vector<Inequality>> levels;
  for (std::size_t var = d; var-- > 0;) {
    levels.push_back(system);
    std::vector<Inequality> lower, upper, next;
    for (auto& q : system) {
      int s = q.a[var].sign();
      if (s > 0) lower.push_back(q);
      else if (s < 0) upper.push_back(q);
      else next.push_back(q);
    }
    if (next.size() + lower.size() * upper.size() > constraint_cap)
      throw CapExceeded("Fourier-Motzkin constraint count", constraint_cap);
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        Rational cl = lo.a[var], cu = -up.a[var];
        Inequality q{lo.a, lo.b};
        q.a = scale(lo.a, cu) + scale(up.a, cl);
        q.b = cu * lo.b + cl * up.b;
        q.a[var] = Rational(0);
        next.push_back(std::move(q));
      }
    system = std::move(next);
  }
  for (const auto& q : system)
    if (q.b.sign() > 0) return {};

  // Back-substitution: variables were eliminated from d-1 down to 0.
  Vector<Rational> f(d, Rational(0));
  for (std::size_t var = 0; var < d; ++var) {
    const auto& sys = levels[d - 1 - var];
    std::optional<Rational> lo, hi;
    for (const auto& q : sys) {
      Rational c = q.a[var];
      if (c.is_zero()) continue;
      Rational rest = q.b;
      for (std::size_t u = 0; u < var; ++u) rest = rest - q.a[u] * f[u];
      Rational bound = rest / c;
      if (c.sign() > 0) lo = lo ? std::max(*lo, bound) : bound;
      else hi = hi ? std::min(*hi, bound) : bound;
    }
    if (lo && hi) f[var] = (*lo + *hi) / Rational(2);
    else if (lo) f[var] = *lo;
    else if (hi) f[var] = *hi;
  }
  for (const auto& v : cfg.classes)
    if (dot(f, v).sign() <= 0) throw InternalError("positive functional failed verification");
  return {true, f};
}

}  // namespace cydesing
