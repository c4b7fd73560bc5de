#include "cydesing/exact/cyclotomic.hpp"

#include "cydesing/exact/field_linalg.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cydesing {

namespace {

struct PhiCache {
  std::mutex mutex;
  std::map<unsigned, std::vector<long long>> table;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

std::vector<long long> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto& q = cyclotomic_polynomial(d);
    std::size_t dq = q.size() - 1;
    std::vector<long long> quot(p.size() - dq, 0);
    for (std::size_t i = p.size() - 1; i + 1 > dq; --i) {
      long long c = p[i];  // q is monic
      quot[i - dq] = c;
      for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
      if (i == dq) break;
    }
    p = quot;
  }
  return p;
}

// Reduce a polynomial in zeta (any length) to the canonical basis.
std::vector<Rational> reduce(unsigned m, std::vector<Rational> poly) {
  std::vector<Rational> folded(m, Rational(0));
  for (std::size_t j = 0; j < poly.size(); ++j)
    if (!poly[j].is_zero()) folded[j % m] += poly[j];
  const auto& phi = cyclotomic_polynomial(m);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    if (folded[i].is_zero()) continue;
    Rational c = folded[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j]) folded[i - deg + j] -= c * Rational(phi[j]);
  }
  folded.resize(deg);
  return folded;
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned r = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic order must be positive");
  auto& cache = phi_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.table.find(m);
    if (it != cache.table.end()) return it->second;
  }
  std::vector<long long> p = m == 1 ? std::vector<long long>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(cache.mutex);
  return cache.table.emplace(m, std::move(p)).first->second;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic(const Rational& q) : order_(1), c_{q} {}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs) : order_(order) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  c_ = reduce(order, std::move(coeffs));
  demote_if_rational();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long long k) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  long long e = ((k % order) + order) % order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(order, std::move(poly));
}

Cyclotomic Cyclotomic::gaussian(const Rational& re, const Rational& im) { return Cyclotomic(4, {re, im}); }

Cyclotomic Cyclotomic::parse_gaussian(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (s.empty()) throw ParseError("empty complex entry");
  if (s.back() != 'i') return Cyclotomic(Rational::parse(s));
  s.pop_back();
  // Split at the last sign that is not leading and not following '/'.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  if (im.empty()) im = "1";
  else if (im == "-") im = "-1";
  return gaussian(Rational::parse(re), Rational::parse(im));
}

Cyclotomic Cyclotomic::embed(unsigned order) const {
  if (order % order_) throw PreconditionError("embedding order must be a multiple of the element order");
  if (order == order_) return *this;
  unsigned k = order / order_;
  std::vector<Rational> poly(static_cast<std::size_t>(k) * c_.size(), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * k] = c_[j];
  Cyclotomic r;
  r.order_ = order;
  r.c_ = reduce(order, std::move(poly));
  return r;
}

Cyclotomic Cyclotomic::normalized() const {
  if (is_rational()) return Cyclotomic(as_rational());
  for (unsigned d = 2; d < order_; ++d) {
    if (order_ % d) continue;
    // Express this element in the image of Q(zeta_d).
    unsigned pd = euler_phi(d);
    std::vector<Vector<Rational>> cols;
    for (unsigned j = 0; j < pd; ++j) cols.push_back(root_of_unity(d, j).embed(order_).coeffs());
    auto a = Matrix<Rational>::from_columns(cols, c_.size());
    auto x = solve(a, c_, 1u << 20);
    if (x) return Cyclotomic(d, *x);
  }
  return *this;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw PreconditionError("cyclotomic value " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  std::vector<Rational> poly(order_, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) poly[(order_ - j) % order_] += c_[j];
  return Cyclotomic(order_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(as_rational().inverse());
  // Solve (this * x) = 1 using the multiplication matrix on the power basis.
  const std::size_t n = c_.size();
  Matrix<Rational> mul(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> poly(j + 1, Rational(0));
    poly[j] = 1;
    Cyclotomic col = *this * Cyclotomic(order_, std::move(poly)).embed(order_);
    auto cc = col.embed(order_).coeffs();
    for (std::size_t i = 0; i < n; ++i) mul(i, j) = cc[i];
  }
  Vector<Rational> one(n, Rational(0));
  one[0] = 1;
  auto x = solve(mul, one, 1u << 20);
  if (!x) throw InternalError("cyclotomic inverse: singular multiplication matrix");
  return Cyclotomic(order_, *x);
}

std::pair<Rational, Rational> Cyclotomic::gaussian_parts() const {
  if (is_rational()) return {as_rational(), Rational(0)};
  auto n = normalized();
  if (n.order_ != 4) throw PreconditionError("value " + str() + " is not a Gaussian rational");
  return {n.c_[0], n.c_[1]};
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned m = lcm_order(order_, o.order_);
  Cyclotomic a = embed(m);
  Cyclotomic b = o.embed(m);
  for (std::size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
  *this = std::move(a);
  demote_if_rational();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    demote_if_rational();
    return *this;
  }
  if (order_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    demote_if_rational();
    return *this;
  }
  unsigned m = lcm_order(order_, o.order_);
  Cyclotomic a = embed(m);
  Cyclotomic b = o.embed(m);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
  }
  order_ = m;
  c_ = reduce(m, std::move(prod));
  demote_if_rational();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  unsigned m = lcm_order(a.order_, b.order_);
  return a.embed(m).c_ == b.embed(m).c_;
}

void Cyclotomic::demote_if_rational() {
  if (order_ != 1 && is_rational()) {
    Rational q = c_.empty() ? Rational(0) : c_[0];
    order_ = 1;
    c_ = {q};
  }
}

std::string Cyclotomic::str() const {
  Cyclotomic n = normalized();
  if (n.order_ == 1) return n.c_[0].str();
  std::ostringstream os;
  if (n.order_ == 4) {
    const Rational& re = n.c_[0];
    const Rational& im = n.c_[1];
    if (!re.is_zero()) os << re.str();
    if (im == Rational(1)) os << (re.is_zero() ? "" : "+") << "i";
    else if (im == Rational(-1)) os << "-i";
    else os << (re.is_zero() || im.sign() < 0 ? "" : "+") << im.str() << "i";
    return os.str();
  }
  bool first = true;
  for (std::size_t j = 0; j < n.c_.size(); ++j) {
    const Rational& c = n.c_[j];
    if (c.is_zero()) continue;
    if (!first && c.sign() > 0) os << '+';
    first = false;
    if (j == 0) {
      os << c.str();
      continue;
    }
    if (c == Rational(-1)) os << '-';
    else if (c != Rational(1)) os << c.str() << '*';
    os << "z" << n.order_;
    if (j > 1) os << '^' << j;
  }
  return os.str();
}

}  // namespace cydesing
