#include "cydesing/torus/fixed_set.hpp"

#include "cydesing/exact/field_linalg.hpp"

namespace cydesing {

TorusLattice::TorusLattice(RatMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw PreconditionError("lattice basis must be square");
  auto inv = inverse(basis_, 1u << 20);
  if (!inv) throw PreconditionError("lattice basis is linearly dependent");
  inverse_ = std::move(*inv);
}

TorusLattice TorusLattice::standard(std::size_t dim_real) { return TorusLattice(RatMatrix::identity(dim_real)); }

IntMatrix lattice_matrix(const Motion& g, const TorusLattice& l) {
  if (g.dim_real() != l.rank()) throw PreconditionError("motion and lattice dimensions differ");
  RatMatrix m = l.basis_inverse() * g.matrix() * l.basis();
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_integer()) {
        std::string image;
        auto col = g.matrix() * l.basis().col(j);
        for (std::size_t k = 0; k < col.size(); ++k) image += (k ? ", " : "") + col[k].str();
        throw LatticeNotPreserved("image of basis vector " + std::to_string(j) + " is (" + image +
                                  "), not in the lattice");
      }
      out(i, j) = m(i, j).num();
    }
  return out;
}

Vector<Rational> reduce_mod_one(Vector<Rational> c) {
  for (auto& x : c) x = x.frac();
  return c;
}

SubtorusFamily::SubtorusFamily(IntMatrix congruence, std::size_t component_cap)
    : congruence_(std::move(congruence)) {
  const std::size_t m = congruence_.cols();
  auto s = snf(congruence_);
  v_inverse_ = unimodular_inverse(s.V);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.invariant_factors.size() && sgn(s.invariant_factors[i]) != 0) {
      discrete_.push_back(i);
      factors_.push_back(s.invariant_factors[i]);
    } else {
      free_.push_back(i);
    }
  }
  count_ = 1;
  for (const auto& d : factors_) count_ *= d;
  if (count_ > Integer(static_cast<unsigned long>(component_cap)))
    throw CapExceeded("fixed set has " + count_.get_str() + " components", component_cap);
  for (auto f : free_) direction_.push_back(convert<Rational>(s.V.col(f)));

  const RatMatrix v = convert<Rational>(s.V);
  std::vector<std::size_t> digit(factors_.size(), 0);
  const std::size_t total = count_.get_ui();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    Vector<Rational> cp(m, Rational(0));
    for (std::size_t k = factors_.size(); k-- > 0;) {
      std::size_t d = factors_[k].get_ui();
      cp[discrete_[k]] = Rational(Integer(static_cast<unsigned long>(rest % d)), factors_[k]);
      rest /= d;
    }
    auto c = reduce_mod_one(v * cp);
    if (!contains(c)) throw InternalError("fixed-set representative fails its congruence");
    reps_.push_back(std::move(c));
  }
}

bool SubtorusFamily::contains(const Vector<Rational>& c) const {
  auto ac = convert<Rational>(congruence_) * c;
  for (const auto& x : ac)
    if (!x.is_integer()) return false;
  return true;
}

std::size_t SubtorusFamily::component_of(const Vector<Rational>& c) const {
  auto cp = convert<Rational>(v_inverse_) * c;
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Rational scaled = cp[discrete_[k]] * Rational(factors_[k]);
    if (!scaled.is_integer()) throw PreconditionError("point is not in the fixed set");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), scaled.num().get_mpz_t(), factors_[k].get_mpz_t());
    idx = idx * factors_[k].get_ui() + r.get_ui();
  }
  return idx;
}

SubtorusFamily common_fixed_set(const std::vector<Motion>& gs, const TorusLattice& l) {
  if (gs.empty()) throw PreconditionError("common fixed set of an empty list");
  IntMatrix stacked(0, l.rank());
  const IntMatrix id = IntMatrix::identity(l.rank());
  for (const auto& g : gs) stacked = stacked.stacked(lattice_matrix(g, l) - id);
  return SubtorusFamily(std::move(stacked));
}

SubtorusFamily fixed_set(const Motion& g, const TorusLattice& l) { return common_fixed_set({g}, l); }

}  // namespace cydesing
