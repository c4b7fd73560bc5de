#pragma once

#include "cydesing/exact/cyclotomic.hpp"
#include "cydesing/group/finite_group.hpp"
#include "cydesing/group/motion.hpp"
#include "cydesing/mckay/invariant_pair.hpp"

#include <random>

#include <string>
#include <vector>

namespace fixtures {

using namespace cydesing;

inline Cyclotomic g(const std::string& s) { return Cyclotomic::parse_gaussian(s); }

inline Motion diag(const std::vector<std::string>& entries, bool conjugate = false) {
  Matrix<Cyclotomic> a(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) a(i, i) = g(entries[i]);
  return Motion::from_complex(a, conjugate);
}

inline Motion complex_motion(const std::vector<std::vector<std::string>>& rows, bool conjugate = false) {
  Matrix<Cyclotomic> a(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = g(rows[i][j]);
  return Motion::from_complex(a, conjugate);
}

// kappa(z) = (-z1, i z2, i z3)
inline Motion kappa_z4() { return diag({"-1", "i", "i"}); }
inline Motion kappa1() { return diag({"1", "-1", "-1"}); }
inline Motion kappa2() { return diag({"-1", "1", "-1"}); }
inline Motion kappa_r8() { return diag({"i", "i", "i", "i"}); }
inline Motion lambda_r8() {
  return complex_motion({{"0", "1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "-1", "0"}}, true);
}

// Reynolds projection of random pairs onto the invariant space; counts generic
// results. Returns samples + 1 if a projected pair fails the invariance check.
inline std::size_t reynolds_generic_count(const InvariantPairProblem& p, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-20, 20);
  const std::size_t r = p.root_system.rank(), k = p.dual_actions.size();
  std::size_t generic = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector<Rational> a(r);
    Vector<Cyclotomic> b(r);
    for (std::size_t i = 0; i < r; ++i) {
      a[i] = d(rng);
      b[i] = Cyclotomic::gaussian(Rational(d(rng)), Rational(d(rng)));
    }
    Vector<Rational> pa(r, Rational(0));
    Vector<Cyclotomic> pb(r, Cyclotomic(0));
    for (std::size_t c = 0; c < k; ++c) {
      auto ra = p.dual_actions[c] * a;
      auto rb = convert<Cyclotomic>(p.dual_actions[c]) * b;
      for (std::size_t i = 0; i < r; ++i) {
        pa[i] += ra[i] / Rational(static_cast<long>(k));
        pb[i] += rb[i] * p.phi[c] * Cyclotomic(Rational(1, static_cast<long>(k)));
      }
    }
    if (!is_invariant_pair(p, pa, pb)) return samples + 1;
    generic += is_generic_pair(p, pa, pb);
  }
  return generic;
}

inline std::string data_dir() { return CYDESING_TEST_DATA_DIR; }
inline std::string scenario_path(const std::string& name) { return data_dir() + "/scenarios/" + name + ".scn"; }

}  // namespace fixtures
