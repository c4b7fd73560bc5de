#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "cydesing/error.hpp"
#include "cydesing/group/cayley_constants.hpp"
#include "cydesing/group/classify.hpp"

#include <map>

using namespace cydesing;
using namespace fixtures;

namespace {

oracle::IMat to_imat(const RatMatrix& m) {
  oracle::IMat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num().get_si();
  return out;
}

}  // namespace

TEST_CASE("motions from complex matrices") {
  auto k = kappa_z4();
  CHECK(k.dim_real() == 6);
  CHECK(k.is_complex_linear());
  CHECK(k.is_isometry());
  CHECK((k * k * k * k).is_identity());
  CHECK(lambda_r8().is_anti_linear());
  CHECK(lambda_r8().complex_matrix()(0, 1) == Cyclotomic(1));
  CHECK_THROWS_AS(Motion(RatMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Motion(RatMatrix{{1, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("closure of the C^3 order-4 generator") {
  auto g = FiniteMatrixGroup::close({kappa_z4()});
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
  CHECK(g.order_of(g.generators()[0]) == 4);
  auto oracle_elems = oracle::closure({to_imat(kappa_z4().matrix())});
  CHECK(oracle_elems.size() == 4);
}

TEST_CASE("quaternion group on R^8") {
  auto g = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  CHECK(g.order() == 8);
  CHECK_FALSE(g.is_abelian());
  auto k = *g.index_of(kappa_r8()), l = *g.index_of(lambda_r8());
  CHECK(g.power(k, 4) == 0);
  CHECK(g.power(l, 4) == 0);
  CHECK(g.power(k, 2) == g.power(l, 2));
  CHECK(g.mul(k, l) == g.mul(l, g.power(k, 3)));

  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  auto elems = oracle::closure({to_imat(kappa_r8().matrix()), to_imat(lambda_r8().matrix())});
  CHECK(oracle::class_sizes(elems) == sizes);

  IndexSet h1 = generated_subgroup(g, {k});
  CHECK(h1.size() == 4);
  CHECK(is_normal(g, h1));
  auto q = normal_and_quotient(g, h1);
  CHECK(q.order() == 2);
}

TEST_CASE("normal_and_quotient rejects bad input") {
  auto g = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  CHECK_THROWS_AS(normal_and_quotient(g, {0, 1, 2}), NotASubgroup);
  // The dihedral group of order 8 acting on C has non-normal reflection subgroups.
  auto rot = complex_motion({{"i"}});
  auto refl = complex_motion({{"1"}}, true);
  auto d4 = FiniteMatrixGroup::close({rot, refl});
  CHECK(d4.order() == 8);
  IndexSet r = generated_subgroup(d4, {*d4.index_of(refl)});
  CHECK_THROWS_AS(normal_and_quotient(d4, r), NotNormal);
}

TEST_CASE("subgroups, centralizers and generating sets") {
  auto g = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  CHECK(all_subgroups(g).size() == 6);
  for (const auto& h : all_subgroups(g)) {
    CHECK(is_subgroup(g, h));
    CHECK(is_normal(g, h));
    CHECK(generated_subgroup(g, generating_set(g, h)) == h);
  }
  auto center = centralizer(g, *g.index_of(lambda_r8()));
  CHECK(center.size() == 4);
}

TEST_CASE("closure cap") { CHECK_THROWS_AS(FiniteMatrixGroup::close({kappa_r8(), lambda_r8()}, 5), CapExceeded); }

TEST_CASE("closure property: group axioms on random products") {
  auto g = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == 0);
    for (std::size_t b = 0; b < g.order(); ++b) {
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
      for (std::size_t c = 0; c < g.order(); ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("from_elements requires closure") {
  CHECK_THROWS_AS(FiniteMatrixGroup::from_elements({Motion::identity(2), complex_motion({{"i"}})}),
                  PreconditionError);
  auto g = FiniteMatrixGroup::from_elements({Motion::identity(2), complex_motion({{"-1"}})});
  CHECK(g.order() == 2);
}

TEST_CASE("stabilizers") {
  auto g = FiniteMatrixGroup::close({kappa_z4()});
  auto axis = Locus::generic_point_of({{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}});
  CHECK(stabilizer(g, axis).size() == 2);
  auto origin = Locus::at_point(Vector<Rational>(6, Rational(0)));
  CHECK(stabilizer(g, origin).size() == 4);
  Vector<Rational> generic{Rational(1), Rational(2), Rational(3), Rational(5), Rational(7), Rational(11)};
  CHECK(stabilizer(g, Locus::at_point(generic)) == IndexSet{0});
}

TEST_CASE("su_classify") {
  CHECK(su_classify(kappa_z4()).kind == MotionKind::SpecialUnitary);
  auto u = su_classify(diag({"i", "1", "1"}));
  CHECK(u.kind == MotionKind::Unitary);
  CHECK(*u.determinant == g("i"));
  CHECK(su_classify(lambda_r8()).kind == MotionKind::AntiLinear);
  CHECK(su_classify(Motion(RatMatrix{{2, 0}, {0, 1}})).kind == MotionKind::Other);
}

TEST_CASE("splitting multiplier") {
  CHECK(splitting_multiplier(kappa_z4(), 0) == Cyclotomic(-1));
  CHECK(splitting_multiplier(kappa_z4(), 1) == g("i"));
  auto mix = complex_motion({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}});
  CHECK_THROWS_AS(splitting_multiplier(mix, 0), SplittingNotPreserved);
}

TEST_CASE("Cayley form constants match the derived form") {
  auto derived = oracle::cayley_form();
  std::map<std::vector<int>, long long> table;
  for (const auto& t : kCayleyForm) table[{t.idx.begin(), t.idx.end()}] = t.coeff;
  CHECK(derived == table);
}

TEST_CASE("Spin(7) membership") {
  CHECK(spin7_check(kappa_r8()));
  CHECK(spin7_check(lambda_r8()));
  CHECK(spin7_check(Motion::identity(8)));
  // A reflection in one coordinate reverses orientation.
  RatMatrix refl = RatMatrix::identity(8);
  refl(0, 0) = -1;
  CHECK_FALSE(spin7_check(Motion(refl)));
  // diag(i, 1, 1, 1) is unitary but moves the holomorphic volume form.
  CHECK_FALSE(spin7_check(diag({"i", "1", "1", "1"})));
  CHECK_THROWS_AS(spin7_check(kappa_z4()), PreconditionError);
}
