#include "doctest.h"

#include "fixtures.hpp"

#include "cydesing/error.hpp"
#include "cydesing/group/classify.hpp"
#include "cydesing/mckay/invariant_pair.hpp"
#include "cydesing/mckay/kleinian.hpp"
#include "cydesing/mckay/lifts.hpp"
#include "cydesing/mckay/second_stage.hpp"


using namespace cydesing;
using namespace fixtures;

namespace {

FiniteMatrixGroup su2(const std::vector<std::vector<std::vector<std::string>>>& gens) {
  std::vector<Motion> ms;
  for (const auto& m : gens) ms.push_back(complex_motion(m));
  return FiniteMatrixGroup::close(ms);
}

struct Pipeline {
  FiniteMatrixGroup g;
  KleinianClassification kc;
  PsiHom psi;
  RootSystem rs;
  WeylGroup w;
  std::vector<ChiLift> lifts;
  std::vector<Cyclotomic> phi;
};

IndexSet line_kernel(const FiniteMatrixGroup& g, std::size_t line) {
  IndexSet h;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (splitting_multiplier(g.element(x), line) == Cyclotomic(1)) h.push_back(x);
  return h;
}

Pipeline pipeline(const std::vector<Motion>& gens, std::size_t line = 0) {
  Pipeline p{FiniteMatrixGroup::close(gens), {}, {}, {}, {}, {}, {}};
  p.kc = classify_kleinian(restricted_subgroup(p.g, line_kernel(p.g, line), line));
  p.psi = compute_psi(p.g, p.kc);
  p.rs = build_root_system(p.kc.diagram);
  p.w = weyl_group(p.rs);
  p.lifts = enumerate_chi_lifts(p.psi, p.w);
  p.phi = compute_phi(p.g, p.psi.quotient, line);
  return p;
}

}  // namespace

TEST_CASE("Kleinian classification: cyclic groups are A-series") {
  auto z4 = su2({{{"i", "0"}, {"0", "-i"}}});
  auto kc = classify_kleinian(z4);
  CHECK(kc.diagram.name() == "A3");
  CHECK(kc.classes.size() == 3);
  CHECK_FALSE(kc.ambiguous());
  auto z2 = su2({{{"-1", "0"}, {"0", "-1"}}});
  CHECK(classify_kleinian(z2).diagram.name() == "A1");
}

TEST_CASE("Kleinian classification: binary dihedral and tetrahedral groups") {
  auto q8 = su2({{{"i", "0"}, {"0", "-i"}}, {{"0", "1"}, {"-1", "0"}}});
  CHECK(q8.order() == 8);
  auto d4 = classify_kleinian(q8);
  CHECK(d4.diagram.name() == "D4");
  CHECK(d4.classes.size() == 4);
  CHECK(d4.ambiguous());

  auto bt = su2({{{"i", "0"}, {"0", "-i"}}, {{"0", "1"}, {"-1", "0"}}, {{"1/2+1/2i", "1/2+1/2i"}, {"-1/2+1/2i", "1/2-1/2i"}}});
  CHECK(bt.order() == 24);
  CHECK(classify_kleinian(bt).diagram.name() == "E6");
}

TEST_CASE("Kleinian classification rejects groups outside SU(2)") {
  auto u = su2({{{"i", "0"}, {"0", "1"}}});
  CHECK_THROWS_AS(classify_kleinian(u), PreconditionError);
}

TEST_CASE("C^3/Z4: two lifts over A1 with trivial psi") {
  auto p = pipeline({kappa_z4()});
  CHECK(p.kc.diagram.name() == "A1");
  CHECK(p.psi.quotient.order() == 2);
  CHECK(p.psi.is_trivial());
  REQUIRE(p.lifts.size() == 2);
  CHECK(p.lifts[0].is_canonical());
  CHECK_FALSE(p.lifts[1].is_canonical());
  CHECK(p.lifts[1].images[1].weyl == LatMatrix{{-1}});
  for (const auto& l : p.lifts) CHECK(is_lift_of(l, p.psi));
  CHECK(p.phi == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});
}

TEST_CASE("nontrivial psi: a swap normalizing Z4 on C^2 acts on A3 by the flip") {
  auto h = diag({"1", "i", "-i"});
  auto swap = complex_motion({{"-1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}});
  auto p = pipeline({h, swap});
  CHECK(p.kc.diagram.name() == "A3");
  CHECK_FALSE(p.psi.is_trivial());
  CHECK(p.psi.images[1] == VertexPermutation{2, 1, 0});
  CHECK_FALSE(p.lifts.empty());
  for (const auto& l : p.lifts) {
    CHECK(is_lift_of(l, p.psi));
    CHECK(l.images[1].aut == VertexPermutation{2, 1, 0});
  }
}

TEST_CASE("invariant pairs for the two C^3/Z4 cases") {
  auto p = pipeline({kappa_z4()});
  // Case (a): chi trivial; beta is forced to vanish.
  auto a = make_invariant_pair_problem(p.rs, p.lifts[0], p.phi);
  auto da = invariant_pair_decide(a);
  CHECK(da.exists);
  CHECK(a.B.empty());
  CHECK(da.beta == Vector<Cyclotomic>{Cyclotomic(0)});
  CHECK_FALSE(da.alpha[0].is_zero());
  CHECK(is_invariant_pair(a, da.alpha, da.beta));
  CHECK(is_generic_pair(a, da.alpha, da.beta));
  // Case (b): chi = lambda; alpha is forced to vanish.
  auto b = make_invariant_pair_problem(p.rs, p.lifts[1], p.phi);
  auto db = invariant_pair_decide(b);
  CHECK(db.exists);
  CHECK(b.A.empty());
  CHECK(db.alpha == Vector<Rational>{Rational(0)});
  CHECK_FALSE(db.beta[0].is_zero());
  CHECK(is_invariant_pair(b, db.alpha, db.beta));
  for (const auto* prob : {&a, &b}) {
    auto n = fixtures::reynolds_generic_count(*prob, 100, 1);
    CHECK(n > 90);
    CHECK(n <= 100);
  }
}

TEST_CASE("blocking case: chi = lambda with phi = +1") {
  auto p = pipeline({kappa_z4()});
  auto prob = make_invariant_pair_problem(p.rs, p.lifts[1], {Cyclotomic(1), Cyclotomic(1)});
  auto d = invariant_pair_decide(prob);
  CHECK_FALSE(d.exists);
  REQUIRE(d.blocking_root.has_value());
  CHECK(fixtures::reynolds_generic_count(prob, 100, 3) == 0);
}

TEST_CASE("witnesses are deterministic in the seed") {
  auto p = pipeline({kappa_z4()});
  auto prob = make_invariant_pair_problem(p.rs, p.lifts[0], p.phi);
  CHECK(invariant_pair_decide(prob, 5).alpha == invariant_pair_decide(prob, 5).alpha);
}

TEST_CASE("second stage for the C^3/Z4 cases") {
  auto p = pipeline({kappa_z4()});
  auto res = second_stage_classify(make_a_local_model(p.g, p.kc, 0, ModelSide::Resolution));
  CHECK(res.outcome == SecondStageOutcome::CodimTwoFixedLocus);
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0].complex_dim == 1);
  auto residual = iterate_residual(p.g, res);
  REQUIRE(residual.size() == 1);
  CHECK(residual[0].order < p.g.order());

  auto def = second_stage_classify(make_a_local_model(p.g, p.kc, 0, ModelSide::Deformation));
  CHECK(def.outcome == SecondStageOutcome::Free);
  CHECK(def.components.empty());
  CHECK(iterate_residual(p.g, def).empty());
}

TEST_CASE("second stage: weights (-1; -1, 1) over C^2/Z4 fix alternate curves") {
  // p_j has weight (-1)^{j+1} and q_j has weight (-1)^j, so curves 0, 2 and 4 are fixed.
  auto h = diag({"1", "i", "-i"});
  auto k = diag({"-1", "-1", "1"});
  auto p = pipeline({h, k});
  auto res = second_stage_classify(make_a_local_model(p.g, p.kc, 0, ModelSide::Resolution));
  CHECK(res.outcome == SecondStageOutcome::CodimTwoFixedLocus);
  std::vector<std::string> loci;
  for (const auto& c : res.components) loci.push_back(c.locus);
  CHECK(loci == std::vector<std::string>{"curve 0", "curve 2", "curve 4"});
  for (const auto& r : iterate_residual(p.g, res)) CHECK(r.order < p.g.order());
}

TEST_CASE("second stage with trivial K") {
  auto h = diag({"1", "-1", "-1"});
  auto p = pipeline({h});
  auto res = second_stage_classify(make_a_local_model(p.g, p.kc, 0, ModelSide::Resolution));
  CHECK(res.outcome == SecondStageOutcome::WholeSpaceFixed);
}
