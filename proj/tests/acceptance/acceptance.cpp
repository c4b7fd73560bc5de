// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "app/commands.hpp"

#include "cydesing/ade/weyl.hpp"
#include "cydesing/exact/smith.hpp"
#include "cydesing/group/classify.hpp"
#include "cydesing/invariants/betti.hpp"
#include "cydesing/invariants/chi_data.hpp"
#include "cydesing/invariants/euler.hpp"
#include "cydesing/invariants/ledger.hpp"
#include "cydesing/invariants/nodes.hpp"
#include "cydesing/mckay/invariant_pair.hpp"
#include "cydesing/mckay/kleinian.hpp"
#include "cydesing/mckay/lifts.hpp"
#include "cydesing/mckay/second_stage.hpp"
#include "cydesing/torus/fixed_set.hpp"
#include "cydesing/torus/singular_set.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace cydesing;
using namespace fixtures;

namespace {

// Wall-clock limits in seconds, per criterion.
constexpr double kLimit[13] = {0, 1, 5, 10, 5, 1, 1, 1, 1, 65, 10, 1, 300};
// Of criterion 9's budget: the census and the total count separately.
constexpr double kCensusLimit = 5, kTotalCountLimit = 60;
constexpr std::size_t kOracleSamples = 100;

const TorusLattice kGaussian = TorusLattice::standard(6);

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

oracle::IMat to_imat(const RatMatrix& m) {
  oracle::IMat out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num().get_si();
  return out;
}

std::map<std::string, std::size_t> label_counts(const SingularSetReport& r) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : r.components) ++out[c.label + (c.action.empty() ? "" : "[" + c.action + "]")];
  return out;
}

void c1_group_structure(Check& c) {
  auto z4 = FiniteMatrixGroup::close({kappa_z4()});
  c.expect(z4.order() == 4, "C^3 generator closure order " + std::to_string(z4.order()));
  auto q8 = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  c.expect(q8.order() == 8, "R^8 group order");
  c.expect(!q8.is_abelian(), "R^8 group is abelian");
  std::vector<std::size_t> sizes;
  for (const auto& cl : conjugacy_classes(q8)) sizes.push_back(cl.size());
  std::sort(sizes.begin(), sizes.end());
  c.expect(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2}, "class sizes");
  auto elems = oracle::closure({to_imat(kappa_r8().matrix()), to_imat(lambda_r8().matrix())});
  c.expect(oracle::class_sizes(elems) == sizes, "class sizes disagree with the brute-force oracle");
}

void c2_fixed_point_census(Check& c) {
  auto k = kappa_z4();
  auto f1 = fixed_set(k, kGaussian), f2 = fixed_set(k * k, kGaussian), f3 = fixed_set(k * k * k, kGaussian);
  c.expect(f1.dimension() == 0 && f1.component_count() == 16, "fixed(kappa) != 16 points");
  c.expect(f3.dimension() == 0 && f3.component_count() == 16, "fixed(kappa^3) != 16 points");
  c.expect(f2.dimension() == 2 && f2.component_count() == 16, "fixed(kappa^2) != 16 copies of T^2");
  auto r = singular_set(FiniteMatrixGroup::close({k}), kGaussian);
  auto l = label_counts(r);
  c.expect(l["T^2"] == 6, "T^2 components: " + std::to_string(l["T^2"]));
  c.expect(l["T^2/Z2[-1]"] == 4, "T^2/{+-1} components: " + std::to_string(l["T^2/Z2[-1]"]));
  c.expect(r.components.size() == 10, "unexpected extra components");
  for (const auto& comp : r.components)
    if (comp.label == "T^2/Z2") c.expect(comp.special_points.size() == 4, "special points per T^2/{+-1}");
}

void c3_z2z2_singular_set(Check& c) {
  auto r = singular_set(FiniteMatrixGroup::close({kappa1(), kappa2()}), kGaussian);
  std::size_t lines = 0;
  for (const auto& comp : r.components) lines += comp.label == "T^2/Z2";
  c.expect(lines == 48 && r.components.size() == 48, "T^2/Z2 components: " + std::to_string(lines));
  c.expect(r.intersection_points.size() == 64, "intersection points: " + std::to_string(r.intersection_points.size()));
  for (const auto& p : r.intersection_points) c.expect(p.components.size() == 3, "point not on three lines");
}

void c4_orbifold_euler(Check& c) {
  auto e1 = orbifold_euler(FiniteMatrixGroup::close({kappa_z4()}), Ambient::torus(kGaussian));
  c.expect(e1.value == 48, "T^6/Z4 euler " + e1.value.get_str());
  auto e0 = orbifold_euler(FiniteMatrixGroup::close({Motion::identity(6)}), Ambient::torus(kGaussian));
  c.expect(e0.value == 0, "trivial euler");
  auto e2 = orbifold_euler(FiniteMatrixGroup::close({kappa1(), kappa2()}), Ambient::torus(kGaussian));
  c.expect(e2.value == 96, "T^6/Z2^2 euler " + e2.value.get_str());
  c.expect(e2.value == 2 * (51 - 3), "T^6/Z2^2 euler vs 2(h11 - h21)");
  auto q8 = FiniteMatrixGroup::close({kappa_r8(), lambda_r8()});
  auto e3 = orbifold_euler(q8, Ambient::linear(8));
  c.expect(e3.value == 5, "R^8 euler " + e3.value.get_str());
  auto classes = conjugacy_classes(q8).size();
  c.expect(classes == 5 && classes - 1 == 4, "class count: total 5, nonidentity 4");
  auto report = app::run_command("euler", {fixtures::scenario_path("r8_q8"), {}, 4, kDefaultWitnessSeed, 0});
  c.expect(report["conjugacy_classes"]["total"] == 5 && report["conjugacy_classes"]["nonidentity"] == 4,
           "euler report does not carry both class counts");
}

void c5_quotient_betti(Check& c) {
  auto b1 = quotient_betti(FiniteMatrixGroup::close({kappa_z4()}), kGaussian);
  c.expect(b1.b[2] == 5 && b1.b[3] == 4, "T^6/Z4 b2, b3");
  auto b2 = quotient_betti(FiniteMatrixGroup::close({kappa1(), kappa2()}), kGaussian);
  c.expect(b2.b[2] == 3 && b2.b[3] == 8, "T^6/Z2^2 b2, b3");
}

void c6_ledger(Check& c) {
  ContributionTable z4{"z4", {}};
  z4.entries[{"T^2", "crepant"}] = {1, 2};
  z4.entries[{"T^2/Z2", "a"}] = {5, 0};
  z4.entries[{"T^2/Z2", "b"}] = {0, 2};
  auto base = quotient_betti(FiniteMatrixGroup::close({kappa_z4()}), kGaussian);
  for (std::size_t k = 0; k <= 4; ++k) {
    auto b = ledger_apply(base, {{{"T^2", "crepant", 6}, {"T^2/Z2", "a", k}, {"T^2/Z2", "b", 4 - k}}, {}}, z4);
    const long kk = static_cast<long>(k);
    c.expect(b.b[2] == 11 + 5 * kk && b.b[3] == 24 - 2 * kk && b.euler() == 12 * kk, "Z_" + std::to_string(k));
  }
  ContributionTable z2{"z2z2", {}};
  z2.entries[{"T^2/Z2", "chi+"}] = {1, 0};
  z2.entries[{"T^2/Z2", "chi-"}] = {0, 2};
  z2.entries[{"triple", "i"}] = {0, 0};
  z2.entries[{"triple", "ix"}] = {0, 2};
  auto base2 = quotient_betti(FiniteMatrixGroup::close({kappa1(), kappa2()}), kGaussian);
  auto a = ledger_apply(base2, {{{"T^2/Z2", "chi+", 48}}, {{"triple", "i", 64}}}, z2);
  c.expect(a.h11() == 51 && a.h21() == 3, "all-crepant plan");
  auto d = ledger_apply(base2, {{{"T^2/Z2", "chi-", 48}}, {{"triple", "ix", 64}}}, z2);
  c.expect(d.h11() == 3 && d.h21() == 115, "all-deformation plan");
}

struct C3Z4 {
  FiniteMatrixGroup g = FiniteMatrixGroup::close({kappa_z4()});
  KleinianClassification kc;
  PsiHom psi;
  RootSystem rs;
  std::vector<ChiLift> lifts;
  std::vector<Cyclotomic> phi;
  C3Z4() {
    IndexSet h;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (splitting_multiplier(g.element(x), 0) == Cyclotomic(1)) h.push_back(x);
    kc = classify_kleinian(restricted_subgroup(g, h, 0));
    psi = compute_psi(g, kc);
    rs = build_root_system(kc.diagram);
    lifts = enumerate_chi_lifts(psi, weyl_group(rs));
    phi = compute_phi(g, psi.quotient, 0);
  }
};

void c7_lifts_and_pairs(Check& c) {
  C3Z4 m;
  c.expect(m.kc.diagram.name() == "A1" && m.psi.quotient.order() == 2, "K = Z2 over A1");
  c.expect(m.lifts.size() == 2, "lift count " + std::to_string(m.lifts.size()));
  if (m.lifts.size() != 2) return;
  auto pa = make_invariant_pair_problem(m.rs, m.lifts[0], m.phi);
  auto da = invariant_pair_decide(pa);
  c.expect(da.exists && pa.B.empty() && da.beta[0].is_zero() && !da.alpha[0].is_zero(), "case (a): needs beta = 0");
  c.expect(is_invariant_pair(pa, da.alpha, da.beta) && is_generic_pair(pa, da.alpha, da.beta), "case (a) witness");
  auto pb = make_invariant_pair_problem(m.rs, m.lifts[1], m.phi);
  auto db = invariant_pair_decide(pb);
  c.expect(db.exists && pb.A.empty() && db.alpha[0].is_zero() && !db.beta[0].is_zero(), "case (b): needs alpha = 0");
  c.expect(is_invariant_pair(pb, db.alpha, db.beta) && is_generic_pair(pb, db.alpha, db.beta), "case (b) witness");
  auto pc = make_invariant_pair_problem(m.rs, m.lifts[1], {Cyclotomic(1), Cyclotomic(1)});
  auto dc = invariant_pair_decide(pc);
  c.expect(!dc.exists && dc.blocking_root.has_value(), "blocking case not impossible");
  c.expect(reynolds_generic_count(pc, kOracleSamples, 7) == 0, "randomized oracle found a generic pair");
}

void c8_second_stage(Check& c) {
  C3Z4 m;
  auto a = second_stage_classify(make_a_local_model(m.g, m.kc, 0, ModelSide::Resolution));
  bool one_dim = a.outcome == SecondStageOutcome::CodimTwoFixedLocus && a.components.size() == 1 &&
                 a.components[0].complex_dim == 1;
  c.expect(one_dim, std::string("case (a) outcome ") + to_string(a.outcome));
  auto b = second_stage_classify(make_a_local_model(m.g, m.kc, 0, ModelSide::Deformation));
  c.expect(b.outcome == SecondStageOutcome::Free, std::string("case (b) outcome ") + to_string(b.outcome));
}

void c9_chi_data(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto census = chi_family_census(4);
  double census_time = seconds_since(t0);
  c.expect(census.family1_count == 2048, "family 1 count");
  c.expect(census.axis_family_count == 65536, "axis family count");
  c.expect(census.union_count == 198651, "union count " + census.union_count.get_str());
  c.expect(census.inclusion_exclusion == census.union_count, "inclusion-exclusion disagrees");
  c.expect(census.all_admissible, "a census member is inadmissible");
  c.expect(census_time < kCensusLimit, "census time");
  c.expect(chi_total_count_sweep(1) == 5 && chi_total_count_dp(1) == 5, "total count n = 1");
  auto n2 = oracle::brute_force_chi_count(2);
  c.expect(chi_total_count_sweep(2) == n2 && chi_total_count_dp(2) == n2, "total count n = 2 vs brute force");
  t0 = std::chrono::steady_clock::now();
  auto total = chi_total_count(4);
  double total_time = seconds_since(t0);
  c.expect(total.agree, "sweep and dp disagree at n = 4");
  c.expect(total.sweep >= 198651, "n = 4 total below the union count");
  c.expect(total_time < kTotalCountLimit, "total count time");
}

void c10_ade(Check& c) {
  auto edges = [](const DynkinDiagram& d) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < d.rank; ++i)
      for (int j = i + 1; j < d.rank; ++j)
        if (d.adjacency(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) e.push_back({i, j});
    return e;
  };
  for (auto [name, count] : std::vector<std::pair<const char*, std::size_t>>{{"A1", 2}, {"A2", 6}, {"D4", 24}}) {
    auto d = DynkinDiagram::parse(name);
    auto rs = build_root_system(d);
    auto oracle_count = oracle::box_root_count(oracle::cartan_from_edges(static_cast<std::size_t>(d.rank), edges(d)), 3);
    c.expect(rs.roots.size() == count && oracle_count == count, std::string("roots of ") + name);
  }
  for (auto [name, order] : std::vector<std::pair<const char*, long>>{{"A1", 2}, {"A2", 6}, {"D4", 192}}) {
    auto d = DynkinDiagram::parse(name);
    auto w = weyl_group(build_root_system(d));
    c.expect(w.order == order && w.elements.size() == static_cast<std::size_t>(order) &&
                 weyl_order_formula(d) == order && oracle::weyl_order(name[0], d.rank) == order,
             std::string("Weyl order of ") + name);
  }
  for (auto [name, n] : std::vector<std::pair<const char*, std::size_t>>{
           {"A1", 1}, {"E7", 1}, {"E8", 1}, {"A3", 2}, {"D5", 2}, {"E6", 2}, {"D4", 6}}) {
    auto d = DynkinDiagram::parse(name);
    c.expect(graph_automorphisms(d).size() == n &&
                 oracle::graph_automorphism_count(static_cast<std::size_t>(d.rank), edges(d)) == n,
             std::string("Aut of ") + name);
  }
}

Vector<Rational> vec(std::initializer_list<int> xs) {
  Vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

void c11_nodes(Check& c) {
  c.expect(!node_smoothable({2, {vec({1, 0})}}).smoothable, "single class smoothable");
  auto p = node_smoothable({2, {vec({1, 2}), vec({-1, -2})}});
  c.expect(p.smoothable && p.lambda == vec({1, 1}), "{v, -v} relation");
  auto t = node_smoothable({2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}});
  c.expect(t.smoothable && t.lambda == vec({1, 1, 1}), "{e1, e2, -e1-e2} relation");
  c.expect(node_kahler({1, {vec({1})}}).positive, "{e1} Kahler");
  c.expect(!node_kahler({2, {vec({1, 2}), vec({-1, -2})}}).positive, "{v, -v} Kahler");
  auto k = node_kahler({2, {vec({1, 0}), vec({0, 1})}});
  c.expect(k.positive && k.functional == vec({1, 1}), "{e1, e2} Kahler functional");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 50; ++i) {
    Vector<Rational> v{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
    if (is_zero_vector(v)) v[0] = 1;
    NodeConfiguration opp{3, {v, scale(v, Rational(-1))}};
    c.expect(node_smoothable(opp).smoothable && !node_kahler(opp).positive, "random {v, -v}");
  }
  c.expect(!node_smoothable({2, {vec({1, 0}), vec({0, 1})}}).smoothable, "{e1, e2} smoothable");
}

void c12_properties(Check& c) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-6, 6), sz(1, 4);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = static_cast<std::size_t>(sz(rng)), k = static_cast<std::size_t>(sz(rng));
    IntMatrix m(r, k);
    oracle::IMat raw(r, std::vector<long long>(k));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) { raw[i][j] = d(rng); m(i, j) = Integer(static_cast<long>(raw[i][j])); }
    auto s = snf(m);
    std::vector<long long> nz;
    for (const auto& f : s.invariant_factors)
      if (f != 0) nz.push_back(f.get_si());
    c.expect(s.U * m * s.V == s.D && nz == oracle::determinantal_invariant_factors(raw), "random SNF");
  }
  for (const char* name : {"A3", "D4"}) {
    auto rs = build_root_system(DynkinDiagram::parse(name));
    std::set<LatVector> roots(rs.roots.begin(), rs.roots.end());
    for (const auto& w : weyl_group(rs).elements) {
      std::set<LatVector> img;
      for (const auto& r : rs.roots) img.insert(w * r);
      c.expect(w.transpose() * rs.intersection_form * w == rs.intersection_form && img == roots, "Weyl element");
    }
  }
  for (const auto& gens : std::vector<std::vector<Motion>>{{kappa_z4()}, {kappa1(), kappa2()}, {kappa1()}}) {
    auto g = FiniteMatrixGroup::close(gens);
    auto e = orbifold_euler(g, Ambient::torus(kGaussian));
    c.expect(e.pre_division_sum % static_cast<long>(g.order()) == 0, "euler divisibility");
  }
  const std::vector<std::string> units{"1", "-1", "i", "-i"};
  std::uniform_int_distribution<std::size_t> pick(0, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::string> dg{units[pick(rng)], units[pick(rng)], units[pick(rng)]};
    Integer product = 1;
    for (const auto& u : dg) product *= fixed_set(diag({u}), TorusLattice::standard(2)).component_count();
    c.expect(fixed_set(diag(dg), kGaussian).component_count() == product, "fixed-set multiplicativity");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"group structure", c1_group_structure},
      {"fixed-point census of T^6/Z4", c2_fixed_point_census},
      {"singular set of T^6/Z2^2", c3_z2z2_singular_set},
      {"orbifold Euler characteristic", c4_orbifold_euler},
      {"quotient Betti numbers", c5_quotient_betti},
      {"desingularization ledger", c6_ledger},
      {"lifts and invariant pairs", c7_lifts_and_pairs},
      {"second stage", c8_second_stage},
      {"chi-data combinatorics", c9_chi_data},
      {"ADE machinery", c10_ade},
      {"node checks", c11_nodes},
      {"property suites", c12_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double t = seconds_since(t0);
    if (t >= kLimit[i + 1]) c.failures.push_back("time " + std::to_string(t) + " s over limit");
    std::string detail;
    for (const auto& f : c.failures) detail += (detail.empty() ? " -- " : "; ") + f;
    std::printf("%s %2zu %-32s %8.3f s%s\n", c.failures.empty() ? "PASS" : "FAIL", i + 1, criteria[i].first, t,
                detail.c_str());
    failed += !c.failures.empty();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
