#include "cydesing/mckay/second_stage.hpp"

#include <algorithm>
#include <map>

namespace cydesing {

namespace {

Cyclotomic cpow(const Cyclotomic& x, long long e) {
  Cyclotomic base = e < 0 ? x.inverse() : x;
  Cyclotomic r(1);
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

bool is_one(const Cyclotomic& x) { return x == Cyclotomic(1); }

struct RawComponent {
  std::string locus;
  int dim;
  // Underlying curve index or chart index, for containment.
  int curve = -1;
  int chart = -1;
  bool with_line = false;
};

// Fixed components of one element on the resolution side.
std::vector<RawComponent> resolution_fixed(unsigned n, const std::array<Cyclotomic, 3>& w) {
  const auto& [sigma, a, b] = w;
  const bool line = is_one(sigma);
  const std::string pre = line ? "C x " : "";
  const int extra = line ? 1 : 0;
  std::vector<RawComponent> out;
  const long long nn = n;
  auto p_weight = [&](long long j) { return cpow(a, j + 1) * cpow(b, -(nn - j - 1)); };
  auto q_weight = [&](long long j) { return cpow(b, nn - j) * cpow(a, -j); };
  std::vector<bool> curve_fixed(n + 1, false);
  for (long long j = 0; j < nn; ++j) {
    bool pf = is_one(p_weight(j)), qf = is_one(q_weight(j));
    if (pf && qf) {
      if (line) return {{"whole space", 3, -1, -1, true}};
      throw PreconditionError("element fixes a divisor of the resolution");
    }
    // {p_j = 0} is curve j, parametrized by q_j; {q_j = 0} is curve j+1, parametrized by p_j.
    if (qf) curve_fixed[static_cast<std::size_t>(j)] = true;
    if (pf) curve_fixed[static_cast<std::size_t>(j + 1)] = true;
  }
  for (unsigned c = 0; c <= n; ++c)
    if (curve_fixed[c]) out.push_back({pre + "curve " + std::to_string(c), 1 + extra, static_cast<int>(c), -1, line});
  for (unsigned j = 0; j < n; ++j)
    if (!curve_fixed[j] && !curve_fixed[j + 1])
      out.push_back({pre + "chart " + std::to_string(j) + " origin", extra, -1, static_cast<int>(j), line});
  return out;
}

std::vector<RawComponent> deformation_fixed(unsigned n, const std::array<Cyclotomic, 3>& w) {
  const auto& [sigma, a, b] = w;
  Cyclotomic wx = cpow(a, n), wy = cpow(b, n), wz = a * b;
  if (!is_one(cpow(wz, n))) throw PreconditionError("element does not preserve the deformed hypersurface");
  bool fz1 = is_one(sigma), fx = is_one(wx), fy = is_one(wy), fz = is_one(wz);
  int dim_f = fz1 + fx + fy + fz;
  // p = x y - z^n - beta restricted to the fixed subspace is constant iff no monomial survives.
  bool nonconstant = (fx && fy) || fz;
  if (!nonconstant) return {};
  if (dim_f == 4) return {{"whole space", 3}};
  std::string locus = "{";
  bool first = true;
  auto zero = [&](bool fixed, const char* name) {
    if (fixed) return;
    locus += (first ? "" : ", ") + std::string(name) + " = 0";
    first = false;
  };
  zero(fz1, "z1");
  zero(fx, "x");
  zero(fy, "y");
  zero(fz, "z");
  locus += "} on the hypersurface";
  int dim = dim_f - 1;
  if (dim == 2) throw PreconditionError("element fixes a divisor of the deformed hypersurface");
  return {{locus, dim}};
}

}  // namespace

const char* to_string(SecondStageOutcome o) {
  switch (o) {
    case SecondStageOutcome::Free: return "free";
    case SecondStageOutcome::IsolatedFixedPoints: return "isolated_fixed_points";
    case SecondStageOutcome::CodimTwoFixedLocus: return "codimension_two_fixed_locus";
    case SecondStageOutcome::WholeSpaceFixed: return "whole_space_fixed";
  }
  return "free";
}

const char* to_string(ModelSide s) { return s == ModelSide::Resolution ? "resolution" : "deformation"; }

ALocalModel make_a_local_model(const FiniteMatrixGroup& g, const KleinianClassification& kc, std::size_t line,
                               ModelSide side) {
  if (kc.diagram.family != Family::A) throw PreconditionError("second stage supports A-series models only");
  if (g.dim_real() != 6) throw PreconditionError("A-series local model needs C^3");
  IndexSet h(kc.parent_index.begin(), kc.parent_index.end());
  std::sort(h.begin(), h.end());
  ALocalModel m;
  m.n = static_cast<unsigned>(kc.subgroup.order());
  m.side = side;
  m.quotient = normal_and_quotient(g, h);

  std::size_t u = line == 0 ? 1 : 0;
  std::size_t v = 3 - line - u;
  auto diag = [&](const Motion& e) {
    if (!e.is_complex_linear()) throw PreconditionError("second stage needs complex-linear elements");
    auto a = e.complex_matrix();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j && !a(i, j).is_zero()) throw PreconditionError("second stage needs diagonal actions");
    return std::array<Cyclotomic, 3>{a(line, line), a(u, u), a(v, v)};
  };
  // H acts by (zeta, zeta^{-1}) on (u, v); any generator fixes which coordinate is u.
  for (std::size_t x : h) {
    auto w = diag(g.element(x));
    if (!is_one(w[0]) || !is_one(w[1] * w[2])) throw PreconditionError("H must act as (zeta, zeta^-1) on C^2");
  }
  for (const auto& coset : m.quotient.cosets) m.weights.push_back(diag(g.element(coset.front())));
  return m;
}

SecondStageResult second_stage_classify(const ALocalModel& model) {
  SecondStageResult res;
  const std::size_t k = model.quotient.order();
  if (k == 1) {
    res.outcome = SecondStageOutcome::WholeSpaceFixed;
    res.components.push_back({"whole space", 3, {0}});
    return res;
  }
  std::map<std::string, RawComponent> by_locus;
  std::map<std::string, IndexSet> stab;
  for (std::size_t c = 1; c < k; ++c) {
    auto comps = model.side == ModelSide::Resolution ? resolution_fixed(model.n, model.weights[c])
                                                     : deformation_fixed(model.n, model.weights[c]);
    for (auto& rc : comps) {
      stab[rc.locus].push_back(c);
      by_locus.emplace(rc.locus, rc);
    }
  }
  // Drop components contained in a larger one (chart origins lie on curves j and j+1; points lie in C x points).
  auto contains = [](const RawComponent& big, const RawComponent& small) {
    if (big.dim <= small.dim) return false;
    if (big.locus == "whole space") return true;
    bool line_ok = big.with_line || !small.with_line;
    if (small.chart >= 0 && big.curve >= 0)
      return line_ok && (big.curve == small.chart || big.curve == small.chart + 1);
    if (small.chart >= 0 && big.chart == small.chart) return big.with_line && !small.with_line;
    if (small.curve >= 0 && big.curve == small.curve) return big.with_line && !small.with_line;
    return false;
  };
  for (const auto& [name, rc] : by_locus) {
    bool maximal = true;
    for (const auto& [other, oc] : by_locus)
      if (other != name && contains(oc, rc)) maximal = false;
    if (!maximal) continue;
    IndexSet s{0};
    s.insert(s.end(), stab[name].begin(), stab[name].end());
    res.components.push_back({name, rc.dim, s});
  }
  int max_dim = -1;
  for (const auto& c : res.components) max_dim = std::max(max_dim, c.complex_dim);
  if (res.components.empty()) res.outcome = SecondStageOutcome::Free;
  else if (max_dim == 3) res.outcome = SecondStageOutcome::WholeSpaceFixed;
  else if (max_dim == 1) res.outcome = SecondStageOutcome::CodimTwoFixedLocus;
  else if (max_dim == 0) res.outcome = SecondStageOutcome::IsolatedFixedPoints;
  else throw PreconditionError("fixed divisor in the second stage");
  return res;
}

std::vector<ResidualGroup> iterate_residual(const FiniteMatrixGroup& g, const SecondStageResult& r) {
  std::vector<ResidualGroup> out;
  if (r.outcome == SecondStageOutcome::Free || r.outcome == SecondStageOutcome::WholeSpaceFixed) return out;
  for (const auto& c : r.components) {
    ResidualGroup rg{c.locus, c.stabilizer, c.stabilizer.size()};
    if (rg.order >= g.order()) throw InternalError("residual group order does not decrease");
    out.push_back(std::move(rg));
  }
  return out;
}

}  // namespace cydesing
