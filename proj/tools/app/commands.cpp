#include "commands.hpp"

#include "scenario.hpp"
#include "table_config.hpp"

#include "cydesing/ade/weyl.hpp"
#include "cydesing/error.hpp"
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

#include <functional>
#include <map>
#include <sstream>

namespace cydesing::app {

namespace {

constexpr std::size_t kMaxListedPoints = 64;

Report jint(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Report jvec(const Vector<Rational>& v) {
  Report a = Report::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Report jvec(const Vector<Cyclotomic>& v) {
  Report a = Report::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Report jmat(const LatMatrix& m) {
  Report a = Report::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Report row = Report::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    a.push_back(row);
  }
  return a;
}

Report jset(const IndexSet& s) { return Report(s); }

Scenario require_scenario(const RunOptions& o) {
  if (!o.scenario) throw PreconditionError("this command needs --scenario");
  return load_scenario(*o.scenario);
}

FiniteMatrixGroup scenario_group(const Scenario& s, const RunOptions& o) {
  return s.group(o.cap.value_or(kDefaultClosureCap));
}

Report header(const std::string& command, const Scenario* s) {
  Report r;
  r["command"] = command;
  if (s) {
    r["scenario"] = s->name;
    r["ambient"] = s->ambient == AmbientKind::Torus ? "torus" : "linear";
    r["complex_dim"] = s->complex_dim;
  }
  return r;
}

// H: the elements acting trivially on the distinguished line.
IndexSet line_kernel(const FiniteMatrixGroup& g, std::size_t line) {
  IndexSet h;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (splitting_multiplier(g.element(x), line) == Cyclotomic(1)) h.push_back(x);
  return h;
}

struct McKayContext {
  std::size_t line = 0;
  IndexSet h;
  KleinianClassification kc;
  PsiHom psi;
  RootSystem rs;
  WeylGroup w;
  std::vector<ChiLift> lifts;
  std::vector<Cyclotomic> phi;
};

McKayContext mckay_context(const Scenario& s, const FiniteMatrixGroup& g, const RunOptions& o) {
  if (!s.line) throw PreconditionError("scenario '" + s.name + "' has no distinguished line");
  McKayContext c;
  c.line = *s.line;
  c.h = line_kernel(g, c.line);
  c.kc = classify_kleinian(restricted_subgroup(g, c.h, c.line));
  c.psi = compute_psi(g, c.kc);
  c.rs = build_root_system(c.kc.diagram);
  c.w = weyl_group(c.rs, o.cap.value_or(kDefaultWeylCap));
  c.lifts = enumerate_chi_lifts(c.psi, c.w, o.cap.value_or(kDefaultLiftCap));
  c.phi = compute_phi(g, c.psi.quotient, c.line);
  return c;
}

Report lift_json(const ChiLift& l) {
  Report r;
  r["canonical"] = l.is_canonical();
  Report imgs = Report::array();
  for (std::size_t c = 0; c < l.images.size(); ++c) {
    Report e;
    e["coset"] = c;
    e["aut"] = l.images[c].aut;
    e["weyl"] = jmat(l.images[c].weyl);
    imgs.push_back(e);
  }
  r["images"] = imgs;
  return r;
}

Report cmd_group(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  Report r = header("group", &s);
  r["order"] = g.order();
  r["abelian"] = g.is_abelian();
  Report gens = Report::array();
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    Motion m = s.generators[i].motion();
    auto cls = su_classify(m);
    Report e;
    e["name"] = s.generators[i].name;
    e["order"] = g.order_of(*g.index_of(m));
    e["kind"] = to_string(cls.kind);
    if (cls.determinant) e["determinant"] = cls.determinant->str();
    if (m.dim_real() == 8) e["spin7"] = spin7_check(m);
    gens.push_back(e);
  }
  r["generators"] = gens;

  std::map<std::size_t, std::size_t> orders;
  for (std::size_t x = 0; x < g.order(); ++x) ++orders[g.order_of(x)];
  Report hist = Report::array();
  for (auto [k, v] : orders) hist.push_back({{"order", k}, {"count", v}});
  r["element_orders"] = hist;

  auto classes = conjugacy_classes(g);
  Report sizes = Report::array();
  for (const auto& c : classes) sizes.push_back(c.size());
  r["conjugacy_classes"] = {{"total", classes.size()}, {"nonidentity", classes.size() - 1}, {"sizes", sizes}};

  Report normal = Report::array();
  for (const auto& h : all_subgroups(g))
    if (h.size() > 1 && h.size() < g.order() && is_normal(g, h))
      normal.push_back({{"order", h.size()}, {"elements", jset(h)}});
  r["proper_normal_subgroups"] = normal;

  if (s.line) {
    IndexSet h = line_kernel(g, *s.line);
    auto q = normal_and_quotient(g, h);
    Report mult = Report::array();
    for (const auto& v : compute_phi(g, q, *s.line)) mult.push_back(v.str());
    r["splitting"] = {{"line", *s.line + 1}, {"kernel", jset(h)}, {"quotient_order", q.order()}, {"phi", mult}};
  }
  return r;
}

Report cmd_fixed_sets(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  auto l = s.torus_lattice();
  Report r = header("fixed-sets", &s);
  r["order"] = g.order();
  Report list = Report::array();
  for (std::size_t x = 1; x < g.order(); ++x) {
    auto f = fixed_set(g.element(x), l);
    Report e;
    e["element"] = x;
    e["element_order"] = g.order_of(x);
    e["dimension"] = f.dimension();
    e["component_count"] = jint(f.component_count());
    Report inv = Report::array();
    for (const auto& d : f.invariant_factors()) inv.push_back(jint(d));
    e["invariant_factors"] = inv;
    if (f.representatives().size() <= kMaxListedPoints) {
      Report reps = Report::array();
      for (const auto& p : f.representatives()) reps.push_back(jvec(p));
      e["representatives"] = reps;
    }
    list.push_back(e);
  }
  r["fixed_sets"] = list;
  return r;
}

std::string component_kind(const SingularComponent& c) { return c.label; }

Report singular_json(const SingularSetReport& rep) {
  Report r;
  std::map<std::string, std::size_t> by_label;
  Report comps = Report::array();
  for (const auto& c : rep.components) {
    ++by_label[component_kind(c)];
    Report e;
    e["label"] = c.label;
    if (!c.action.empty()) e["action"] = c.action;
    e["dimension"] = c.dimension;
    e["orbit_size"] = c.orbit_size;
    e["generic_stabilizer"] = jset(c.generic_stabilizer);
    e["setwise_stabilizer"] = jset(c.setwise_stabilizer);
    e["representative"] = jvec(c.representative);
    Report dir = Report::array();
    for (const auto& d : c.direction) dir.push_back(jvec(d));
    e["direction"] = dir;
    Report sp = Report::array();
    for (const auto& p : c.special_points) sp.push_back(jvec(p));
    e["special_points"] = sp;
    comps.push_back(e);
  }
  Report summary = Report::object();
  for (const auto& [k, v] : by_label) summary[k] = v;
  r["summary"] = summary;
  r["component_count"] = rep.components.size();
  r["intersection_point_count"] = rep.intersection_points.size();
  r["components"] = comps;
  Report pts = Report::array();
  for (const auto& p : rep.intersection_points)
    pts.push_back({{"point", jvec(p.point)},
                   {"stabilizer", jset(p.stabilizer)},
                   {"components", p.components},
                   {"orbit_size", p.orbit_size}});
  r["intersection_points"] = pts;
  return r;
}

Report cmd_singular_set(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  Report r = header("singular-set", &s);
  r["order"] = g.order();
  r.update(singular_json(singular_set(g, s.torus_lattice())));
  return r;
}

Report cmd_euler(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  auto e = orbifold_euler(g, s.ambient_space());
  auto classes = conjugacy_classes(g);
  Report r = header("euler", &s);
  r["euler"] = jint(e.value);
  r["pre_division_sum"] = jint(e.pre_division_sum);
  r["group_order"] = e.group_order;
  r["commuting_pairs"] = e.commuting_pairs;
  r["conjugacy_classes"] = {{"total", classes.size()}, {"nonidentity", classes.size() - 1}};
  return r;
}

Report mckay_json(const McKayContext& c) {
  Report r;
  r["line"] = c.line + 1;
  r["kernel"] = jset(c.h);
  r["diagram"] = c.kc.diagram.name();
  Report classes = Report::array();
  for (const auto& cl : c.kc.classes) {
    IndexSet parent;
    for (std::size_t x : cl) parent.push_back(c.kc.parent_index[x]);
    classes.push_back(jset(parent));
  }
  r["classes"] = classes;
  r["matchings"] = c.kc.matchings.size();
  r["quotient_order"] = c.psi.quotient.order();
  Report psi = Report::array();
  for (const auto& p : c.psi.images) psi.push_back(p);
  r["psi"] = psi;
  r["psi_trivial"] = c.psi.is_trivial();
  r["compatible_matchings"] = c.psi.compatible_matchings;
  r["weyl_order"] = jint(c.w.order);
  Report phi = Report::array();
  for (const auto& v : c.phi) phi.push_back(v.str());
  r["phi"] = phi;
  return r;
}

Report cmd_lifts(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  auto c = mckay_context(s, g, o);
  Report r = header("lifts", &s);
  r.update(mckay_json(c));
  Report lifts = Report::array();
  for (const auto& l : c.lifts) lifts.push_back(lift_json(l));
  r["lift_count"] = c.lifts.size();
  r["lifts"] = lifts;
  return r;
}

Report cmd_invariant_pair(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto g = scenario_group(s, o);
  auto c = mckay_context(s, g, o);
  Report r = header("invariant-pair", &s);
  r.update(mckay_json(c));
  Report cases = Report::array();
  for (const auto& lift : c.lifts) {
    auto problem = make_invariant_pair_problem(c.rs, lift, c.phi);
    auto d = invariant_pair_decide(problem, o.seed);
    Report e = lift_json(lift);
    e["exists"] = d.exists;
    e["attempts"] = d.attempts;
    e["used_fallback"] = d.used_fallback;
    if (d.exists) {
      e["alpha"] = jvec(d.alpha);
      e["beta"] = jvec(d.beta);
      e["alpha_space_dim"] = problem.A.size();
      e["beta_space_dim"] = problem.B.size();
    }
    if (d.blocking_root) e["blocking_root"] = *d.blocking_root;

    // Only beta = 0 (resolution) and alpha = 0 (deformation) have a local model here.
    std::optional<ModelSide> side;
    if (d.exists && problem.B.empty()) side = ModelSide::Resolution;
    else if (d.exists && problem.A.empty()) side = ModelSide::Deformation;
    if (side && c.kc.diagram.family == Family::A) {
      auto model = make_a_local_model(g, c.kc, c.line, *side);
      auto res = second_stage_classify(model);
      Report comps = Report::array();
      for (const auto& fc : res.components)
        comps.push_back({{"locus", fc.locus}, {"complex_dim", fc.complex_dim}, {"stabilizer", jset(fc.stabilizer)}});
      Report residual = Report::array();
      for (const auto& rg : iterate_residual(g, res))
        residual.push_back({{"locus", rg.locus}, {"order", rg.order}});
      e["second_stage"] = {{"side", to_string(*side)},
                           {"outcome", to_string(res.outcome)},
                           {"components", comps},
                           {"residual_groups", residual}};
    }
    cases.push_back(e);
  }
  r["cases"] = cases;
  return r;
}

Report cmd_chi_census(const RunOptions& o) {
  auto c = chi_family_census(o.grid_n);
  Report r = header("chi-census", nullptr);
  r["grid_n"] = o.grid_n;
  r["family1_count"] = jint(c.family1_count);
  r["axis_family_count"] = jint(c.axis_family_count);
  r["axis_union_count"] = jint(c.axis_union_count);
  r["union_count"] = jint(c.union_count);
  r["inclusion_exclusion"] = jint(c.inclusion_exclusion);
  r["all_admissible"] = c.all_admissible;
  return r;
}

Report cmd_chi_count(const RunOptions& o) {
  auto t = chi_total_count(o.grid_n, o.threads);
  Report r = header("chi-count", nullptr);
  r["grid_n"] = o.grid_n;
  r["sweep"] = jint(t.sweep);
  r["dp"] = jint(t.dp);
  r["agree"] = t.agree;
  return r;
}

Report betti_json(const BettiVector& b) {
  Report arr = Report::array();
  for (const auto& x : b.b) arr.push_back(jint(x));
  Report r;
  r["betti"] = arr;
  r["euler"] = jint(b.euler());
  if (b.b.size() == 7) {
    r["h11"] = jint(b.h11());
    r["h21"] = jint(b.h21());
  }
  return r;
}

// Plan counts must cover the singular set exactly, kind by kind.
void check_plan(const NamedPlan& p, const SingularSetReport& rep) {
  std::map<std::string, std::size_t> want, have;
  for (const auto& c : rep.components) ++want[component_kind(c)];
  for (const auto& e : p.plan.components) have[e.kind] += e.count;
  for (const auto& [k, n] : have)
    if (want[k] != n)
      throw PreconditionError("plan '" + p.name + "' covers " + std::to_string(n) + " components of kind " + k +
                              " but the singular set has " + std::to_string(want[k]));
  for (const auto& [k, n] : want)
    if (n && !have.count(k))
      throw PreconditionError("plan '" + p.name + "' has no choice for kind " + k);
  std::size_t points = 0;
  for (const auto& e : p.plan.points) points += e.count;
  if (points && points != rep.intersection_points.size())
    throw PreconditionError("plan '" + p.name + "' covers " + std::to_string(points) +
                            " points but the singular set has " + std::to_string(rep.intersection_points.size()));
}

Report cmd_ledger(const RunOptions& o) {
  Scenario s = require_scenario(o);
  auto path = s.table_path();
  if (!path) throw PreconditionError("scenario '" + s.name + "' names no contribution table");
  auto cfg = load_table_config(*path);
  auto g = scenario_group(s, o);
  auto l = s.torus_lattice();
  auto base = quotient_betti(g, l);
  auto rep = singular_set(g, l);
  Report r = header("ledger", &s);
  r["table"] = cfg.table.name;
  r["base"] = betti_json(base);
  Report plans = Report::array();
  for (const auto& p : cfg.plans) {
    check_plan(p, rep);
    Report e;
    e["plan"] = p.name;
    e.update(betti_json(ledger_apply(base, p.plan, cfg.table)));
    plans.push_back(e);
  }
  r["plans"] = plans;
  return r;
}

Report cmd_nodes(const RunOptions& o) {
  Scenario s = require_scenario(o);
  if (!s.nodes) throw PreconditionError("scenario '" + s.name + "' has no [nodes] section");
  auto sm = node_smoothable(*s.nodes);
  auto k = node_kahler(*s.nodes, o.cap.value_or(kDefaultConstraintCap));
  Report r = header("nodes", &s);
  r["classes"] = s.nodes->classes.size();
  r["dimension"] = s.nodes->dimension;
  r["smoothable"] = sm.smoothable;
  if (sm.smoothable) r["lambda"] = jvec(sm.lambda);
  r["kahler_positive"] = k.positive;
  if (k.positive) r["functional"] = jvec(k.functional);
  return r;
}

using Handler = std::function<Report(const RunOptions&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"group", cmd_group},
      {"fixed-sets", cmd_fixed_sets},
      {"singular-set", cmd_singular_set},
      {"euler", cmd_euler},
      {"lifts", cmd_lifts},
      {"invariant-pair", cmd_invariant_pair},
      {"chi-census", cmd_chi_census},
      {"chi-count", cmd_chi_count},
      {"ledger", cmd_ledger},
      {"nodes", cmd_nodes},
  };
  return h;
}

bool is_scalar(const Report& v) { return !v.is_object() && !(v.is_array() && !v.empty() && !v.front().is_primitive()); }

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

void render(std::ostringstream& out, const Report& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (is_scalar(x)) {
        out << pad << k << ": " << scalar_text(x) << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_scalar(v[i])) {
        out << pad << "- " << scalar_text(v[i]) << "\n";
      } else {
        out << pad << "- [" << i << "]\n";
        render(out, v[i], indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : handlers()) n.push_back(k);
    return n;
  }();
  return names;
}

Report run_command(const std::string& command, const RunOptions& opts) {
  for (const auto& [name, h] : handlers())
    if (name == command) return h(opts);
  throw ParseError("unknown command '" + command + "'");
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  render(out, r, 0);
  return out.str();
}

}  // namespace cydesing::app
