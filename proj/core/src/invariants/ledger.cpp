#include "cydesing/invariants/ledger.hpp"

namespace cydesing {

const Contribution& ContributionTable::at(const std::string& kind, const std::string& choice) const {
  auto it = entries.find({kind, choice});
  if (it == entries.end())
    throw MissingTableEntry("table '" + name + "' has no entry for kind '" + kind + "' choice '" + choice + "'");
  return it->second;
}

DesingPlan DesingPlan::merged(const DesingPlan& o) const {
  DesingPlan r = *this;
  r.components.insert(r.components.end(), o.components.begin(), o.components.end());
  r.points.insert(r.points.end(), o.points.begin(), o.points.end());
  return r;
}

BettiVector ledger_apply(const BettiVector& base, const DesingPlan& plan, const ContributionTable& table) {
  if (base.b.size() < 5) throw PreconditionError("ledger needs Betti numbers up to b^4");
  BettiVector out = base;
  auto add = [&](const PlanEntry& e) {
    const Contribution& c = table.at(e.kind, e.choice);
    const unsigned long n = e.count;
    out.b[2] += c.db2 * n;
    out.b[4] += c.db2 * n;
    out.b[3] += c.db3 * n;
  };
  for (const auto& e : plan.components) add(e);
  for (const auto& e : plan.points) add(e);
  return out;
}

const std::vector<LocalCase>& local_cases_c3_z2z2() {
  static const std::vector<LocalCase> cases{
      {"i", 1, 1, 1, 3, 0},    {"ii", 1, 1, 1, 2, 1},    {"iii", -1, 1, 1, 1, 1},
      {"iv", -1, 1, 1, 1, 1},  {"v", 1, -1, 1, 1, 1},    {"vi", 1, -1, 1, 1, 1},
      {"vii", 1, 1, -1, 1, 1}, {"viii", 1, 1, -1, 1, 1}, {"ix", -1, -1, -1, 0, 1},
  };
  return cases;
}

const LocalCase& local_case(const std::string& label) {
  for (const auto& c : local_cases_c3_z2z2())
    if (label == c.label) return c;
  throw MissingTableEntry("unknown local case '" + label + "'");
}

}  // namespace cydesing
