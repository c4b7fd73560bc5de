#pragma once

#include "cydesing/invariants/betti.hpp"

#include <map>
#include <string>

namespace cydesing {

struct Contribution {
  Integer db2 = 0;
  Integer db3 = 0;
};

// (component kind, resolution choice) -> Betti deltas.
struct ContributionTable {
  std::string name;
  std::map<std::pair<std::string, std::string>, Contribution> entries;

  const Contribution& at(const std::string& kind, const std::string& choice) const;
};

struct PlanEntry {
  std::string kind;
  std::string choice;
  std::size_t count = 1;
};

struct DesingPlan {
  std::vector<PlanEntry> components;
  std::vector<PlanEntry> points;

  DesingPlan merged(const DesingPlan& o) const;
};

// db2 lands on b^2 and b^4, db3 on b^3.
BettiVector ledger_apply(const BettiVector& base, const DesingPlan& plan, const ContributionTable& table);

// Betti numbers of the local models W of C^3/Z2^2 with the signs (chi_1, chi_2, chi_3).
struct LocalCase {
  const char* label;
  int chi1, chi2, chi3;
  int b2, b3;
};

const std::vector<LocalCase>& local_cases_c3_z2z2();
const LocalCase& local_case(const std::string& label);

}  // namespace cydesing
