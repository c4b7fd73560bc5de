#pragma once

#include "cydesing/invariants/ledger.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cydesing::app {

struct NamedPlan {
  std::string name;
  DesingPlan plan;
};

struct TableConfig {
  ContributionTable table;
  std::vector<NamedPlan> plans;
};

TableConfig parse_table_config(std::string_view text, const std::string& origin = "<table>");
TableConfig load_table_config(const std::filesystem::path& path);

}  // namespace cydesing::app
