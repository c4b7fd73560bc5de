#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cydesing::app {

using Report = nlohmann::ordered_json;

struct RunOptions {
  std::optional<std::string> scenario;
  std::optional<std::size_t> cap;
  unsigned grid_n = 4;
  std::uint64_t seed = 20240607ULL;
  unsigned threads = 0;
};

const std::vector<std::string>& command_names();

// Throws cydesing::Error subclasses; the caller maps them to exit codes.
Report run_command(const std::string& command, const RunOptions& opts);

std::string render_text(const Report& r);

}  // namespace cydesing::app
