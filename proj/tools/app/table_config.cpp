#include "table_config.hpp"

#include "scenario.hpp"

#include "cydesing/error.hpp"

#include <optional>

namespace cydesing::app {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& msg) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

// "<count> <kind> : <choice>"
PlanEntry parse_plan_entry(const ConfigLine& l, const std::string& origin) {
  auto colon = l.value.find(':');
  if (colon == std::string::npos) fail(origin, l.number, "expected '<count> <kind> : <choice>'");
  auto left = split_words(l.value.substr(0, colon));
  auto right = split_words(l.value.substr(colon + 1));
  if (left.size() != 2 || right.size() != 1) fail(origin, l.number, "expected '<count> <kind> : <choice>'");
  PlanEntry e;
  try {
    std::size_t pos = 0;
    long long c = std::stoll(left[0], &pos);
    if (pos != left[0].size() || c < 0) throw std::invalid_argument("");
    e.count = static_cast<std::size_t>(c);
  } catch (const std::exception&) {
    fail(origin, l.number, "bad count '" + left[0] + "'");
  }
  e.kind = left[1];
  e.choice = right[0];
  return e;
}

}  // namespace

TableConfig parse_table_config(std::string_view text, const std::string& origin) {
  TableConfig cfg;
  struct PendingEntry {
    std::size_t line;
    std::optional<std::string> kind, choice;
    Contribution c;
  };
  std::optional<PendingEntry> entry;

  auto flush = [&] {
    if (!entry) return;
    if (!entry->kind || !entry->choice) fail(origin, entry->line, "entry needs 'kind' and 'choice'");
    auto key = std::make_pair(*entry->kind, *entry->choice);
    if (cfg.table.entries.count(key)) fail(origin, entry->line, "duplicate entry " + key.first + " / " + key.second);
    cfg.table.entries[key] = entry->c;
    entry.reset();
  };

  for (const auto& l : tokenize_config(text, origin)) {
    if (l.header) {
      flush();
      if (l.section == "entry") entry = PendingEntry{l.number, {}, {}, {}};
      else if (l.section.rfind("plan ", 0) == 0) cfg.plans.push_back({l.section.substr(5), {}});
      else fail(origin, l.number, "unknown section '" + l.section + "'");
      continue;
    }
    if (l.section.empty()) {
      if (l.key == "name") cfg.table.name = l.value;
      else fail(origin, l.number, "unknown key '" + l.key + "'");
    } else if (l.section == "entry") {
      if (l.key == "kind") entry->kind = l.value;
      else if (l.key == "choice") entry->choice = l.value;
      else if (l.key == "db2" || l.key == "db3") {
        Integer v;
        if (v.set_str(l.value, 10) != 0) fail(origin, l.number, "bad integer '" + l.value + "'");
        (l.key == "db2" ? entry->c.db2 : entry->c.db3) = v;
      } else fail(origin, l.number, "unknown key '" + l.key + "'");
    } else {
      auto& plan = cfg.plans.back().plan;
      if (l.key == "component") plan.components.push_back(parse_plan_entry(l, origin));
      else if (l.key == "point") plan.points.push_back(parse_plan_entry(l, origin));
      else fail(origin, l.number, "unknown key '" + l.key + "'");
    }
  }
  flush();
  if (cfg.table.name.empty()) fail(origin, 1, "missing 'name'");
  return cfg;
}

TableConfig load_table_config(const std::filesystem::path& path) {
  return parse_table_config(read_file(path), path.string());
}

}  // namespace cydesing::app
