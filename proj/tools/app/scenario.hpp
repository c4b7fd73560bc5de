#pragma once

#include "cydesing/exact/cyclotomic.hpp"
#include "cydesing/exact/smith.hpp"
#include "cydesing/group/finite_group.hpp"
#include "cydesing/group/motion.hpp"
#include "cydesing/invariants/euler.hpp"
#include "cydesing/invariants/nodes.hpp"
#include "cydesing/torus/lattice.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cydesing::app {

enum class AmbientKind { Torus, Linear };

struct GeneratorSpec {
  std::string name;
  bool conjugate = false;
  std::optional<Matrix<Cyclotomic>> complex;  // n x n Gaussian rationals
  std::optional<RatMatrix> real;              // 2n x 2n

  Motion motion() const;
  bool operator==(const GeneratorSpec&) const = default;
};

struct Scenario {
  std::string name;
  AmbientKind ambient = AmbientKind::Linear;
  std::size_t complex_dim = 0;
  std::optional<RatMatrix> lattice;           // basis columns in real coordinates
  std::vector<GeneratorSpec> generators;
  std::optional<std::size_t> line;            // 0-based distinguished complex line
  std::optional<std::string> table;           // contribution table, relative to the scenario
  std::optional<NodeConfiguration> nodes;

  std::filesystem::path source;               // not serialized

  std::vector<Motion> motions() const;
  FiniteMatrixGroup group(std::size_t cap = kDefaultClosureCap) const;
  TorusLattice torus_lattice() const;         // PreconditionError unless the ambient is a torus
  Ambient ambient_space() const;
  std::optional<std::filesystem::path> table_path() const;

  bool operator==(const Scenario& o) const;
};

Scenario parse_scenario(std::string_view text, const std::string& origin = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);
std::string serialize_scenario(const Scenario& s);

// Shared by the scenario and table readers.
struct ConfigLine {
  std::size_t number = 0;
  std::string section;   // "" before the first header
  std::string key;
  std::string value;
  bool header = false;
};

std::vector<ConfigLine> tokenize_config(std::string_view text, const std::string& origin);
std::vector<std::string> split_words(std::string_view s);
std::string read_file(const std::filesystem::path& path);

}  // namespace cydesing::app
