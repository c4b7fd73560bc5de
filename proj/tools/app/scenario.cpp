#include "scenario.hpp"

#include "cydesing/error.hpp"

#include <fstream>
#include <sstream>

namespace cydesing::app {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& msg) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

bool parse_bool(const ConfigLine& l, const std::string& origin) {
  if (l.value == "yes" || l.value == "true") return true;
  if (l.value == "no" || l.value == "false") return false;
  fail(origin, l.number, "expected yes/no, got '" + l.value + "'");
}

std::size_t parse_size(const ConfigLine& l, const std::string& origin) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(l.value, &pos);
    if (pos != l.value.size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    fail(origin, l.number, "expected a nonnegative integer, got '" + l.value + "'");
  }
}

template <class T, class F>
Vector<T> parse_row(const ConfigLine& l, const std::string& origin, F parse) {
  Vector<T> row;
  for (const auto& w : split_words(l.value)) {
    try {
      row.push_back(parse(w));
    } catch (const ParseError& e) {
      fail(origin, l.number, e.what());
    }
  }
  return row;
}

template <class T>
Matrix<T> rows_to_matrix(const std::vector<Vector<T>>& rows, std::size_t line, const std::string& origin) {
  if (rows.empty()) fail(origin, line, "matrix has no rows");
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(origin, line, "matrix must be square");
  return Matrix<T>::from_rows(rows, rows.size());
}

std::string join(const Vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].str();
  return out;
}

}  // namespace

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ConfigLine> tokenize_config(std::string_view text, const std::string& origin) {
  std::vector<ConfigLine> out;
  std::string section;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, number, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) fail(origin, number, "empty section header");
      out.push_back({number, section, {}, {}, true});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(origin, number, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) fail(origin, number, "missing key");
    out.push_back({number, section, key, trim(std::string_view(line).substr(eq + 1)), false});
  }
  return out;
}

Motion GeneratorSpec::motion() const {
  Motion m = complex ? Motion::from_complex(*complex, conjugate) : Motion(*real);
  const auto& a = m.matrix();
  if (a.transpose() * a != RatMatrix::identity(a.rows()))
    throw PreconditionError("not an isometry");
  return m;
}

std::vector<Motion> Scenario::motions() const {
  std::vector<Motion> out;
  for (const auto& g : generators) out.push_back(g.motion());
  return out;
}

FiniteMatrixGroup Scenario::group(std::size_t cap) const {
  if (generators.empty()) return FiniteMatrixGroup::close({Motion::identity(2 * complex_dim)}, cap);
  return FiniteMatrixGroup::close(motions(), cap);
}

TorusLattice Scenario::torus_lattice() const {
  if (ambient != AmbientKind::Torus) throw PreconditionError("scenario '" + name + "' is not a torus");
  return lattice ? TorusLattice(*lattice) : TorusLattice::standard(2 * complex_dim);
}

Ambient Scenario::ambient_space() const {
  return ambient == AmbientKind::Torus ? Ambient::torus(torus_lattice()) : Ambient::linear(2 * complex_dim);
}

std::optional<std::filesystem::path> Scenario::table_path() const {
  if (!table) return std::nullopt;
  return source.empty() ? std::filesystem::path(*table) : source.parent_path() / *table;
}

bool Scenario::operator==(const Scenario& o) const {
  auto nodes_eq = [](const std::optional<NodeConfiguration>& a, const std::optional<NodeConfiguration>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->dimension == b->dimension && a->classes == b->classes);
  };
  return name == o.name && ambient == o.ambient && complex_dim == o.complex_dim && lattice == o.lattice &&
         generators == o.generators && line == o.line && table == o.table && nodes_eq(nodes, o.nodes);
}

Scenario parse_scenario(std::string_view text, const std::string& origin) {
  Scenario s;
  bool have_dim = false, have_ambient = false;
  std::vector<Vector<Rational>> lattice_cols;
  std::size_t lattice_line = 0;
  std::vector<Vector<Cyclotomic>> crow;
  std::vector<Vector<Rational>> rrow;
  std::size_t gen_line = 0;

  auto finish_generator = [&] {
    if (s.generators.empty()) return;
    if (!crow.empty() && !rrow.empty()) fail(origin, gen_line, "generator mixes complex and real rows");
    auto& g = s.generators.back();
    if (g.complex || g.real) return;
    if (!crow.empty()) g.complex = rows_to_matrix(crow, gen_line, origin);
    else if (!rrow.empty()) g.real = rows_to_matrix(rrow, gen_line, origin);
    else fail(origin, gen_line, "generator '" + g.name + "' has no rows");
    crow.clear();
    rrow.clear();
  };

  for (const auto& l : tokenize_config(text, origin)) {
    if (l.header) {
      finish_generator();
      if (l.section.rfind("generator", 0) == 0) {
        std::string name = trim(std::string_view(l.section).substr(9));
        if (name.empty()) fail(origin, l.number, "generator needs a name");
        s.generators.push_back({name, false, std::nullopt, std::nullopt});
        gen_line = l.number;
      } else if (l.section == "lattice") {
        lattice_line = l.number;
      } else if (l.section == "nodes") {
        s.nodes = NodeConfiguration{};
      } else {
        fail(origin, l.number, "unknown section '" + l.section + "'");
      }
      continue;
    }
    const std::string& sec = l.section;
    if (sec.empty()) {
      if (l.key == "name") s.name = l.value;
      else if (l.key == "ambient") {
        if (l.value == "torus") s.ambient = AmbientKind::Torus;
        else if (l.value == "linear") s.ambient = AmbientKind::Linear;
        else fail(origin, l.number, "ambient must be 'torus' or 'linear'");
        have_ambient = true;
      } else if (l.key == "complex_dim") {
        s.complex_dim = parse_size(l, origin);
        have_dim = s.complex_dim > 0;
      } else if (l.key == "line") {
        std::size_t v = parse_size(l, origin);
        if (v == 0) fail(origin, l.number, "line is 1-based");
        s.line = v - 1;
      } else if (l.key == "table") s.table = l.value;
      else fail(origin, l.number, "unknown key '" + l.key + "'");
    } else if (sec == "lattice") {
      if (l.key != "column") fail(origin, l.number, "expected 'column'");
      lattice_cols.push_back(parse_row<Rational>(l, origin, Rational::parse));
    } else if (sec == "nodes") {
      if (l.key == "dimension") s.nodes->dimension = parse_size(l, origin);
      else if (l.key == "class") s.nodes->classes.push_back(parse_row<Rational>(l, origin, Rational::parse));
      else fail(origin, l.number, "unknown key '" + l.key + "'");
    } else {
      auto& g = s.generators.back();
      if (l.key == "conjugate") g.conjugate = parse_bool(l, origin);
      else if (l.key == "row") crow.push_back(parse_row<Cyclotomic>(l, origin, Cyclotomic::parse_gaussian));
      else if (l.key == "real_row") rrow.push_back(parse_row<Rational>(l, origin, Rational::parse));
      else fail(origin, l.number, "unknown key '" + l.key + "'");
    }
  }
  finish_generator();

  if (s.name.empty()) fail(origin, 1, "missing 'name'");
  if (!have_ambient) fail(origin, 1, "missing 'ambient'");
  if (!have_dim) fail(origin, 1, "missing or zero 'complex_dim'");
  const std::size_t n = s.complex_dim;
  if (!lattice_cols.empty()) {
    if (s.ambient != AmbientKind::Torus) fail(origin, lattice_line, "lattice given for a linear ambient");
    if (lattice_cols.size() != 2 * n) fail(origin, lattice_line, "lattice needs 2*complex_dim columns");
    for (const auto& c : lattice_cols)
      if (c.size() != 2 * n) fail(origin, lattice_line, "lattice column has the wrong length");
    s.lattice = RatMatrix::from_columns(lattice_cols, 2 * n);
  }
  for (const auto& g : s.generators) {
    std::size_t size = g.complex ? g.complex->rows() : g.real->rows();
    if (size != (g.complex ? n : 2 * n)) fail(origin, 1, "generator '" + g.name + "' has the wrong size");
    if (g.real && g.conjugate) fail(origin, 1, "generator '" + g.name + "': conjugate applies to complex rows only");
  }
  if (s.line && *s.line >= n) fail(origin, 1, "line exceeds complex_dim");
  if (s.nodes)
    for (const auto& c : s.nodes->classes)
      if (c.size() != s.nodes->dimension) fail(origin, 1, "node class has the wrong dimension");
  // Validate that generators define motions now, so errors carry the file name.
  for (const auto& g : s.generators) {
    try {
      (void)g.motion();
    } catch (const PreconditionError& e) {
      throw ParseError(origin + ": generator '" + g.name + "': " + e.what());
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  Scenario s = parse_scenario(read_file(path), path.string());
  s.source = path;
  if (auto t = s.table_path(); t && !std::filesystem::exists(*t))
    throw ParseError(path.string() + ": table file not found: " + t->string());
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "name = " << s.name << "\n";
  out << "ambient = " << (s.ambient == AmbientKind::Torus ? "torus" : "linear") << "\n";
  out << "complex_dim = " << s.complex_dim << "\n";
  if (s.line) out << "line = " << *s.line + 1 << "\n";
  if (s.table) out << "table = " << *s.table << "\n";
  if (s.lattice) {
    out << "\n[lattice]\n";
    for (std::size_t c = 0; c < s.lattice->cols(); ++c) out << "column = " << join(s.lattice->col(c)) << "\n";
  }
  for (const auto& g : s.generators) {
    out << "\n[generator " << g.name << "]\n";
    if (g.complex) {
      out << "conjugate = " << (g.conjugate ? "yes" : "no") << "\n";
      for (std::size_t r = 0; r < g.complex->rows(); ++r) {
        out << "row =";
        for (std::size_t c = 0; c < g.complex->cols(); ++c) out << " " << (*g.complex)(r, c).str();
        out << "\n";
      }
    } else {
      for (std::size_t r = 0; r < g.real->rows(); ++r) out << "real_row = " << join(g.real->row(r)) << "\n";
    }
  }
  if (s.nodes) {
    out << "\n[nodes]\ndimension = " << s.nodes->dimension << "\n";
    for (const auto& c : s.nodes->classes) out << "class = " << join(c) << "\n";
  }
  return out.str();
}

}  // namespace cydesing::app
