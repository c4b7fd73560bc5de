#include "cydesing/ade/dynkin.hpp"

#include <algorithm>
#include <numeric>

namespace cydesing {

DynkinDiagram DynkinDiagram::make(Family family, int rank) {
  bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
            (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw PreconditionError("inadmissible Dynkin diagram");
  DynkinDiagram d;
  d.family = family;
  d.rank = rank;
  const auto r = static_cast<std::size_t>(rank);
  d.adjacency = LatMatrix(r, r);
  auto edge = [&](std::size_t a, std::size_t b) {
    d.adjacency(a, b) = 1;
    d.adjacency(b, a) = 1;
  };
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < r; ++i) edge(i, i + 1);
      edge(r - 1, r - 3);
      break;
    case Family::E:
      edge(0, 2);
      for (std::size_t i = 2; i + 1 < r; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
  }
  return d;
}

DynkinDiagram DynkinDiagram::parse(const std::string& name) {
  if (name.size() < 2) throw ParseError("bad Dynkin diagram name '" + name + "'");
  Family f;
  switch (name[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw ParseError("bad Dynkin diagram name '" + name + "'");
  }
  int r = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw ParseError("bad Dynkin diagram name '" + name + "'");
    r = r * 10 + (name[i] - '0');
    if (r > 1000) throw ParseError("Dynkin rank too large");
  }
  return make(f, r);
}

std::string DynkinDiagram::name() const {
  const char c = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, c) + std::to_string(rank);
}

int DynkinDiagram::degree(std::size_t v) const {
  long long s = 0;
  for (std::size_t j = 0; j < adjacency.cols(); ++j) s += adjacency(v, j);
  return static_cast<int>(s);
}

long long RootSystem::pair(const LatVector& u, const LatVector& v) const {
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * intersection_form(i, j) * v[j];
  return s;
}

LatVector highest_root(const DynkinDiagram& d) {
  const auto r = static_cast<std::size_t>(d.rank);
  switch (d.family) {
    case Family::A: return LatVector(r, 1);
    case Family::D: {
      LatVector h(r, 2);
      h[0] = 1;
      h[r - 2] = 1;
      h[r - 1] = 1;
      return h;
    }
    case Family::E:
      if (r == 6) return {1, 2, 2, 3, 2, 1};
      if (r == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
  }
  return {};
}

RootSystem build_root_system(const DynkinDiagram& d, int rank_cap) {
  if (d.rank > rank_cap)
    throw CapExceeded("root system rank " + std::to_string(d.rank) + " exceeds the rank cap",
                      static_cast<std::size_t>(rank_cap));
  RootSystem rs;
  rs.diagram = d;
  const auto r = static_cast<std::size_t>(d.rank);
  rs.cartan = LatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.cartan(i, j) = (i == j ? 2 : 0) - d.adjacency(i, j);
  rs.intersection_form = rs.cartan.scaled(-1);

  // Every root is positive or negative, and positive roots are bounded by the highest root.
  const LatVector box = highest_root(d);
  LatVector c(r, 0);
  std::vector<LatVector> positive;
  for (;;) {
    std::size_t i = 0;
    while (i < r && c[i] == box[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
    if (rs.pair(c, c) == -2) positive.push_back(c);
  }
  std::sort(positive.begin(), positive.end(), [](const LatVector& a, const LatVector& b) {
    long long ha = std::accumulate(a.begin(), a.end(), 0LL), hb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.roots = positive;
  for (const auto& p : positive) rs.roots.push_back(scale(p, -1LL));
  return rs;
}

std::vector<VertexPermutation> graph_automorphisms(const DynkinDiagram& d) {
  const auto r = static_cast<std::size_t>(d.rank);
  VertexPermutation p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<VertexPermutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (d.adjacency(p[i], p[j]) != d.adjacency(i, j)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

LatMatrix permutation_matrix(const VertexPermutation& p) {
  LatMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
  VertexPermutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

VertexPermutation invert(const VertexPermutation& p) {
  VertexPermutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

bool is_identity(const VertexPermutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace cydesing
