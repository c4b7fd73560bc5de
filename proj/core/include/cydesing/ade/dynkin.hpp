#pragma once

#include "cydesing/exact/matrix.hpp"

#include <string>

namespace cydesing {

using LatMatrix = Matrix<long long>;
using LatVector = Vector<long long>;
using VertexPermutation = std::vector<std::size_t>;

inline constexpr int kDefaultRankCap = 8;

enum class Family { A, D, E };

// Simply laced Dynkin diagram. Vertex order: A path; D_r path 0..r-2 with
// r-1 attached to r-3; E Bourbaki order, 0-based (1 hangs off 3).
struct DynkinDiagram {
  Family family = Family::A;
  int rank = 1;
  LatMatrix adjacency;

  static DynkinDiagram make(Family family, int rank);
  // "A1", "D4", "E6".
  static DynkinDiagram parse(const std::string& name);
  std::string name() const;
  int degree(std::size_t v) const;
  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

struct RootSystem {
  DynkinDiagram diagram;
  LatMatrix cartan;
  LatMatrix intersection_form;  // -cartan
  std::vector<LatVector> roots; // positive roots in search order, then their negatives

  std::size_t rank() const { return static_cast<std::size_t>(diagram.rank); }
  long long pair(const LatVector& u, const LatVector& v) const;
};

// Coefficients of the highest root in the simple-root basis.
LatVector highest_root(const DynkinDiagram& d);

RootSystem build_root_system(const DynkinDiagram& d, int rank_cap = kDefaultRankCap);

// Identity first, then lexicographic.
std::vector<VertexPermutation> graph_automorphisms(const DynkinDiagram& d);

// P with P e_i = e_{p(i)}.
LatMatrix permutation_matrix(const VertexPermutation& p);
VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b);  // a after b
VertexPermutation invert(const VertexPermutation& p);
bool is_identity(const VertexPermutation& p);

}  // namespace cydesing
