#include "doctest.h"

#include "oracles.hpp"

#include "cydesing/ade/weyl.hpp"
#include "cydesing/error.hpp"

#include <set>

using namespace cydesing;

namespace {

std::vector<std::pair<int, int>> edges_of(const DynkinDiagram& d) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j < d.rank; ++j)
      if (d.adjacency(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) e.push_back({i, j});
  return e;
}

oracle::IMat cartan_of(const DynkinDiagram& d) {
  return oracle::cartan_from_edges(static_cast<std::size_t>(d.rank), edges_of(d));
}

}  // namespace

TEST_CASE("diagram parsing and shape") {
  auto d4 = DynkinDiagram::parse("D4");
  CHECK(d4.rank == 4);
  CHECK(d4.degree(1) == 3);
  CHECK(DynkinDiagram::parse("E6").name() == "E6");
  CHECK(edges_of(DynkinDiagram::parse("E6")).size() == 5);
  CHECK_THROWS_AS(DynkinDiagram::parse("D3"), PreconditionError);
  CHECK_THROWS_AS(DynkinDiagram::parse("E9"), PreconditionError);
  CHECK_THROWS_AS(DynkinDiagram::parse("Q2"), ParseError);
}

TEST_CASE("root counts against the box-search oracle") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
    auto d = DynkinDiagram::parse(name);
    auto rs = build_root_system(d);
    CAPTURE(name);
    CHECK(rs.roots.size() == oracle::box_root_count(cartan_of(d), 3));
  }
  CHECK(build_root_system(DynkinDiagram::parse("A1")).roots.size() == 2);
  CHECK(build_root_system(DynkinDiagram::parse("A2")).roots.size() == 6);
  CHECK(build_root_system(DynkinDiagram::parse("D4")).roots.size() == 24);
  CHECK(build_root_system(DynkinDiagram::parse("E8")).roots.size() == 240);
}

TEST_CASE("highest roots") {
  CHECK(highest_root(DynkinDiagram::parse("A3")) == LatVector{1, 1, 1});
  CHECK(highest_root(DynkinDiagram::parse("D4")) == LatVector{1, 2, 1, 1});
}

TEST_CASE("Weyl group orders") {
  for (const char* name : {"A1", "A2", "A3", "D4", "D5"}) {
    auto d = DynkinDiagram::parse(name);
    auto w = weyl_group(build_root_system(d));
    CAPTURE(name);
    CHECK(w.enumerated);
    CHECK(w.order == oracle::weyl_order(name[0], d.rank));
    CHECK(w.elements.size() == w.order.get_ui());
  }
  auto e8 = weyl_group(build_root_system(DynkinDiagram::parse("E8")));
  CHECK_FALSE(e8.enumerated);
  CHECK(e8.order == oracle::weyl_order('E', 8));
  CHECK(weyl_order_formula(DynkinDiagram::parse("E7")) == oracle::weyl_order('E', 7));
}

TEST_CASE("Weyl elements preserve the form and permute the roots") {
  for (const char* name : {"A3", "D4"}) {
    auto rs = build_root_system(DynkinDiagram::parse(name));
    auto w = weyl_group(rs);
    std::set<LatVector> roots(rs.roots.begin(), rs.roots.end());
    for (const auto& m : w.elements) {
      CHECK(m.transpose() * rs.intersection_form * m == rs.intersection_form);
      std::set<LatVector> image;
      for (const auto& r : rs.roots) image.insert(m * r);
      CHECK(image == roots);
    }
  }
}

TEST_CASE("graph automorphism counts") {
  std::vector<std::pair<const char*, std::size_t>> expected{
      {"A1", 1}, {"A3", 2}, {"D4", 6}, {"D5", 2}, {"E6", 2}, {"E7", 1}, {"E8", 1}};
  for (auto [name, n] : expected) {
    auto d = DynkinDiagram::parse(name);
    auto auts = graph_automorphisms(d);
    CAPTURE(name);
    CHECK(auts.size() == n);
    CHECK(is_identity(auts.front()));
    CHECK(auts.size() == oracle::graph_automorphism_count(static_cast<std::size_t>(d.rank), edges_of(d)));
  }
}

TEST_CASE("permutation conventions") {
  VertexPermutation p{1, 2, 0}, q{0, 2, 1};
  auto pm = permutation_matrix(p);
  CHECK(pm * LatVector{1, 0, 0} == LatVector{0, 1, 0});
  CHECK(permutation_matrix(compose(p, q)) == pm * permutation_matrix(q));
  CHECK(is_identity(compose(p, invert(p))));
}

TEST_CASE("semidirect product action") {
  auto rs = build_root_system(DynkinDiagram::parse("A3"));
  auto w = weyl_group(rs);
  auto auts = graph_automorphisms(rs.diagram);
  ExtendedElement a{auts[1], w.generators[0]}, b{auts[1], w.generators[2]}, c{auts[0], w.generators[1]};
  // Homomorphism: the lattice action of a product is the product of actions.
  CHECK((a * b).lattice_matrix() == a.lattice_matrix() * b.lattice_matrix());
  CHECK(((a * b) * c) == (a * (b * c)));
  CHECK((a * ExtendedElement::identity(3)) == a);
  // Dual action pairs invariantly with the lattice action.
  LatVector v{1, -2, 3}, f{2, 0, -1};
  auto pairing = [](const LatVector& x, const LatVector& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  CHECK(pairing(extended_action(a, v), extended_dual_action(a, f)) == pairing(v, f));
}

TEST_CASE("rank cap") { CHECK_THROWS_AS(build_root_system(DynkinDiagram::parse("A9"), 8), CapExceeded); }
