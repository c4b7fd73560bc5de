#include "cydesing/torus/singular_set.hpp"

#include "cydesing/exact/field_linalg.hpp"

#include <algorithm>
#include <memory>

namespace cydesing {

namespace {

// One connected component of a fixed family.
struct Piece {
  std::shared_ptr<const SubtorusFamily> family;
  std::size_t index = 0;
  Vector<Rational> rep;
  RatMatrix span;  // reduced row echelon basis of the direction space (rows)

  std::size_t dim() const { return family->dimension(); }
  bool contains(const Vector<Rational>& x) const {
    return family->contains(x) && family->component_of(x) == index;
  }
};

RatMatrix canonical_span(const std::vector<Vector<Rational>>& vs, std::size_t m) {
  if (vs.empty()) return RatMatrix(0, m);
  auto e = row_reduce(RatMatrix::from_rows(vs, m));
  std::vector<std::size_t> rows(e.pivots.size());
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < m; ++j) cols[j] = j;
  return e.reduced.submatrix(rows, cols);
}

bool same_piece(const Piece& a, const Piece& b) { return a.span == b.span && a.contains(b.rep); }

// a contained in b.
bool inside(const Piece& a, const Piece& b) {
  if (a.dim() > b.dim() || !b.contains(a.rep)) return false;
  if (a.span.rows() == 0) return true;
  return row_reduce(b.span.stacked(a.span)).pivots.size() == b.span.rows();
}

Vector<Rational> act(const RatMatrix& lg, const Vector<Rational>& x) { return reduce_mod_one(lg * x); }

}  // namespace

SingularSetReport singular_set(const FiniteMatrixGroup& g, const TorusLattice& l) {
  const std::size_t m = l.rank();
  std::vector<RatMatrix> lat;
  for (const auto& e : g.elements()) lat.push_back(convert<Rational>(lattice_matrix(e, l)));

  auto fixes_point = [&](std::size_t a, const Vector<Rational>& x) { return act(lat[a], x) == reduce_mod_one(x); };
  auto point_stabilizer = [&](const Vector<Rational>& x) {
    IndexSet s;
    for (std::size_t a = 0; a < g.order(); ++a)
      if (fixes_point(a, x)) s.push_back(a);
    return s;
  };

  // Components of fixed sets of all nontrivial subgroups.
  std::vector<Piece> pieces;
  for (const auto& sub : all_subgroups(g)) {
    if (sub.size() == 1) continue;
    std::vector<Motion> gens;
    for (auto x : generating_set(g, sub)) gens.push_back(g.element(x));
    auto fam = std::make_shared<const SubtorusFamily>(common_fixed_set(gens, l));
    RatMatrix span = canonical_span(fam->direction(), m);
    for (std::size_t i = 0; i < fam->representatives().size(); ++i) {
      Piece p{fam, i, fam->representatives()[i], span};
      bool dup = false;
      for (const auto& q : pieces)
        if (q.dim() == p.dim() && same_piece(q, p)) {
          dup = true;
          break;
        }
      if (!dup) pieces.push_back(std::move(p));
    }
  }

  std::vector<std::size_t> maximal, points;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].dim() == 0) points.push_back(i);
    bool is_max = true;
    for (std::size_t j = 0; j < pieces.size() && is_max; ++j)
      if (j != i && pieces[j].dim() > pieces[i].dim() && inside(pieces[i], pieces[j])) is_max = false;
    if (is_max) maximal.push_back(i);
  }
  std::stable_sort(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    if (pieces[a].dim() != pieces[b].dim()) return pieces[a].dim() > pieces[b].dim();
    if (!(pieces[a].span == pieces[b].span)) return pieces[a].span < pieces[b].span;
    return pieces[a].rep < pieces[b].rep;
  });

  auto image_index = [&](std::size_t a, std::size_t pi) {
    const Piece& p = pieces[pi];
    Vector<Rational> x = act(lat[a], p.rep);
    std::vector<Vector<Rational>> dirs;
    for (std::size_t i = 0; i < p.span.rows(); ++i) dirs.push_back(lat[a] * p.span.row(i));
    RatMatrix span = canonical_span(dirs, m);
    for (auto q : maximal)
      if (pieces[q].span == span && pieces[q].contains(x)) return q;
    throw InternalError("group image of a singular component is not a component");
  };

  SingularSetReport report;
  std::vector<std::size_t> orbit_of(pieces.size(), SIZE_MAX);
  for (auto pi : maximal) {
    if (orbit_of[pi] != SIZE_MAX) continue;
    const std::size_t orbit_id = report.components.size();
    std::vector<std::size_t> orbit;
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::size_t q = image_index(a, pi);
      if (orbit_of[q] == SIZE_MAX) {
        orbit_of[q] = orbit_id;
        orbit.push_back(q);
      }
    }
    const Piece& p = pieces[pi];
    SingularComponent c;
    c.dimension = p.dim();
    c.representative = p.rep;
    for (std::size_t i = 0; i < p.span.rows(); ++i) c.direction.push_back(p.span.row(i));
    c.orbit_size = orbit.size();
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (image_index(a, pi) != pi) continue;
      c.setwise_stabilizer.push_back(a);
      bool pointwise = fixes_point(a, p.rep);
      for (const auto& d : c.direction)
        if (!(lat[a] * d == d)) pointwise = false;
      if (pointwise) c.generic_stabilizer.push_back(a);
    }

    // How N/H acts along the component.
    const std::size_t n_over_h = c.setwise_stabilizer.size() / c.generic_stabilizer.size();
    std::vector<bool> in_h(g.order(), false);
    for (auto a : c.generic_stabilizer) in_h[a] = true;
    std::size_t max_order = 1, order_two = 0, gen = 0;
    for (auto a : c.setwise_stabilizer) {
      std::size_t k = 1;
      for (std::size_t x = a; !in_h[x]; x = g.mul(x, a)) ++k;
      if (k > max_order) {
        max_order = k;
        gen = a;
      }
      if (k == 2) ++order_two;
    }
    const std::string base = c.dimension == 0 ? "point" : "T^" + std::to_string(c.dimension);
    if (n_over_h == 1 || c.dimension == 0) {
      c.label = base;
    } else if (max_order == n_over_h) {
      c.label = base + "/Z" + std::to_string(n_over_h);
      if (n_over_h == 2) {
        bool negates = true;
        for (const auto& d : c.direction)
          if (!(lat[gen] * d == scale(d, Rational(-1)))) negates = false;
        c.action = negates ? "-1" : "other";
      }
    } else if (n_over_h == 4 && order_two == 3 * c.generic_stabilizer.size()) {
      c.label = base + "/Z2^2";
    } else {
      c.label = "unclassified";
    }

    for (auto qi : points) {
      const Piece& q = pieces[qi];
      if (!p.contains(q.rep) || p.dim() == 0) continue;
      if (point_stabilizer(q.rep).size() > c.generic_stabilizer.size()) c.special_points.push_back(q.rep);
    }
    report.components.push_back(std::move(c));
  }

  std::vector<bool> seen(pieces.size(), false);
  for (auto qi : points) {
    if (seen[qi]) continue;
    const Piece& q = pieces[qi];
    IntersectionPoint ip;
    ip.point = q.rep;
    ip.orbit_size = 0;
    for (auto pi : maximal)
      if (pieces[pi].dim() > 0 && pieces[pi].contains(q.rep)) ip.components.push_back(orbit_of[pi]);
    // Mark the G-orbit of the point.
    for (std::size_t a = 0; a < g.order(); ++a) {
      Vector<Rational> x = act(lat[a], q.rep);
      for (auto other : points)
        if (!seen[other] && pieces[other].rep == x) {
          seen[other] = true;
          ++ip.orbit_size;
        }
    }
    if (ip.components.size() < 2) continue;
    ip.stabilizer = point_stabilizer(q.rep);
    report.intersection_points.push_back(std::move(ip));
  }
  return report;
}

}  // namespace cydesing
