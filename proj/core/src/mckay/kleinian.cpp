#include "cydesing/mckay/kleinian.hpp"

#include "cydesing/group/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cydesing {

namespace {

std::vector<std::vector<std::size_t>> compatible_matchings(const FiniteMatrixGroup& h,
                                                           const std::vector<IndexSet>& classes,
                                                           const DynkinDiagram& d) {
  const std::size_t r = classes.size();
  std::vector<std::pair<std::size_t, std::size_t>> sig(r);
  for (std::size_t c = 0; c < r; ++c) sig[c] = {classes[c].size(), h.order_of(classes[c].front())};
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    // Classes sharing a signature land on vertices sharing a degree, and vice versa.
    bool ok = true;
    for (std::size_t a = 0; a < r && ok; ++a)
      for (std::size_t b = a + 1; b < r; ++b) {
        bool same_sig = sig[a] == sig[b];
        bool same_deg = d.degree(perm[a]) == d.degree(perm[b]);
        if (same_sig && !same_deg) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

KleinianClassification classify_kleinian(const FiniteMatrixGroup& h) {
  Subgroup s{h, {}};
  s.parent_index.resize(h.order());
  std::iota(s.parent_index.begin(), s.parent_index.end(), 0);
  return classify_kleinian(s);
}

KleinianClassification classify_kleinian(const Subgroup& sub) {
  const FiniteMatrixGroup& h = sub.group;
  if (h.dim_real() != 4) throw PreconditionError("Kleinian classification needs a group acting on C^2");
  for (const auto& e : h.elements())
    if (su_classify(e).kind != MotionKind::SpecialUnitary)
      throw PreconditionError("group is not contained in SU(2)");
  const std::size_t n = h.order();
  if (n == 1) throw PreconditionError("trivial group has no singularity");

  KleinianClassification kc{h, sub.parent_index, {}, {}, {}};
  auto classes = conjugacy_classes(h);
  classes.erase(classes.begin());

  std::size_t gen = n;
  for (std::size_t a = 1; a < n && gen == n; ++a)
    if (h.order_of(a) == n) gen = a;

  if (gen != n) {
    kc.diagram = DynkinDiagram::make(Family::A, static_cast<int>(n - 1));
    // Vertex v <-> class of gen^{v+1}.
    for (std::size_t v = 0; v + 1 < n; ++v) kc.classes.push_back({h.power(gen, static_cast<long long>(v + 1))});
    std::vector<std::size_t> id(n - 1);
    std::iota(id.begin(), id.end(), 0);
    kc.matchings.push_back(std::move(id));
    return kc;
  }
  if (h.is_abelian()) throw PreconditionError("noncyclic abelian subgroup of SU(2)");
  std::size_t max_order = 0;
  for (std::size_t a = 0; a < n; ++a) max_order = std::max(max_order, h.order_of(a));
  if (n % 4 == 0 && max_order == n / 2) {
    kc.diagram = DynkinDiagram::make(Family::D, static_cast<int>(n / 4 + 2));
  } else if (n == 24) {
    kc.diagram = DynkinDiagram::make(Family::E, 6);
  } else if (n == 48) {
    kc.diagram = DynkinDiagram::make(Family::E, 7);
  } else if (n == 120) {
    kc.diagram = DynkinDiagram::make(Family::E, 8);
  } else {
    throw PreconditionError("group order " + std::to_string(n) + " does not match a Kleinian type");
  }
  if (classes.size() != static_cast<std::size_t>(kc.diagram.rank))
    throw InternalError("nonidentity class count differs from the diagram rank");
  kc.classes = classes;
  kc.matchings = compatible_matchings(h, classes, kc.diagram);
  if (kc.matchings.empty()) throw InternalError("no class-vertex matching is compatible with the diagram");
  return kc;
}

bool PsiHom::is_trivial() const {
  return std::all_of(images.begin(), images.end(), [](const VertexPermutation& p) { return is_identity(p); });
}

PsiHom compute_psi(const FiniteMatrixGroup& g, const KleinianClassification& kc) {
  IndexSet h_parent(kc.parent_index.begin(), kc.parent_index.end());
  std::sort(h_parent.begin(), h_parent.end());
  QuotientGroup q = normal_and_quotient(g, h_parent);

  // Class position of each ambient element of H.
  std::vector<std::size_t> class_of(g.order(), kc.classes.size());
  for (std::size_t c = 0; c < kc.classes.size(); ++c)
    for (auto x : kc.classes[c]) class_of[kc.parent_index[x]] = c;
  // A-series classes store one representative only; extend by conjugation in H.
  for (std::size_t c = 0; c < kc.classes.size(); ++c)
    for (auto x : kc.classes[c])
      for (std::size_t y = 0; y < kc.subgroup.order(); ++y)
        class_of[kc.parent_index[kc.subgroup.conj(y, x)]] = c;

  const std::size_t r = kc.classes.size();
  std::vector<std::vector<std::size_t>> class_perm(q.order(), std::vector<std::size_t>(r));
  for (std::size_t k = 0; k < q.order(); ++k) {
    std::size_t rep = q.representative(k);
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t x = kc.parent_index[kc.classes[c].front()];
      class_perm[k][c] = class_of[g.conj(rep, x)];
      if (class_perm[k][c] == r) throw InternalError("conjugation left the subgroup");
    }
  }

  auto autos = graph_automorphisms(kc.diagram);
  std::size_t compatible = 0;
  std::optional<PsiHom> first;
  for (std::size_t m = 0; m < kc.matchings.size(); ++m) {
    const auto& match = kc.matchings[m];
    std::vector<std::size_t> vertex_class(r);
    for (std::size_t c = 0; c < r; ++c) vertex_class[match[c]] = c;
    std::vector<VertexPermutation> images(q.order(), VertexPermutation(r));
    bool ok = true;
    for (std::size_t k = 0; k < q.order() && ok; ++k) {
      for (std::size_t v = 0; v < r; ++v) images[k][v] = match[class_perm[k][vertex_class[v]]];
      ok = std::find(autos.begin(), autos.end(), images[k]) != autos.end();
    }
    for (std::size_t a = 0; a < q.order() && ok; ++a)
      for (std::size_t b = 0; b < q.order(); ++b)
        if (images[q.mul(a, b)] != compose(images[a], images[b])) {
          ok = false;
          break;
        }
    if (!ok) continue;
    ++compatible;
    if (!first) first = PsiHom{q, images, m, 0};
  }
  if (!first) {
    std::ostringstream os;
    os << "conjugation action is not a graph automorphism under any of " << kc.matchings.size()
       << " class-vertex matchings:";
    for (const auto& match : kc.matchings) {
      os << " [";
      for (std::size_t c = 0; c < match.size(); ++c) os << (c ? "," : "") << match[c];
      os << "]";
    }
    throw PreconditionError(os.str());
  }
  first->compatible_matchings = compatible;
  return *first;
}

}  // namespace cydesing
