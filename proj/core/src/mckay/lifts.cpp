#include "cydesing/mckay/lifts.hpp"

#include "cydesing/group/classify.hpp"

#include <algorithm>

namespace cydesing {

bool ChiLift::is_canonical() const {
  return std::all_of(images.begin(), images.end(), [](const ExtendedElement& e) {
    return e.weyl == LatMatrix::identity(e.weyl.rows());
  });
}

bool is_lift_of(const ChiLift& chi, const PsiHom& psi) {
  const auto& q = psi.quotient;
  if (chi.images.size() != q.order()) return false;
  for (std::size_t k = 0; k < q.order(); ++k)
    if (chi.images[k].aut != psi.images[k]) return false;
  for (std::size_t a = 0; a < q.order(); ++a)
    for (std::size_t b = 0; b < q.order(); ++b)
      if (!(chi.images[q.mul(a, b)] == chi.images[a] * chi.images[b])) return false;
  return true;
}

std::vector<ChiLift> enumerate_chi_lifts(const PsiHom& psi, const WeylGroup& w, std::size_t cap) {
  if (!w.enumerated) throw CapExceeded("Weyl group is not enumerated under the cap", w.elements.size());
  const auto& q = psi.quotient;
  const std::size_t rank = w.generators.empty() ? 0 : w.generators.front().rows();
  IndexSet gens = generating_set(q);

  Integer candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) candidates *= static_cast<unsigned long>(w.elements.size());
  if (candidates > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("lift enumeration has " + candidates.get_str() + " candidates", cap);

  // Words: each coset reached as (earlier coset) * generator.
  std::vector<std::pair<std::size_t, std::size_t>> edge(q.order(), {0, 0});
  std::vector<bool> reached(q.order(), false);
  std::vector<std::size_t> bfs{0};
  reached[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t p = q.mul(bfs[i], gens[s]);
      if (!reached[p]) {
        reached[p] = true;
        edge[p] = {bfs[i], s};
        bfs.push_back(p);
      }
    }

  std::vector<ChiLift> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (;;) {
    std::vector<ExtendedElement> gen_img;
    for (std::size_t s = 0; s < gens.size(); ++s) gen_img.push_back({psi.images[gens[s]], w.elements[choice[s]]});
    ChiLift chi{std::vector<ExtendedElement>(q.order(), ExtendedElement::identity(rank))};
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      auto [parent, s] = edge[bfs[i]];
      chi.images[bfs[i]] = chi.images[parent] * gen_img[s];
    }
    bool generators_ok = true;
    for (std::size_t s = 0; s < gens.size(); ++s)
      if (!(chi.images[gens[s]] == gen_img[s])) generators_ok = false;
    if (generators_ok && is_lift_of(chi, psi)) out.push_back(std::move(chi));

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == w.elements.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const ChiLift& a, const ChiLift& b) {
    bool ca = a.is_canonical(), cb = b.is_canonical();
    if (ca != cb) return ca;
    return a.images < b.images;
  });
  return out;
}

std::vector<Cyclotomic> compute_phi(const FiniteMatrixGroup& g, const QuotientGroup& k, std::size_t line) {
  std::vector<Cyclotomic> phi;
  for (const auto& coset : k.cosets) {
    Cyclotomic sigma = splitting_multiplier(g.element(coset.front()), line);
    for (auto x : coset)
      if (!(splitting_multiplier(g.element(x), line) == sigma))
        throw PreconditionError("normal subgroup does not act trivially on the distinguished line");
    phi.push_back(sigma);
  }
  return phi;
}

}  // namespace cydesing
