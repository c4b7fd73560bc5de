#include "cydesing/group/finite_group.hpp"

#include "cydesing/group/classify.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace cydesing {

namespace {

constexpr std::uint64_t kAssociativitySeed = 0x5eedULL;
constexpr std::size_t kAssociativitySamples = 256;

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<Motion>& generators, std::size_t cap) {
  if (generators.empty()) throw PreconditionError("closure needs at least one generator");
  if (cap < 1) throw PreconditionError("closure cap must be positive");
  const std::size_t dim = generators.front().dim_real();
  for (const auto& g : generators)
    if (g.dim_real() != dim) throw PreconditionError("generators have different dimensions");

  FiniteMatrixGroup out;
  out.dim_ = dim;
  out.elements_.push_back(Motion::identity(dim));
  out.lookup_.emplace(out.elements_.back(), 0);
  std::vector<std::vector<std::uint32_t>> right;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> word_edge{{0, 0}};

  for (std::size_t i = 0; i < out.elements_.size(); ++i) {
    std::vector<std::uint32_t> row(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Motion p = out.elements_[i] * generators[k];
      auto it = out.lookup_.find(p);
      if (it == out.lookup_.end()) {
        if (out.elements_.size() >= cap)
          throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements", cap);
        std::size_t idx = out.elements_.size();
        out.lookup_.emplace(p, idx);
        out.elements_.push_back(std::move(p));
        word_edge.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k));
        row[k] = static_cast<std::uint32_t>(idx);
      } else {
        row[k] = static_cast<std::uint32_t>(it->second);
      }
    }
    right.push_back(std::move(row));
  }
  for (const auto& g : generators) out.generators_.push_back(out.lookup_.at(g));
  std::sort(out.generators_.begin(), out.generators_.end());
  out.generators_.erase(std::unique(out.generators_.begin(), out.generators_.end()), out.generators_.end());
  out.build_from_right_action(right, word_edge);
  out.verify_sampled_associativity();
  return out;
}

void FiniteMatrixGroup::build_from_right_action(
    const std::vector<std::vector<std::uint32_t>>& right,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& word_edge) {
  const std::size_t n = order();
  table_.assign(n * n, 0);
  // Element j = (parent j) * generator, and parent index < j, so a*j follows from a*parent.
  for (std::size_t a = 0; a < n; ++a) {
    table_[a * n] = static_cast<std::uint32_t>(a);
    for (std::size_t j = 1; j < n; ++j) {
      auto [parent, gen] = word_edge[j];
      table_[a * n + j] = right[table_[a * n + parent]][gen];
    }
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
}

void FiniteMatrixGroup::verify_sampled_associativity() const {
  const std::size_t n = order();
  std::mt19937_64 rng(kAssociativitySeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = std::min<std::size_t>(kAssociativitySamples, n * n * n);
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    std::size_t lhs = mul(mul(a, b), c);
    std::size_t rhs = mul(a, mul(b, c));
    Motion direct = elements_[a] * elements_[b] * elements_[c];
    if (lhs != rhs || !(elements_[lhs] == direct))
      throw InternalError("multiplication table failed the associativity check");
  }
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(const std::vector<Motion>& elements) {
  if (elements.empty()) throw PreconditionError("empty element list");
  const std::size_t dim = elements.front().dim_real();
  FiniteMatrixGroup out;
  out.dim_ = dim;
  out.elements_.push_back(Motion::identity(dim));
  for (const auto& e : elements) {
    if (e.dim_real() != dim) throw PreconditionError("elements have different dimensions");
    if (!e.is_identity()) out.elements_.push_back(e);
  }
  for (std::size_t i = 0; i < out.elements_.size(); ++i)
    if (!out.lookup_.emplace(out.elements_[i], i).second) throw PreconditionError("duplicate group element");
  if (out.elements_.size() != elements.size()) throw PreconditionError("element list does not contain the identity");
  const std::size_t n = out.order();
  out.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = out.lookup_.find(out.elements_[a] * out.elements_[b]);
      if (it == out.lookup_.end()) throw PreconditionError("element list is not closed under products");
      out.table_[a * n + b] = static_cast<std::uint32_t>(it->second);
    }
  out.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (out.table_[a * n + b] == 0) out.inverse_[a] = static_cast<std::uint32_t>(b);
  out.generators_ = generating_set(out, [&] {
    IndexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }());
  return out;
}

std::size_t FiniteMatrixGroup::order_of(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteMatrixGroup::power(std::size_t a, long long k) const {
  std::size_t base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  std::size_t r = 0;
  for (unsigned long long i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t a : generators_)
    for (std::size_t b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const Motion& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuotientGroup::inv(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mul(a, b) == 0) return b;
  throw InternalError("quotient element without inverse");
}

std::size_t QuotientGroup::order_of(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<IndexSet> conjugacy_classes(const FiniteMatrixGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<IndexSet> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) cls.insert(g.conj(h, x));
    for (auto c : cls) seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

bool is_subgroup(const FiniteMatrixGroup& g, const IndexSet& h) {
  if (h.empty() || h.front() != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (auto x : h) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  for (auto a : h)
    for (auto b : h)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteMatrixGroup& g, const IndexSet& h) {
  std::vector<bool> in(g.order(), false);
  for (auto x : h) in[x] = true;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (auto x : h)
      if (!in[g.conj(a, x)]) return false;
  return true;
}

QuotientGroup normal_and_quotient(const FiniteMatrixGroup& g, const IndexSet& h_in) {
  IndexSet h = h_in;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (!is_subgroup(g, h)) throw NotASubgroup("index set is not a subgroup");
  if (!is_normal(g, h)) throw NotNormal("subgroup is not normal");
  const std::size_t n = g.order();
  QuotientGroup q;
  q.normal_subgroup = h;
  q.projection.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (q.projection[a] != n) continue;
    IndexSet coset;
    for (auto x : h) coset.push_back(g.mul(a, x));
    std::sort(coset.begin(), coset.end());
    for (auto c : coset) q.projection[c] = q.cosets.size();
    q.cosets.push_back(std::move(coset));
  }
  const std::size_t k = q.cosets.size();
  q.table.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) q.table[a * k + b] = q.projection[g.mul(q.representative(a), q.representative(b))];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (q.projection[g.mul(a, b)] != q.mul(q.projection[a], q.projection[b]))
        throw InternalError("quotient projection is not a homomorphism");
  return q;
}

IndexSet generated_subgroup(const FiniteMatrixGroup& g, const IndexSet& gens) {
  std::vector<bool> in(g.order(), false);
  IndexSet out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      std::size_t p = g.mul(out[i], s);
      if (!in[p]) {
        in[p] = true;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> all_subgroups(const FiniteMatrixGroup& g) {
  std::set<IndexSet> found;
  std::vector<IndexSet> frontier;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto c = generated_subgroup(g, {a});
    if (found.insert(c).second) frontier.push_back(c);
  }
  std::vector<IndexSet> cyclic(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        IndexSet gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        auto j = generated_subgroup(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  std::vector<IndexSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

IndexSet generating_set(const FiniteMatrixGroup& g, const IndexSet& h) {
  IndexSet gens;
  IndexSet span{0};
  for (auto x : h) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

IndexSet generating_set(const QuotientGroup& k) {
  IndexSet gens;
  std::vector<bool> in(k.order(), false);
  in[0] = true;
  for (std::size_t x = 1; x < k.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    IndexSet span{0};
    std::fill(in.begin(), in.end(), false);
    in[0] = true;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (auto s : gens) {
        std::size_t p = k.mul(span[i], s);
        if (!in[p]) {
          in[p] = true;
          span.push_back(p);
        }
      }
  }
  return gens;
}

IndexSet centralizer(const FiniteMatrixGroup& g, std::size_t a) {
  IndexSet out;
  for (std::size_t b = 0; b < g.order(); ++b)
    if (g.mul(a, b) == g.mul(b, a)) out.push_back(b);
  return out;
}

IndexSet stabilizer(const FiniteMatrixGroup& g, const Locus& locus) {
  IndexSet out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Motion& m = g.element(a);
    bool fixes = true;
    if (locus.point) {
      if (locus.point->size() != g.dim_real()) throw PreconditionError("point dimension does not match the group");
      fixes = m.apply(*locus.point) == *locus.point;
    } else {
      if (locus.subspace_basis.size() >= g.dim_real())
        throw PreconditionError("stabilizer locus must be a proper subspace");
      for (const auto& v : locus.subspace_basis) {
        if (v.size() != g.dim_real()) throw PreconditionError("subspace vector dimension does not match the group");
        if (!(m.apply(v) == v)) {
          fixes = false;
          break;
        }
      }
    }
    if (fixes) out.push_back(a);
  }
  return out;
}

Subgroup subgroup(const FiniteMatrixGroup& g, const IndexSet& h) {
  if (!is_subgroup(g, h)) throw NotASubgroup("index set is not a subgroup");
  std::vector<Motion> els;
  for (auto x : h) els.push_back(g.element(x));
  Subgroup out{FiniteMatrixGroup::from_elements(els), {}};
  for (const auto& e : out.group.elements()) out.parent_index.push_back(*g.index_of(e));
  return out;
}

Subgroup restricted_subgroup(const FiniteMatrixGroup& g, const IndexSet& h, std::size_t line) {
  if (!is_subgroup(g, h)) throw NotASubgroup("index set is not a subgroup");
  const std::size_t n = g.dim_real() / 2;
  if (line >= n) throw PreconditionError("splitting line out of range");
  if (n < 2) throw PreconditionError("restriction needs complex dimension at least 2");
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (k != line) {
      keep.push_back(2 * k);
      keep.push_back(2 * k + 1);
    }
  std::vector<Motion> els;
  std::vector<std::size_t> parents;
  std::map<Motion, std::size_t> seen;
  for (auto x : h) {
    const Motion& m = g.element(x);
    const RatMatrix& a = m.matrix();
    for (std::size_t r = 0; r < g.dim_real(); ++r)
      for (std::size_t c = 0; c < g.dim_real(); ++c) {
        bool r_line = r / 2 == line, c_line = c / 2 == line;
        if (r_line != c_line && !a(r, c).is_zero())
          throw SplittingNotPreserved("element " + std::to_string(x) + " does not preserve the splitting");
      }
    Motion restricted(a.submatrix(keep, keep));
    if (!seen.emplace(restricted, x).second)
      throw PreconditionError("restriction to the complement is not faithful");
    els.push_back(std::move(restricted));
  }
  Subgroup out{FiniteMatrixGroup::from_elements(els), {}};
  for (const auto& e : out.group.elements()) out.parent_index.push_back(seen.at(e));
  return out;
}

}  // namespace cydesing
