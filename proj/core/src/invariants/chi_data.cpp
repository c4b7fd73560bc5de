#include "cydesing/invariants/chi_data.hpp"

#include "cydesing/error.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <thread>

namespace cydesing {

namespace {

void check_grid(unsigned n) {
  if (n == 0) throw PreconditionError("chi grid size must be positive");
  if (n > kMaxChiGrid) throw CapExceeded("chi grid size " + std::to_string(n) + " exceeds the limit", kMaxChiGrid);
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Deterministic parallel sum of f(x) for x in [0, total).
template <class F>
Integer parallel_sum(std::uint64_t total, unsigned threads, F f) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), total ? total : 1));
  std::vector<Integer> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      const std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      for (std::uint64_t x = lo; x < hi; ++x) partial[t] += f(x);
    });
  for (auto& th : pool) th.join();
  Integer s = 0;
  for (const auto& p : partial) s += p;
  return s;
}

bool bad_triple(int a, int b, int c) { return (a < 0) + (b < 0) + (c < 0) == 2; }

std::vector<std::uint64_t> sorted_intersection(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool chi_admissible(const ChiData& d) {
  for (unsigned i = 0; i < d.n; ++i)
    for (unsigned j = 0; j < d.n; ++j)
      for (unsigned k = 0; k < d.n; ++k)
        if (bad_triple(d.chi1(j, k), d.chi2(i, k), d.chi3(i, j))) return false;
  return true;
}

ChiData product_family_member(unsigned n, std::uint32_t delta, std::uint32_t eps, std::uint32_t zeta) {
  auto s = [](std::uint32_t bits, unsigned i) { return (bits >> i) & 1U ? -1 : 1; };
  ChiData d{n, 0};
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      d.set_chi1(a, b, s(eps, a) * s(zeta, b));
      d.set_chi2(a, b, s(delta, a) * s(zeta, b));
      d.set_chi3(a, b, -s(delta, a) * s(eps, b));
    }
  return d;
}

ChiCensus chi_family_census(unsigned n) {
  check_grid(n);
  ChiCensus c;
  c.n = n;
  const unsigned nn = n * n;
  for (std::uint32_t delta = 0; delta < (1U << n); ++delta)
    for (std::uint32_t eps = 0; eps < (1U << n); ++eps)
      for (std::uint32_t zeta = 0; zeta < (1U << n); ++zeta)
        c.family1.push_back(product_family_member(n, delta, eps, zeta).bits);
  std::sort(c.family1.begin(), c.family1.end());
  c.family1.erase(std::unique(c.family1.begin(), c.family1.end()), c.family1.end());

  // Axis family a: matrix a free, the other two all +1.
  c.axis.resize(3);
  for (unsigned a = 0; a < 3; ++a) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nn); ++m) c.axis[a].push_back(m << (a * nn));
    std::sort(c.axis[a].begin(), c.axis[a].end());
  }

  std::vector<const std::vector<std::uint64_t>*> sets{&c.family1, &c.axis[0], &c.axis[1], &c.axis[2]};
  std::vector<std::uint64_t> all;
  for (auto* s : sets) all.insert(all.end(), s->begin(), s->end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  c.union_members = std::move(all);

  std::vector<std::uint64_t> axis_union;
  for (unsigned a = 0; a < 3; ++a) axis_union.insert(axis_union.end(), c.axis[a].begin(), c.axis[a].end());
  std::sort(axis_union.begin(), axis_union.end());
  axis_union.erase(std::unique(axis_union.begin(), axis_union.end()), axis_union.end());

  // Inclusion-exclusion over the 15 nonempty index subsets, using actual intersections.
  c.inclusion_exclusion = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<std::uint64_t> inter;
    bool first = true;
    for (unsigned s = 0; s < 4; ++s) {
      if (!(mask >> s & 1U)) continue;
      inter = first ? *sets[s] : sorted_intersection(inter, *sets[s]);
      first = false;
    }
    Integer size = static_cast<unsigned long>(inter.size());
    if (std::popcount(mask) % 2) c.inclusion_exclusion += size;
    else c.inclusion_exclusion -= size;
  }

  c.family1_count = static_cast<unsigned long>(c.family1.size());
  c.axis_family_count = static_cast<unsigned long>(c.axis[0].size());
  c.axis_union_count = static_cast<unsigned long>(axis_union.size());
  c.union_count = static_cast<unsigned long>(c.union_members.size());
  c.all_admissible = std::all_of(c.union_members.begin(), c.union_members.end(),
                                 [n](std::uint64_t b) { return chi_admissible(ChiData{n, b}); });
  return c;
}

Integer chi_total_count_sweep(unsigned n, unsigned threads) {
  check_grid(n);
  const unsigned rows = 1U << n;  // values of one row of n signs
  // valid[row][c]: mask over r2 values such that no (k) has exactly two of
  // (row bit k, r2 bit k, c) negative, for one fixed j with chi3 bit c.
  std::vector<std::uint32_t> valid(rows * 2, 0);
  for (unsigned row = 0; row < rows; ++row)
    for (unsigned cbit = 0; cbit < 2; ++cbit)
      for (unsigned r2 = 0; r2 < rows; ++r2) {
        bool ok = true;
        for (unsigned k = 0; k < n && ok; ++k) {
          unsigned neg = ((row >> k) & 1U) + ((r2 >> k) & 1U) + cbit;
          ok = neg != 2;
        }
        if (ok) valid[row * 2 + cbit] |= 1U << r2;
      }
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  return parallel_sum(total, worker_count(threads), [&](std::uint64_t chi1) {
    unsigned long count = 0;
    for (unsigned r3 = 0; r3 < rows; ++r3) {
      std::uint32_t mask = rows == 32 ? ~0U : (1U << rows) - 1;
      for (unsigned j = 0; j < n; ++j) {
        unsigned row = static_cast<unsigned>((chi1 >> (j * n)) & (rows - 1));
        mask &= valid[row * 2 + ((r3 >> j) & 1U)];
      }
      count += static_cast<unsigned long>(std::popcount(mask));
    }
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), count, n);
    return p;
  });
}

Integer chi_total_count_dp(unsigned n, unsigned threads) {
  check_grid(n);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  return parallel_sum(total, worker_count(threads), [&](std::uint64_t chi1_bits) {
    ChiData base{n, chi1_bits};
    // Per-row transfer: brute force over (chi2 row i, chi3 row i). It depends
    // only on chi1, so it is computed once and reused for every row.
    auto transfer = [&] {
      unsigned long t = 0;
      for (unsigned r2 = 0; r2 < (1U << n); ++r2)
        for (unsigned r3 = 0; r3 < (1U << n); ++r3) {
          bool ok = true;
          for (unsigned j = 0; j < n && ok; ++j)
            for (unsigned k = 0; k < n && ok; ++k)
              ok = !bad_triple(base.chi1(j, k), (r2 >> k) & 1U ? -1 : 1, (r3 >> j) & 1U ? -1 : 1);
          if (ok) ++t;
        }
      return t;
    };
    std::optional<unsigned long> memo;
    Integer ways = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (!memo) memo = transfer();
      ways *= *memo;
    }
    return ways;
  });
}

ChiTotal chi_total_count(unsigned n, unsigned threads) {
  ChiTotal t;
  t.sweep = chi_total_count_sweep(n, threads);
  t.dp = chi_total_count_dp(n, threads);
  t.agree = t.sweep == t.dp;
  return t;
}

}  // namespace cydesing
