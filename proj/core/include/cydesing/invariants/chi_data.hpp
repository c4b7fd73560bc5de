#pragma once

#include "cydesing/exact/rational.hpp"

#include <cstdint>
#include <vector>

namespace cydesing {

inline constexpr unsigned kMaxChiGrid = 4;

// Three n x n sign matrices packed into 3 n^2 bits (bit set = -1):
// chi1[j][k] at bit j*n+k, chi2[i][k] at n^2 + i*n+k, chi3[i][j] at 2n^2 + i*n+j.
struct ChiData {
  unsigned n = 4;
  std::uint64_t bits = 0;

  int chi1(unsigned j, unsigned k) const { return bit(j * n + k); }
  int chi2(unsigned i, unsigned k) const { return bit(n * n + i * n + k); }
  int chi3(unsigned i, unsigned j) const { return bit(2 * n * n + i * n + j); }
  void set_chi1(unsigned j, unsigned k, int s) { set(j * n + k, s); }
  void set_chi2(unsigned i, unsigned k, int s) { set(n * n + i * n + k, s); }
  void set_chi3(unsigned i, unsigned j, int s) { set(2 * n * n + i * n + j, s); }

 private:
  int bit(unsigned p) const { return (bits >> p) & 1U ? -1 : 1; }
  void set(unsigned p, int s) {
    if (s < 0) bits |= std::uint64_t{1} << p;
    else bits &= ~(std::uint64_t{1} << p);
  }
};

// Every (i, j, k) has 0, 1 or 3 of chi1[j][k], chi2[i][k], chi3[i][j] equal to -1.
bool chi_admissible(const ChiData& d);

// chi1 = eps_j zeta_k, chi2 = delta_i zeta_k, chi3 = -delta_i eps_j.
ChiData product_family_member(unsigned n, std::uint32_t delta, std::uint32_t eps, std::uint32_t zeta);

struct ChiCensus {
  unsigned n = 4;
  std::vector<std::uint64_t> family1;                 // sorted distinct members
  std::vector<std::vector<std::uint64_t>> axis;       // three axis families, sorted
  std::vector<std::uint64_t> union_members;           // sorted
  Integer family1_count, axis_family_count, axis_union_count, union_count;
  Integer inclusion_exclusion;                        // union size from intersection sizes
  bool all_admissible = false;
};

ChiCensus chi_family_census(unsigned n = 4);

// Sum over chi1 of N(chi1)^n with per-row validity masks.
Integer chi_total_count_sweep(unsigned n = 4, unsigned threads = 0);
// Row-by-row accumulation with brute-force per-row transfer counts.
Integer chi_total_count_dp(unsigned n = 4, unsigned threads = 0);

struct ChiTotal {
  Integer sweep;
  Integer dp;
  bool agree = false;
};

ChiTotal chi_total_count(unsigned n = 4, unsigned threads = 0);

}  // namespace cydesing
