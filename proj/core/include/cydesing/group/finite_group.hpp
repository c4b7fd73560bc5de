#pragma once

#include "cydesing/group/motion.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

namespace cydesing {

inline constexpr std::size_t kDefaultClosureCap = 10000;

using IndexSet = std::vector<std::size_t>;  // sorted element indices

// Closed finite set of motions with an index-based multiplication table.
// Element 0 is the identity.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup close(const std::vector<Motion>& generators, std::size_t cap = kDefaultClosureCap);
  // Fails with PreconditionError unless the list is closed and contains the identity.
  static FiniteMatrixGroup from_elements(const std::vector<Motion>& elements);

  std::size_t order() const { return elements_.size(); }
  std::size_t dim_real() const { return dim_; }
  const Motion& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Motion>& elements() const { return elements_; }
  // Generator indices as supplied to close().
  const IndexSet& generators() const { return generators_; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conj(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv(g)); }
  std::size_t order_of(std::size_t a) const;
  std::size_t power(std::size_t a, long long k) const;
  bool is_abelian() const;
  std::optional<std::size_t> index_of(const Motion& m) const;

 private:
  void build_from_right_action(const std::vector<std::vector<std::uint32_t>>& right,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& word_edge);
  void verify_sampled_associativity() const;

  std::size_t dim_ = 0;
  std::vector<Motion> elements_;
  std::map<Motion, std::size_t> lookup_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  IndexSet generators_;
};

struct QuotientGroup {
  std::vector<IndexSet> cosets;        // coset 0 is the subgroup itself
  std::vector<std::size_t> table;      // cosets.size()^2
  std::vector<std::size_t> projection; // parent index -> coset
  IndexSet normal_subgroup;

  std::size_t order() const { return cosets.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order() + b]; }
  std::size_t inv(std::size_t a) const;
  std::size_t order_of(std::size_t a) const;
  // Lifts each coset to its smallest parent index.
  std::size_t representative(std::size_t coset) const { return cosets[coset].front(); }
};

std::vector<IndexSet> conjugacy_classes(const FiniteMatrixGroup& g);
bool is_subgroup(const FiniteMatrixGroup& g, const IndexSet& h);
bool is_normal(const FiniteMatrixGroup& g, const IndexSet& h);
QuotientGroup normal_and_quotient(const FiniteMatrixGroup& g, const IndexSet& h);
IndexSet generated_subgroup(const FiniteMatrixGroup& g, const IndexSet& gens);
// All subgroups, sorted by (order, indices).
std::vector<IndexSet> all_subgroups(const FiniteMatrixGroup& g);
// Greedy generating set: repeatedly adds the smallest index not yet generated.
IndexSet generating_set(const FiniteMatrixGroup& g, const IndexSet& h);
IndexSet generating_set(const QuotientGroup& k);
IndexSet centralizer(const FiniteMatrixGroup& g, std::size_t a);

// A rational point, or a subspace given by a basis (queried at a generic point).
struct Locus {
  std::optional<Vector<Rational>> point;
  std::vector<Vector<Rational>> subspace_basis;

  static Locus at_point(Vector<Rational> p) { return Locus{std::move(p), {}}; }
  static Locus generic_point_of(std::vector<Vector<Rational>> basis) { return Locus{std::nullopt, std::move(basis)}; }
};

IndexSet stabilizer(const FiniteMatrixGroup& g, const Locus& locus);

// The subgroup h as a group in its own right, with a map back to parent indices.
struct Subgroup {
  FiniteMatrixGroup group;
  std::vector<std::size_t> parent_index;
};

Subgroup subgroup(const FiniteMatrixGroup& g, const IndexSet& h);
// h restricted to the complex coordinates other than `line`; each element must preserve the splitting.
Subgroup restricted_subgroup(const FiniteMatrixGroup& g, const IndexSet& h, std::size_t line);

}  // namespace cydesing
