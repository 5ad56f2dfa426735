#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "workbench/report.hpp"
#include "workbench/types.hpp"

namespace workbench {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group on element indices 0..n-1. Counting measure, modular function 1.
//
// from_table() does not check the axioms; use verify_group() for that. Identity
// and inverses are located by search (first match), so an invalid table still
// yields an object whose defects verify_group() reports.
class FiniteGroup {
 public:
  static GroupPtr from_table(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  std::size_t identity() const { return e_; }
  double modular_function(std::size_t) const { return 1.0; }
  bool is_abelian() const;

  // Present for products of cyclic groups; element index is mixed radix with the
  // first factor most significant.
  const std::optional<std::vector<std::size_t>>& cyclic_decomposition() const { return cyclic_; }
  std::vector<std::size_t> coordinates(std::size_t x) const;

  // Present for groups built by direct_product(); element (g,h) has index g*|H|+h.
  bool is_product() const { return left_ != nullptr; }
  const GroupPtr& left_factor() const { return left_; }
  const GroupPtr& right_factor() const { return right_; }
  std::size_t pair(std::size_t g, std::size_t h) const;
  std::pair<std::size_t, std::size_t> split(std::size_t z) const;

 private:
  friend GroupPtr cyclic(std::size_t);
  friend GroupPtr direct_product(const GroupPtr&, const GroupPtr&);
  FiniteGroup() = default;
  void locate_identity_and_inverses();

  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inv_;
  std::size_t e_ = 0;
  std::optional<std::vector<std::size_t>> cyclic_;
  GroupPtr left_, right_;
};

GroupPtr cyclic(std::size_t n);
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
// Permutations of {0..n-1} in lexicographic order; index 0 is the identity.
// Product is composition (pq)(i) = p(q(i)).
GroupPtr symmetric_group(std::size_t n);
std::vector<std::size_t> permutation_of(std::size_t n, std::size_t index);

// Characters of a decomposed abelian group, labelled by tuples in the same
// mixed radix as the base. group is the character group (isomorphic copy).
struct DualGroup {
  GroupPtr base;
  GroupPtr group;
  std::size_t order() const { return group->order(); }
};

DualGroup dual(const GroupPtr& g);

// exp(2 pi i sum_k x_k xi_k / n_k)
Complex pairing(const FiniteGroup& g, std::size_t x, std::size_t xi);

Report verify_group(const FiniteGroup& g, double tol = kDefaultTolerance);

}  // namespace workbench
