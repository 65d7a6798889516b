#pragma once

// Standard finite sets [n] = {1,...,n} and the maps between them.

#include <compare>
#include <vector>

#include "gwb/common.hpp"

namespace gwb::finset {

/// A function [source_size] -> [target_size], stored as its 1-based value sequence.
class FinMap {
 public:
  FinMap(int source_size, int target_size, std::vector<int> values);

  static FinMap identity(int n);
  /// The unique map [n] -> [1].
  static FinMap collapse(int n);

  int source_size() const { return source_size_; }
  int target_size() const { return target_size_; }
  const std::vector<int>& values() const { return values_; }

  int operator()(int x) const { return values_[static_cast<std::size_t>(x - 1)]; }

  bool is_surjective() const;
  bool is_bijective() const;

  friend auto operator<=>(const FinMap&, const FinMap&) = default;
  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  int source_size_;
  int target_size_;
  std::vector<int> values_;
};

/// g after f.
FinMap compose(const FinMap& g, const FinMap& f);

/// All surjections [k] ->> [i], lexicographic in their value sequences.
std::vector<FinMap> enumerate_surjections(int k, int i);

/// |Epi(k, i)| by inclusion-exclusion.
Integer surjection_count(int k, int i);

Integer binomial(int n, int k);
Integer factorial(int n);

/// Writes a surjection [k] ->> [l] with l < k as a chain of surjections each
/// identifying exactly two elements; returned in application order, so the
/// composite of the chain (last after first) equals f. For a bijection the
/// chain is {f}.
std::vector<FinMap> elementary_factorization(const FinMap& f);

}  // namespace gwb::finset
