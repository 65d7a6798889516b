#pragma once

// Spans u <- W -> v in Fin_{Epi_{d,r}} between connected feet, their
// isomorphism classes and their composition through good-subset pullbacks.

#include <map>
#include <utility>
#include <vector>

#include "gwb/epi_cat.hpp"
#include "gwb/fin_coprod.hpp"

namespace gwb::span {

/// A span whose apex may be a formal coproduct; legs are given per apex component.
struct Span {
  epi::SliceObject left_foot;
  epi::SliceObject right_foot;
  coprod::FormalCoproduct apex;
  std::vector<finset::FinMap> left_legs;
  std::vector<finset::FinMap> right_legs;
};

/// Validates legs: surjective, sized to their component, commuting over [r].
void validate(const Span& s);

Span make_connected(const epi::SliceObject& left_foot, const epi::SliceObject& apex, const epi::SliceObject& right_foot,
                    const finset::FinMap& left_leg, const finset::FinMap& right_leg);

Span identity_span(const epi::SliceObject& u);

/// Canonical key of a connected span: its feet and the sorted multiset of
/// (left(x), right(x)) over apex elements x. This is the lexicographically
/// least (left values, right values) encoding over all apex relabelings.
struct SpanKey {
  Tuple left_foot;
  Tuple right_foot;
  std::vector<std::pair<int, int>> pairs;

  int apex_size() const { return static_cast<int>(pairs.size()); }
  /// The connected span with apex elements listed in key order.
  Span to_span() const;

  friend auto operator<=>(const SpanKey&, const SpanKey&) = default;
  friend bool operator==(const SpanKey&, const SpanKey&) = default;
};

SpanKey connected_key(const epi::SliceObject& left_foot, const finset::FinMap& left_leg,
                      const epi::SliceObject& right_foot, const finset::FinMap& right_leg);

/// Sorted multiset of connected keys, one per apex component.
using SpanIsoClass = std::vector<SpanKey>;

SpanIsoClass canonicalize(const Span& s);

/// Formal nonnegative combination of connected span classes.
using SpanCombination = std::map<SpanKey, Integer>;

/// s2 after s1, for s2 = (v <- W -> u) and s1 = (u <- V -> t): the pullback of
/// W -> u <- V decomposed into Epi_d-good subsets, each giving v <- U -> t.
SpanCombination compose(const Span& s2, const Span& s1, int d);

}  // namespace gwb::span
