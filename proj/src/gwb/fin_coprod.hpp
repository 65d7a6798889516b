#pragma once

// Finite-coproduct completion Fin_{Epi_{d,r}} and its pullbacks.
//
// A pullback of connected objects A ->> E <<- B is the coproduct of the good
// subsets U of the set-theoretic fiber product A x_E B: those whose
// projections to A and to B are both surjective. In Fin_{Epi_d} only good
// subsets with |U| <= d survive.

#include <cstddef>
#include <utility>
#include <vector>

#include "gwb/epi_cat.hpp"
#include "gwb/finset.hpp"

namespace gwb::coprod {

using Element = std::pair<int, int>;

/// {(a, b) : f(a) = g(b)}, sorted.
std::vector<Element> fiber_product_set(const finset::FinMap& f, const finset::FinMap& g);

struct GoodSubset {
  std::vector<Element> elements;  // sorted; element x of [|U|] is elements[x-1]
  finset::FinMap to_a;            // [|U|] ->> A
  finset::FinMap to_b;            // [|U|] ->> B

  int size() const { return static_cast<int>(elements.size()); }
};

/// All good subsets with |U| <= d, ordered by size and then lexicographically
/// by their element positions in the sorted fiber product.
std::vector<GoodSubset> good_subsets(const finset::FinMap& f, const finset::FinMap& g, int d);

/// Good subsets of a cospan in Epi_{d,r}; `object` is U with the slice
/// structure inherited from E, already in canonical form.
struct SliceGoodSubset {
  GoodSubset subset;
  epi::SliceObject object;
};
std::vector<SliceGoodSubset> slice_good_subsets(const epi::SliceMorphism& f, const epi::SliceMorphism& g, int d);

/// A formal coproduct of connected objects; empty is allowed.
struct FormalCoproduct {
  std::vector<epi::SliceObject> components;

  /// Components sorted in basis order: the multiset key.
  std::vector<epi::SliceObject> sorted() const;
};

/// Componentwise map X -> Y: component i of X goes to component target[i] of Y via maps[i].
struct CoproductMap {
  FormalCoproduct source;
  FormalCoproduct target;
  std::vector<std::size_t> component_target;
  std::vector<finset::FinMap> maps;
};

void validate(const CoproductMap& m);

struct Pullback {
  FormalCoproduct apex;
  CoproductMap to_x;  // the leg over f's source
  CoproductMap to_y;  // the leg over g's source
};

/// Pullback of f: X -> E and g: Y -> E in Fin_{Epi_{d,r}}, computed over each
/// component of E and each pair of components of X and Y.
Pullback pullback(const CoproductMap& f, const CoproductMap& g, int d);

struct UniversalPropertyReport {
  bool pass = true;
  std::size_t test_objects = 0;
  std::vector<int> failing_object;
  Integer lhs = 0;  // |Hom(T, P)| at the failing object
  Integer rhs = 0;  // |Hom(T, X) x_{Hom(T, E)} Hom(T, Y)|
};

/// For every connected T in Epi_{d,r}: |Hom(T, P)| equals the number of pairs
/// (a, b) in Hom(T, X) x Hom(T, Y) with f a = g b. The right side is counted
/// by brute-force enumeration.
UniversalPropertyReport verify_universal_property(const CoproductMap& f, const CoproductMap& g, int d);

/// Wraps a morphism of connected objects as a map of one-component coproducts.
CoproductMap connected(const epi::SliceMorphism& m);

}  // namespace gwb::coprod
