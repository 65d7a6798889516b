#pragma once

// The slice categories Epi_{d,r} = (Epi_d)/[r] and their skeleta.
//
// Objects are surjections [k] ->> [r]. Every object is isomorphic to exactly
// one canonical object whose fibers are consecutive intervals, so an object
// is stored as its fiber-size tuple (k_1, ..., k_r). Epi_d itself is the
// case r = 1.

#include <compare>
#include <string>
#include <vector>

#include "gwb/common.hpp"
#include "gwb/finset.hpp"

namespace gwb::epi {

class SliceObject {
 public:
  explicit SliceObject(Tuple fibers);

  /// Canonical object isomorphic to an arbitrary surjection [k] ->> [r].
  static SliceObject from_structure_map(const finset::FinMap& structure_map);
  /// The final object (1, ..., 1) of Epi_{d,r}.
  static SliceObject final_object(int r);

  const Tuple& fibers() const { return fibers_; }
  int r() const { return static_cast<int>(fibers_.size()); }
  int size() const { return size_; }

  finset::FinMap structure_map() const;
  /// The fiber (1-based) containing element x of [size()].
  int fiber_of(int x) const;
  /// First element (1-based) of fiber i.
  int fiber_start(int i) const;

  std::string to_string() const { return gwb::to_string(fibers_); }

  // Global basis order: total size, then lexicographic tuple.
  friend std::strong_ordering operator<=>(const SliceObject& a, const SliceObject& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.fibers_ <=> b.fibers_;
  }
  friend bool operator==(const SliceObject& a, const SliceObject& b) { return a.fibers_ == b.fibers_; }

 private:
  Tuple fibers_;
  int size_;
};

struct SliceMorphism {
  SliceObject source;
  SliceObject target;
  finset::FinMap map;

  bool is_iso() const { return map.is_bijective(); }
};

/// Validates that `map` is a surjection commuting with the structure maps.
SliceMorphism make_morphism(const SliceObject& source, const SliceObject& target, const finset::FinMap& map);

SliceMorphism compose(const SliceMorphism& g, const SliceMorphism& f);

/// One canonical object per iso class with r <= sum <= d, in basis order.
std::vector<SliceObject> enumerate_objects(int d, int r);

/// All morphisms u -> v over [r], lexicographic in their value sequences.
std::vector<finset::FinMap> hom_set(const SliceObject& u, const SliceObject& v);

/// |Hom(u, v)| = prod_i |Epi(u_i, v_i)|.
Integer hom_count(const SliceObject& u, const SliceObject& v);

struct OrbitalityReport {
  bool pass = true;
  std::size_t iso_classes = 0;
  std::size_t endomorphisms_checked = 0;
  std::size_t retract_pairs_checked = 0;
  std::string counterexample;
};

/// Checks that every endomorphism is invertible, that r.f iso forces f and r
/// iso, and that there are finitely many iso classes.
OrbitalityReport check_atomic_orbital(int d, int r);

}  // namespace gwb::epi
