#pragma once

// Vector-space diagrams on subdivided cubes, right Kan extension from a
// threshold sub-poset, and the degree arithmetic of cross-effects.
//
// Both supported shapes are boxes of internal coordinates c with
// 0 <= c_i <= extent_i and arrows c -> c - e_i, so the origin is terminal and
// the threshold sub-poset S is closed under going down.
//
//   truncated(d, r): user tuple k with 1 <= k_i <= m = d - r + 1, c = k - 1,
//                    arrows point from larger to smaller tuples, S = {sum k <= d}.
//   filtered(K, n):  user tuple a with 0 <= a_i <= K_i, c = K - a, arrows
//                    a -> a + e_i, S = B_n = {sum a >= n}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwb/common.hpp"
#include "gwb/linalg.hpp"

namespace gwb::cube {

using linalg::QMatrix;

class Shape {
 public:
  enum class Kind { truncated, filtered };

  static Shape truncated(int d, int r);
  static Shape filtered(Tuple bounds, int n);

  Kind kind() const { return kind_; }
  int d() const { return d_; }
  int r() const { return static_cast<int>(extents_.size()); }
  const Tuple& bounds() const { return bounds_; }
  int n() const { return n_; }
  const Tuple& extents() const { return extents_; }

  std::size_t size() const { return size_; }
  /// Internal coordinates of element `index`; elements are in mixed-radix order.
  Tuple element(std::size_t index) const;
  std::size_t index_of(const Tuple& internal) const;

  Tuple to_internal(const Tuple& user) const;
  Tuple to_user(const Tuple& internal) const;
  bool in_sub(const Tuple& internal) const;
  bool in_sub(std::size_t index) const { return in_sub(element(index)); }

  std::string describe() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  Shape(Kind kind, int d, Tuple bounds, int n, Tuple extents);

  Kind kind_;
  int d_ = 0;
  Tuple bounds_;
  int n_ = 0;
  Tuple extents_;
  std::size_t size_ = 1;
};

/// A functor to finite-dimensional rational vector spaces, on the full
/// poset or on the sub-poset S only. maps[e][i] is F(c) -> F(c - e_i).
class Diagram {
 public:
  Diagram(Shape shape, bool on_sub_only);

  const Shape& shape() const { return shape_; }
  bool on_sub_only() const { return sub_only_; }
  bool has(std::size_t e) const { return !sub_only_ || shape_.in_sub(e); }

  int dim(std::size_t e) const { return dims_[e]; }
  void set_dim(std::size_t e, int dim);
  /// Map along direction i (0-based); requires c_i > 0 and both ends present.
  const QMatrix& map(std::size_t e, int i) const;
  void set_map(std::size_t e, int i, QMatrix m);

  /// F(c) -> F(s) for s <= c, composed along any monotone path.
  QMatrix composite(std::size_t from, std::size_t to) const;

  /// Shapes of all maps, then commutativity of every unit square.
  void validate() const;

  /// The same values on S only.
  Diagram restrict_to_sub() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Shape shape_;
  bool sub_only_;
  std::vector<int> dims_;
  std::vector<std::vector<QMatrix>> maps_;
};

struct RkeReport {
  bool pass = true;
  std::optional<Tuple> failing;  // user coordinates of the first failing unit cube
};

/// For each element a outside S the unit cube spanned at a by the directions
/// with room to move is a limit diagram.
RkeReport is_rke_from(const Diagram& f);

/// Whether the comparison from F to pointwise_rke(F restricted to S) is an
/// isomorphism: at each a outside S the cone from F(a) to the sub-poset below
/// a is injective and the dimensions agree.
bool matches_extension(const Diagram& f);

/// The limit of F restricted to S intersect {s <= a}, computed at each a outside S.
Diagram pointwise_rke(const Diagram& restricted);

struct Limit {
  int dimension = 0;
  /// Projections from the limit to each element of the indexing set, in element order.
  std::vector<std::size_t> elements;
  std::vector<QMatrix> projections;
};

/// Limit of F over S.
Limit truncated_limit(const Diagram& f);

/// Limit over the Hasse diagram of a down-closed set of elements.
Limit limit_over(const Diagram& f, const std::vector<std::size_t>& elements);

/// Seeded random commuting diagram on the full poset with dims <= max_dim.
/// When `extended` is set the result is pointwise_rke of a random diagram
/// restricted to S, then twisted by random unimodular base changes.
Diagram random_diagram(const Shape& shape, std::uint64_t seed, int max_dim = 4, bool extended = false);

// Degree arithmetic.

/// Smallest 1-based j with k_j <= l_j - 1, when sum l > d, sum k <= d and
/// 1 <= k_i <= d - r + 1; nothing when the hypothesis fails.
std::optional<int> degenerate_direction(int d, const Tuple& profile, const Tuple& excisiveness);

/// Position j -> d_{f(j)} - |f^{-1}(f(j))| + 1.
Tuple crosseffect_degrees(const Tuple& profile, const Tuple& f);

/// Position i -> sum over f^{-1}(i) of e_j.
Tuple diagonal_degrees(const Tuple& profile, const Tuple& f);

struct PigeonholeWitness {
  std::string claim;
  Tuple profile;
  Tuple fibers;
  Tuple result;
};

struct PigeonholeReport {
  int d = 0, r = 0, s = 0;
  bool pass = true;
  std::size_t crosseffect_cases = 0;
  std::size_t diagonal_cases = 0;
  std::size_t vanishing_cases = 0;
  std::size_t generator_cases = 0;
  std::string failure;
  std::vector<PigeonholeWitness> witnesses;
};

PigeonholeReport verify_pigeonhole(int d, int r, int s);

/// Compositions of n into exactly parts positive parts, lexicographic.
std::vector<Tuple> compositions(int n, int parts);

}  // namespace gwb::cube
