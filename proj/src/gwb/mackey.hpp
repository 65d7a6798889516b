#pragma once

// Mackey functors on Epi_{d,r} valued in free abelian groups: a rank per
// basis object and, for every morphism f: u -> v of the skeleton, a
// restriction R_f: M(v) -> M(u) and a transfer T_f: M(u) -> M(v).
//
// Matrices act on column vectors: R_f is rank(u) x rank(v), T_f is
// rank(v) x rank(u), so R_{g.f} = R_f R_g and T_{g.f} = T_g T_f.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwb/burnside.hpp"
#include "gwb/epi_cat.hpp"
#include "gwb/linalg.hpp"
#include "gwb/span_cat.hpp"

namespace gwb::mackey {

using linalg::IntMatrix;

/// Basis objects of Epi_{d,r} with every hom set in lexicographic order.
class Skeleton {
 public:
  Skeleton(int d, int r);

  int d() const { return d_; }
  int r() const { return r_; }
  const std::vector<epi::SliceObject>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  std::size_t index_of(const Tuple& fibers) const;
  std::size_t index_of(const epi::SliceObject& u) const { return index_of(u.fibers()); }

  const std::vector<finset::FinMap>& homs(std::size_t u, std::size_t v) const { return homs_[u * size() + v]; }
  std::size_t morphism_index(std::size_t u, std::size_t v, const finset::FinMap& f) const;
  std::size_t identity_index(std::size_t u) const;

 private:
  int d_;
  int r_;
  std::vector<epi::SliceObject> objects_;
  std::vector<std::vector<finset::FinMap>> homs_;
};

class MackeyData {
 public:
  /// All matrices start at zero with the shapes dictated by `ranks`.
  MackeyData(int d, int r, std::vector<int> ranks);

  const Skeleton& skeleton() const { return *skeleton_; }
  int d() const { return skeleton_->d(); }
  int r() const { return skeleton_->r(); }
  int rank(std::size_t u) const { return ranks_[u]; }
  const std::vector<int>& ranks() const { return ranks_; }

  IntMatrix& restriction(std::size_t u, std::size_t v, std::size_t f) { return restrictions_[u * n() + v].at(f); }
  const IntMatrix& restriction(std::size_t u, std::size_t v, std::size_t f) const {
    return restrictions_[u * n() + v].at(f);
  }
  IntMatrix& transfer(std::size_t u, std::size_t v, std::size_t f) { return transfers_[u * n() + v].at(f); }
  const IntMatrix& transfer(std::size_t u, std::size_t v, std::size_t f) const { return transfers_[u * n() + v].at(f); }

  /// Optional names for the basis vectors of each value, e.g. span classes.
  std::vector<std::vector<std::string>> labels;

  /// Throws InvalidInput when some matrix does not have its required shape.
  void validate_shapes() const;

  friend bool operator==(const MackeyData& a, const MackeyData& b);

 private:
  std::size_t n() const { return skeleton_->size(); }

  std::shared_ptr<const Skeleton> skeleton_;
  std::vector<int> ranks_;
  std::vector<std::vector<IntMatrix>> restrictions_;
  std::vector<std::vector<IntMatrix>> transfers_;
};

struct CospanFailure {
  Tuple a, b, e;
  std::size_t f_index = 0;  // f: A -> E
  std::size_t g_index = 0;  // g: B -> E
  IntMatrix lhs;            // R_f T_g
  IntMatrix rhs;            // sum over good U of T_{g_U} R_{f_U}
};

struct AxiomReport {
  bool pass = true;
  std::size_t identities_checked = 0;
  std::size_t compositions_checked = 0;
  std::size_t cospans_checked = 0;
  std::string failure;
  std::optional<CospanFailure> cospan;
};

/// Identity and composition laws for R and T, then the double-coset identity
/// R_f T_g = sum_U T_{g_U} R_{f_U} for every cospan A ->> E <<- B of basis
/// objects, U running over Epi_d-good subsets in canonical order.
AxiomReport check_axioms(const MackeyData& m);

/// M(u) = free abelian group on span classes u <- W -> v with W connected.
/// Restriction pulls back the left leg; transfer postcomposes it.
MackeyData representable(int d, int r, const Tuple& v);

/// The span classes indexing the basis of representable(d, r, v) at each object.
std::vector<std::vector<span::SpanKey>> representable_basis(int d, int r, const Tuple& v);

/// A sieve of basis objects: closed under passing to sources of morphisms.
class Family {
 public:
  /// Objects of total size > b.
  static Family above(const Skeleton& s, int b);
  /// Explicit set; throws InvalidInput unless it is a sieve.
  static Family from_objects(const Skeleton& s, const std::vector<Tuple>& members);

  bool contains(std::size_t u) const { return members_[u]; }
  const std::vector<bool>& members() const { return members_; }

 private:
  explicit Family(std::vector<bool> m) : members_(std::move(m)) {}
  std::vector<bool> members_;
};

/// Mackey functor on Epi_{b,r}: at u (|u| <= b) the sublattice of M(u) killed
/// by every restriction from an object of size > b, with the induced maps.
/// These sections vanish on the family, so the level-b double-coset identity holds.
MackeyData restrict_to_cosieve(const MackeyData& m, int b);

/// Plain restriction of values and matrices to objects of size <= b. Not in
/// general a Mackey functor at level b: larger good subsets are dropped.
MackeyData restrict_index(const MackeyData& m, int b);

/// Objects where M has rank zero.
std::vector<Tuple> vanishing_locus(const MackeyData& m);

bool vanishes_on(const MackeyData& m, const Family& family);

/// End of the representable at the final object, multiplied through its
/// transfer and restriction matrices. Throws ConsistencyError if the result
/// differs from BurnsideRing::build(d, r).
burnside::BurnsideRing endomorphism_ring_of_unit(int d, int r);

}  // namespace gwb::mackey
