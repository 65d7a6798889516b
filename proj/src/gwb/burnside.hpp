#pragma once

// Goodwillie-Burnside rings A(d, r), their marks and the augmentation ideal.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwb/epi_cat.hpp"
#include "gwb/linalg.hpp"

namespace gwb::burnside {

/// Integer combination of basis classes of A(d, r).
struct Element {
  std::vector<Integer> coefficients;

  friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Integer& s, const Element& a);

/// Free abelian group on iso classes of Epi_{d,r}; the product of u and v is
/// the sum of the Epi_d-good subsets of u x_[r] v, sorted by iso class.
class BurnsideRing {
 public:
  /// Structure constants by good-subset enumeration. Ring axioms are checked
  /// before returning; a failure throws ConsistencyError.
  static BurnsideRing build(int d, int r);

  /// Wraps a table computed elsewhere (index (u * n + v) * n + w), checking axioms.
  static BurnsideRing from_table(int d, int r, std::vector<std::int64_t> table);

  int d() const { return d_; }
  int r() const { return r_; }
  const std::vector<epi::SliceObject>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t index_of(const Tuple& fibers) const;

  /// c^w_{uv}: multiplicity of w in u . v.
  std::int64_t constant(std::size_t u, std::size_t v, std::size_t w) const {
    return table_[(u * rank() + v) * rank() + w];
  }
  const std::vector<std::int64_t>& table() const { return table_; }

  Element zero() const;
  Element unit() const;
  Element basis_element(std::size_t i) const;
  Element multiply(const Element& x, const Element& y) const;

  struct AxiomReport {
    bool pass = true;
    std::string failure;
  };
  /// Unit, commutativity, associativity on all basis triples, and for nonzero
  /// constants the fiberwise window max(u_i, v_i) <= w_i <= u_i v_i with |w| <= d.
  AxiomReport check_axioms() const;

 private:
  BurnsideRing(int d, int r, std::vector<std::int64_t> table);

  int d_;
  int r_;
  std::vector<epi::SliceObject> basis_;
  std::vector<std::int64_t> table_;
};

/// Phi^u(x) = sum_v x_v |Hom(u, v)|.
Integer mark(const epi::SliceObject& u, const Element& x, const std::vector<epi::SliceObject>& basis);

/// Entry (u, v) = |Hom(u, v)| over the basis of A(d, r).
linalg::BigMatrix marks_matrix(int d, int r);

/// Generators [i] - |Epi(d, i)| [1] of I(d) = ker Phi^[d], for i = 2..d.
std::vector<Element> augmentation_ideal(int d);

/// A subgroup of Z, by its nonnegative generator.
struct IdealImage {
  Integer generator = 0;
};

bool is_prime(long n);

/// Generator of (p, Phi^[k](I(d))). The ideal generators are closed under
/// multiplication by basis elements before their marks are taken.
IdealImage ideal_image(const BurnsideRing& ring, int k, std::optional<long> p, bool validate_prime = true);
IdealImage ideal_image(int d, int k, std::optional<long> p, bool validate_prime = true);

struct SegalRow {
  int k = 0;
  Integer raw_generator;  // Phi^[k](I(p)) alone
  Integer generator;      // (p, Phi^[k](I(p)))
  Integer expected;
  bool pass = false;
};

struct DivisibilityWitness {
  int i = 0;
  Integer surjections;
  bool divisible = false;
};

struct SegalReport {
  long p = 0;
  std::vector<SegalRow> rows;
  std::vector<DivisibilityWitness> witnesses;
  bool pass = false;
};

/// Expected: p for k = 1, 1 for 1 < k < p, and at k = p a zero raw image.
SegalReport segal_report(long p);

}  // namespace gwb::burnside
