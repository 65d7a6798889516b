#include "gwb/burnside.hpp"

#include <algorithm>
#include <sstream>

#include "gwb/fin_coprod.hpp"
#include "gwb/finset.hpp"

namespace gwb::burnside {

using epi::SliceObject;

Element operator+(const Element& a, const Element& b) {
  require(a.coefficients.size() == b.coefficients.size(), "element sizes differ");
  Element out = a;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
  return out;
}

Element operator-(const Element& a, const Element& b) {
  require(a.coefficients.size() == b.coefficients.size(), "element sizes differ");
  Element out = a;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] -= b.coefficients[i];
  return out;
}

Element operator*(const Integer& s, const Element& a) {
  Element out = a;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

BurnsideRing::BurnsideRing(int d, int r, std::vector<std::int64_t> table)
    : d_(d), r_(r), basis_(epi::enumerate_objects(d, r)), table_(std::move(table)) {
  require(table_.size() == basis_.size() * basis_.size() * basis_.size(), "structure-constant table has wrong size");
}

BurnsideRing BurnsideRing::build(int d, int r) {
  const auto basis = epi::enumerate_objects(d, r);
  const std::size_t n = basis.size();
  std::vector<std::int64_t> table(n * n * n, 0);
  const SliceObject final_object = SliceObject::final_object(r);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const epi::SliceMorphism fu{basis[u], final_object, basis[u].structure_map()};
      const epi::SliceMorphism fv{basis[v], final_object, basis[v].structure_map()};
      for (const auto& good : coprod::slice_good_subsets(fu, fv, d)) {
        const auto w = static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), good.object) - basis.begin());
        if (w == n || basis[w] != good.object) throw ConsistencyError("good subset outside the basis");
        ++table[(u * n + v) * n + w];
      }
    }
  BurnsideRing ring(d, r, std::move(table));
  const auto report = ring.check_axioms();
  if (!report.pass) throw ConsistencyError("A(" + std::to_string(d) + "," + std::to_string(r) + "): " + report.failure);
  return ring;
}

BurnsideRing BurnsideRing::from_table(int d, int r, std::vector<std::int64_t> table) {
  BurnsideRing ring(d, r, std::move(table));
  const auto report = ring.check_axioms();
  if (!report.pass) throw ConsistencyError("A(" + std::to_string(d) + "," + std::to_string(r) + "): " + report.failure);
  return ring;
}

std::size_t BurnsideRing::index_of(const Tuple& fibers) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].fibers() == fibers) return i;
  throw InvalidInput("tuple " + to_string(fibers) + " is not a basis object of A(" + std::to_string(d_) + "," +
                     std::to_string(r_) + ")");
}

Element BurnsideRing::zero() const { return Element{std::vector<Integer>(rank(), 0)}; }

Element BurnsideRing::unit() const { return basis_element(0); }

Element BurnsideRing::basis_element(std::size_t i) const {
  Element e = zero();
  e.coefficients.at(i) = 1;
  return e;
}

Element BurnsideRing::multiply(const Element& x, const Element& y) const {
  require(x.coefficients.size() == rank() && y.coefficients.size() == rank(), "element not in this ring");
  Element out = zero();
  const std::size_t n = rank();
  for (std::size_t u = 0; u < n; ++u) {
    if (x.coefficients[u] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (y.coefficients[v] == 0) continue;
      const Integer xy = x.coefficients[u] * y.coefficients[v];
      for (std::size_t w = 0; w < n; ++w) {
        const auto c = constant(u, v, w);
        if (c) out.coefficients[w] += xy * static_cast<long>(c);
      }
    }
  }
  return out;
}

BurnsideRing::AxiomReport BurnsideRing::check_axioms() const {
  AxiomReport report;
  const std::size_t n = rank();
  auto fail = [&](const std::string& why) {
    if (report.pass) report.failure = why;
    report.pass = false;
  };
  auto name = [&](std::size_t i) { return basis_[i].to_string(); };
  if (basis_.front() != SliceObject::final_object(r_)) fail("first basis element is not the final object");
  for (std::size_t u = 0; u < n && report.pass; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      const std::int64_t expect = u == w ? 1 : 0;
      if (constant(0, u, w) != expect || constant(u, 0, w) != expect) fail("unit law fails at " + name(u));
    }
  for (std::size_t u = 0; u < n && report.pass; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const auto c = constant(u, v, w);
        if (c != constant(v, u, w)) fail("not commutative at " + name(u) + "." + name(v));
        // Fiberwise a good subset of u_i x v_i has between max and product many elements.
        bool inside = basis_[w].size() <= d_;
        for (int i = 0; i < r_; ++i) {
          const int a = basis_[u].fibers()[i], b = basis_[v].fibers()[i], x = basis_[w].fibers()[i];
          inside = inside && x >= std::max(a, b) && x <= a * b;
        }
        if (c != 0 && !inside)
          fail("constant outside the size window at " + name(u) + "." + name(v) + " -> " + name(w));
        if (c < 0) fail("negative structure constant");
      }
  // (uv)t = u(vt), coefficient by coefficient.
  for (std::size_t u = 0; u < n && report.pass; ++u)
    for (std::size_t v = 0; v < n && report.pass; ++v)
      for (std::size_t t = 0; t < n && report.pass; ++t)
        for (std::size_t w = 0; w < n; ++w) {
          std::int64_t left = 0, right = 0;
          for (std::size_t x = 0; x < n; ++x) {
            linalg::mul_add(left, constant(u, v, x), constant(x, t, w));
            linalg::mul_add(right, constant(v, t, x), constant(u, x, w));
          }
          if (left != right) {
            fail("not associative at " + name(u) + "," + name(v) + "," + name(t));
            break;
          }
        }
  return report;
}

Integer mark(const SliceObject& u, const Element& x, const std::vector<SliceObject>& basis) {
  require(x.coefficients.size() == basis.size(), "element does not match basis");
  Integer out = 0;
  for (std::size_t v = 0; v < basis.size(); ++v)
    if (x.coefficients[v] != 0) out += x.coefficients[v] * epi::hom_count(u, basis[v]);
  return out;
}

linalg::BigMatrix marks_matrix(int d, int r) {
  const auto basis = epi::enumerate_objects(d, r);
  linalg::BigMatrix m(basis.size(), basis.size());
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t v = 0; v < basis.size(); ++v) m(u, v) = epi::hom_count(basis[u], basis[v]);
  return m;
}

std::vector<Element> augmentation_ideal(int d) {
  require(d >= 1, "augmentation_ideal: d must be positive");
  std::vector<Element> out;
  for (int i = 2; i <= d; ++i) {
    Element g{std::vector<Integer>(static_cast<std::size_t>(d), 0)};
    g.coefficients[static_cast<std::size_t>(i - 1)] = 1;
    g.coefficients[0] = -finset::surjection_count(d, i);
    out.push_back(std::move(g));
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

IdealImage ideal_image(const BurnsideRing& ring, int k, std::optional<long> p, bool validate_prime) {
  require(ring.r() == 1, "ideal_image: needs the unsliced ring A(d)");
  const int d = ring.d();
  require(k >= 1 && k <= d, "ideal_image: k must lie in 1..d");
  if (p) {
    require(*p >= 1, "ideal_image: p must be positive");
    if (validate_prime && !is_prime(*p)) throw InvalidInput("p = " + std::to_string(*p) + " is not prime");
  }
  const SliceObject marker({k});
  Integer g = p ? Integer(*p) : Integer(0);
  for (const auto& gen : augmentation_ideal(d)) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(mark(marker, gen, ring.basis())).get_mpz_t());
    for (std::size_t b = 0; b < ring.rank(); ++b) {
      const Integer m = mark(marker, ring.multiply(gen, ring.basis_element(b)), ring.basis());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
  }
  return IdealImage{g};
}

IdealImage ideal_image(int d, int k, std::optional<long> p, bool validate_prime) {
  if (p && validate_prime && !is_prime(*p)) throw InvalidInput("p = " + std::to_string(*p) + " is not prime");
  return ideal_image(BurnsideRing::build(d, 1), k, p, validate_prime);
}

SegalReport segal_report(long p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  const int d = static_cast<int>(p);
  const auto ring = BurnsideRing::build(d, 1);
  SegalReport report;
  report.p = p;
  report.pass = true;
  for (int k = 1; k <= d; ++k) {
    SegalRow row;
    row.k = k;
    row.raw_generator = ideal_image(ring, k, std::nullopt).generator;
    row.generator = ideal_image(ring, k, p).generator;
    if (k == d) {
      row.expected = p;
      row.pass = row.raw_generator == 0 && row.generator == p;
    } else {
      row.expected = k == 1 ? Integer(p) : Integer(1);
      row.pass = row.generator == row.expected;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  for (int i = 2; i <= d; ++i) {
    DivisibilityWitness w{i, finset::surjection_count(d, i), false};
    w.divisible = mpz_divisible_ui_p(w.surjections.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    report.pass = report.pass && w.divisible;
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace gwb::burnside
