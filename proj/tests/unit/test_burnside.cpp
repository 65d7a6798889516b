#include "doctest.h"
#include "oracles.hpp"

#include "gwb/burnside.hpp"

using namespace gwb;
using namespace gwb::burnside;

namespace {

Integer brute_mark(const Tuple& u, const Tuple& v) {
  Integer out = 1;
  for (std::size_t i = 0; i < u.size(); ++i) out *= static_cast<unsigned long>(oracle::surjections(u[i], v[i]).size());
  return out;
}

Element product(const BurnsideRing& ring, const Tuple& a, const Tuple& b) {
  return ring.multiply(ring.basis_element(ring.index_of(a)), ring.basis_element(ring.index_of(b)));
}

Element combination(const BurnsideRing& ring, std::initializer_list<std::pair<Tuple, long>> terms) {
  Element out = ring.zero();
  for (auto& [t, c] : terms) out.coefficients[ring.index_of(t)] += c;
  return out;
}

}  // namespace

TEST_CASE("small rings") {
  auto a2 = BurnsideRing::build(2, 1);
  CHECK(product(a2, {2}, {2}) == combination(a2, {{{2}, 2}}));
  auto a4 = BurnsideRing::build(4, 1);
  CHECK(product(a4, {2}, {2}) == combination(a4, {{{2}, 2}, {{3}, 4}, {{4}, 1}}));
  auto a32 = BurnsideRing::build(3, 2);
  CHECK(product(a32, {2, 1}, {2, 1}) == combination(a32, {{{2, 1}, 2}}));
  CHECK(product(a32, {1, 2}, {1, 2}) == combination(a32, {{{1, 2}, 2}}));
  CHECK(product(a32, {2, 1}, {1, 2}) == a32.zero());
  auto z = BurnsideRing::build(1, 1);
  CHECK(z.rank() == 1);
  CHECK(z.constant(0, 0, 0) == 1);
}

TEST_CASE("structure constants agree with the fiberwise count for d <= 6, r <= 3") {
  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) {
      auto ring = BurnsideRing::build(d, r);
      CHECK(ring.check_axioms().pass);
      const auto& basis = ring.basis();
      for (std::size_t u = 0; u < basis.size(); ++u)
        for (std::size_t v = 0; v < basis.size(); ++v)
          for (std::size_t w = 0; w < basis.size(); ++w)
            CHECK(Integer(static_cast<long>(ring.constant(u, v, w))) ==
                  oracle::structure_constant(basis[u].fibers(), basis[v].fibers(), basis[w].fibers(), d));
    }
}

TEST_CASE("unit, commutativity, associativity") {
  auto ring = BurnsideRing::build(5, 2);
  const auto n = ring.rank();
  for (std::size_t u = 0; u < n; ++u) {
    auto x = ring.basis_element(u);
    CHECK(ring.multiply(ring.unit(), x) == x);
    for (std::size_t v = 0; v < n; ++v) {
      auto y = ring.basis_element(v);
      CHECK(ring.multiply(x, y) == ring.multiply(y, x));
      for (std::size_t w = 0; w < n; ++w) {
        auto z = ring.basis_element(w);
        CHECK(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)));
      }
    }
  }
}

TEST_CASE("a corrupted table is rejected") {
  auto ring = BurnsideRing::build(3, 1);
  auto table = ring.table();
  table[(1 * 3 + 1) * 3 + 1] += 1;
  CHECK_THROWS_AS(BurnsideRing::from_table(3, 1, table), ConsistencyError);
  CHECK_NOTHROW(BurnsideRing::from_table(3, 1, ring.table()));
}

TEST_CASE("marks") {
  auto a4 = BurnsideRing::build(4, 1);
  const auto& basis = a4.basis();
  for (auto& u : basis) CHECK(mark(u, a4.unit(), basis) == 1);
  CHECK(mark(epi::SliceObject({3}), a4.basis_element(1), basis) == 6);
  CHECK(mark(epi::SliceObject({2}), a4.basis_element(1), basis) == 2);
  CHECK(mark(epi::SliceObject({4}), product(a4, {2}, {2}), basis) == 196);
}

TEST_CASE("marks are multiplicative for d <= 6, r <= 3") {
  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) {
      auto ring = BurnsideRing::build(d, r);
      const auto& basis = ring.basis();
      for (const auto& u : basis)
        for (std::size_t v = 0; v < basis.size(); ++v)
          for (std::size_t w = 0; w < basis.size(); ++w)
            CHECK(mark(u, ring.multiply(ring.basis_element(v), ring.basis_element(w)), basis) ==
                  brute_mark(u.fibers(), basis[v].fibers()) * brute_mark(u.fibers(), basis[w].fibers()));
    }
}

TEST_CASE("marks matrix") {
  auto m = marks_matrix(3, 1);
  linalg::BigMatrix want(3, 3);
  const long rows[3][3] = {{1, 0, 0}, {1, 2, 0}, {1, 6, 6}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) want(i, j) = rows[i][j];
  CHECK(m == want);
  CHECK(marks_matrix(1, 1) == linalg::BigMatrix::identity(1));
  auto m32 = marks_matrix(3, 2);
  CHECK(m32(0, 0) == 1);
  CHECK(m32(1, 1) == 2);
  CHECK(m32(2, 2) == 2);
}

TEST_CASE("marks matrix is triangular with factorial diagonal for d <= 6, r <= 3") {
  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) {
      auto m = marks_matrix(d, r);
      auto basis = epi::enumerate_objects(d, r);
      Integer det = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Integer diag = 1;
        for (int k : basis[i].fibers()) diag *= finset::factorial(k);
        CHECK(m(i, i) == diag);
        det *= m(i, i);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          CHECK(m(i, j) == brute_mark(basis[i].fibers(), basis[j].fibers()));
          if (j > i) CHECK(m(i, j) == 0);
          if (basis[i].size() < basis[j].size()) CHECK(m(i, j) == 0);
        }
      }
      CHECK(det != 0);
      CHECK(linalg::rank(linalg::to_rational(m)) == basis.size());
    }
}

TEST_CASE("truncation does not change marks") {
  for (int d = 1; d <= 5; ++d) {
    auto small = BurnsideRing::build(d, 1);
    auto big = BurnsideRing::build(d + 1, 1);
    for (int v = 1; v <= d; ++v)
      for (int w = 1; w <= d; ++w)
        for (int k = 1; k <= d; ++k) {
          epi::SliceObject u({k});
          CHECK(mark(u, product(small, {v}, {w}), small.basis()) == mark(u, product(big, {v}, {w}), big.basis()));
        }
  }
}

TEST_CASE("augmentation ideal") {
  auto a2 = BurnsideRing::build(2, 1);
  auto g2 = augmentation_ideal(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == combination(a2, {{{2}, 1}, {{1}, -2}}));
  auto a3 = BurnsideRing::build(3, 1);
  CHECK(augmentation_ideal(3) == std::vector<Element>{combination(a3, {{{2}, 1}, {{1}, -6}}),
                                                      combination(a3, {{{3}, 1}, {{1}, -6}})});
  CHECK(augmentation_ideal(1).empty());
}

TEST_CASE("the generators span the kernel of the top mark for d <= 6") {
  for (int d = 1; d <= 6; ++d) {
    auto ring = BurnsideRing::build(d, 1);
    auto gens = augmentation_ideal(d);
    epi::SliceObject top({d});
    for (auto& g : gens) CHECK(mark(top, g, ring.basis()) == 0);
    linalg::BigMatrix row(1, static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) row(0, static_cast<std::size_t>(i - 1)) = finset::surjection_count(d, i);
    auto kernel = linalg::integer_kernel(row);
    CHECK(kernel.cols() == static_cast<std::size_t>(d - 1));
    // each kernel vector x equals sum_{i >= 2} x_i g_i exactly
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
      std::vector<Integer> rebuilt(static_cast<std::size_t>(d), 0);
      for (int i = 2; i <= d; ++i)
        for (int j = 0; j < d; ++j)
          rebuilt[static_cast<std::size_t>(j)] +=
              kernel(static_cast<std::size_t>(i - 1), c) * gens[static_cast<std::size_t>(i - 2)].coefficients[static_cast<std::size_t>(j)];
      for (int j = 0; j < d; ++j) CHECK(rebuilt[static_cast<std::size_t>(j)] == kernel(static_cast<std::size_t>(j), c));
    }
  }
}

TEST_CASE("ideal images") {
  CHECK(ideal_image(3, 1, 3L).generator == 3);
  CHECK(ideal_image(3, 2, 3L).generator == 1);
  CHECK(ideal_image(3, 3, std::nullopt).generator == 0);
  CHECK(ideal_image(2, 1, std::nullopt).generator == 2);
  CHECK_THROWS_AS(ideal_image(4, 1, 4L), InvalidInput);
  CHECK(ideal_image(4, 1, 4L, false).generator == 2);
  CHECK_THROWS_AS(ideal_image(3, 4, 3L), InvalidInput);
  CHECK_THROWS_AS(ideal_image(BurnsideRing::build(3, 2), 1, 3L), InvalidInput);
}

TEST_CASE("segal reports") {
  auto two = segal_report(2);
  CHECK(two.pass);
  CHECK(two.rows[0].generator == 2);
  CHECK(two.rows[1].raw_generator == 0);

  auto three = segal_report(3);
  CHECK(three.pass);
  REQUIRE(three.rows.size() == 3);
  CHECK(three.rows[0].generator == 3);
  CHECK(three.rows[1].generator == 1);
  CHECK(three.rows[2].raw_generator == 0);

  auto five = segal_report(5);
  CHECK(five.pass);
  CHECK(five.rows[1].generator == 1);
  // gcd of 5 with Surj(2, i) - Surj(5, i)
  Integer g = 5;
  for (int i = 2; i <= 5; ++i) {
    Integer x = finset::surjection_count(2, i) - finset::surjection_count(5, i);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  CHECK(five.rows[1].generator == g);
  for (auto& w : five.witnesses) CHECK(w.divisible);

  for (long p : {2L, 3L, 5L, 7L}) {
    auto rep = segal_report(p);
    CHECK(rep.pass);
    for (auto& row : rep.rows) {
      if (row.k == 1) CHECK(row.generator == p);
      if (row.k > 1 && row.k < p) CHECK(row.generator == 1);
      if (row.k == p) CHECK(row.raw_generator == 0);
    }
  }
  CHECK_THROWS_AS(segal_report(6), InvalidInput);
}
