#include "doctest.h"
#include "oracles.hpp"

#include "gwb/epi_cat.hpp"

using namespace gwb;
using namespace gwb::epi;

namespace {

std::vector<Tuple> tuples(const std::vector<SliceObject>& objs) {
  std::vector<Tuple> out;
  for (const auto& o : objs) out.push_back(o.fibers());
  return out;
}

// All tuples of positive entries with r parts and sum <= d, sorted by size then lexicographically.
std::vector<Tuple> brute_objects(int d, int r) {
  std::vector<Tuple> out;
  for (int n = r; n <= d; ++n)
    for (auto& m : oracle::all_maps(r, n)) {
      int s = 0;
      for (int x : m) s += x;
      if (s == n) out.push_back(m);
    }
  return out;
}

}  // namespace

TEST_CASE("objects") {
  CHECK(tuples(enumerate_objects(3, 2)) == std::vector<Tuple>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(tuples(enumerate_objects(3, 1)) == std::vector<Tuple>{{1}, {2}, {3}});
  for (int d = 1; d <= 6; ++d) CHECK(tuples(enumerate_objects(d, d)) == std::vector<Tuple>{Tuple(d, 1)});
  for (int d = 1; d <= 7; ++d)
    for (int r = 1; r <= d; ++r) CHECK(tuples(enumerate_objects(d, r)) == brute_objects(d, r));
  CHECK_THROWS_AS(enumerate_objects(2, 3), InvalidInput);
}

TEST_CASE("canonical form from a structure map") {
  auto u = SliceObject::from_structure_map(finset::FinMap(4, 2, {2, 1, 2, 2}));
  CHECK(u.fibers() == Tuple{1, 3});
  CHECK(u.structure_map().values() == std::vector<int>{1, 2, 2, 2});
  CHECK(u.fiber_of(2) == 2);
  CHECK(u.fiber_start(2) == 2);
  CHECK_THROWS_AS(SliceObject::from_structure_map(finset::FinMap(2, 2, {1, 1})), InvalidInput);
  CHECK_THROWS_AS(SliceObject(Tuple{1, 0}), InvalidInput);
}

TEST_CASE("hom sets") {
  SliceObject a({2, 1}), b({1, 1}), c({2, 2});
  CHECK(hom_set(a, b).size() == 1);
  CHECK(hom_set(c, SliceObject({2, 1})).size() == 2);
  auto id = hom_set(a, a);
  CHECK(std::find(id.begin(), id.end(), finset::FinMap::identity(3)) != id.end());
  CHECK_THROWS_AS(hom_set(SliceObject({1}), b), InvalidInput);
  CHECK_THROWS_AS(make_morphism(a, b, finset::FinMap(3, 2, {2, 1, 2})), InvalidInput);
}

TEST_CASE("hom sets agree with brute force and factor fiberwise for d <= 5") {
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= d; ++r) {
      auto objs = enumerate_objects(d, r);
      for (const auto& u : objs)
        for (const auto& v : objs) {
          auto brute = oracle::slice_homs(u.fibers(), v.fibers());
          auto homs = hom_set(u, v);
          REQUIRE(homs.size() == brute.size());
          for (std::size_t n = 0; n < homs.size(); ++n) CHECK(homs[n].values() == brute[n]);
          Integer product = 1;
          for (int i = 0; i < r; ++i) product *= static_cast<unsigned long>(oracle::surjections(u.fibers()[i], v.fibers()[i]).size());
          CHECK(hom_count(u, v) == product);
        }
    }
}

TEST_CASE("iso classes are fiber tuples for d <= 5") {
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= d; ++r)
      for (int n = r; n <= d; ++n)
        for (auto& m : oracle::surjections(n, r)) {
          // any labelled structure map is isomorphic to the canonical object with its fiber sizes
          finset::FinMap sm(n, r, m);
          auto canon = SliceObject::from_structure_map(sm);
          Tuple sizes(static_cast<std::size_t>(r), 0);
          for (int x : m) ++sizes[static_cast<std::size_t>(x - 1)];
          CHECK(canon.fibers() == sizes);
          bool iso = false;
          for (auto& p : oracle::surjections(n, n)) {
            bool ok = true;
            for (int x = 1; x <= n && ok; ++x) ok = oracle::label(sizes, p[static_cast<std::size_t>(x - 1)]) == m[static_cast<std::size_t>(x - 1)];
            if (ok) {
              iso = true;
              break;
            }
          }
          CHECK(iso);
        }
}

TEST_CASE("orbitality") {
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= d; ++r) {
      auto rep = check_atomic_orbital(d, r);
      CHECK_MESSAGE(rep.pass, rep.counterexample);
      CHECK(rep.iso_classes == enumerate_objects(d, r).size());
    }
}

TEST_CASE("composition in the slice") {
  SliceObject a({2, 2}), b({2, 1}), c({1, 1});
  for (auto& f : hom_set(a, b))
    for (auto& g : hom_set(b, c)) {
      auto gf = compose(make_morphism(b, c, g), make_morphism(a, b, f));
      CHECK(gf.source == a);
      CHECK(gf.target == c);
    }
  CHECK_THROWS_AS(compose(make_morphism(a, a, finset::FinMap::identity(4)), make_morphism(b, b, finset::FinMap::identity(3))),
                  InvalidInput);
}
