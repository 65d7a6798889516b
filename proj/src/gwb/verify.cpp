#include "gwb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "gwb/burnside.hpp"
#include "gwb/cube.hpp"
#include "gwb/epi_cat.hpp"
#include "gwb/fin_coprod.hpp"
#include "gwb/finset.hpp"
#include "gwb/mackey.hpp"
#include "gwb/span_cat.hpp"

namespace gwb::verify {

namespace {

using epi::SliceObject;

// Each suite returns an empty string on success or a description of the first failure.
SuiteResult run(const std::string& name, const std::function<std::string(std::string&)>& body) {
  SuiteResult res;
  res.name = name;
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    std::string failure = body(detail);
    res.pass = failure.empty();
    res.detail = res.pass ? detail : failure;
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::string surjections(int d, std::string& detail) {
  const int top = std::min(d + 2, 8);
  for (int k = 1; k <= top; ++k) {
    if (finset::surjection_count(k, k) != finset::factorial(k)) return "|Epi(k,k)| != k! at k = " + std::to_string(k);
    for (int i = 1; i <= top; ++i)
      if (Integer(static_cast<unsigned long>(finset::enumerate_surjections(k, i).size())) != finset::surjection_count(k, i))
        return "surjection count differs from enumeration at (" + std::to_string(k) + "," + std::to_string(i) + ")";
  }
  detail = "k, i <= " + std::to_string(top);
  return "";
}

std::string orbitality(int d, std::string& detail) {
  for (int r = 1; r <= d; ++r) {
    auto rep = epi::check_atomic_orbital(d, r);
    if (!rep.pass) return "Epi_{" + std::to_string(d) + "," + std::to_string(r) + "}: " + rep.counterexample;
  }
  detail = "Epi_{" + std::to_string(d) + ",r} for r <= " + std::to_string(d);
  return "";
}

std::string pullbacks(int d, std::string& detail) {
  const int b = std::min(d, 4);
  std::size_t cospans = 0;
  for (int r = 1; r <= std::min(b, 2); ++r) {
    const auto objects = epi::enumerate_objects(b, r);
    for (const auto& e : objects)
      for (const auto& a : objects)
        for (const auto& bo : objects)
          for (const auto& f : epi::hom_set(a, e))
            for (const auto& g : epi::hom_set(bo, e)) {
              ++cospans;
              auto rep = coprod::verify_universal_property(coprod::connected({a, e, f}), coprod::connected({bo, e, g}), b);
              if (!rep.pass)
                return "universal property fails for " + a.to_string() + " -> " + e.to_string() + " <- " + bo.to_string();
            }
  }
  detail = std::to_string(cospans) + " cospans in Fin_{Epi_" + std::to_string(b) + "}";
  return "";
}

std::string rings(int d, std::string& detail) {
  std::size_t triples = 0;
  for (int dd = 1; dd <= d; ++dd)
    for (int r = 1; r <= std::min(dd, 3); ++r) {
      auto ring = burnside::BurnsideRing::build(dd, r);
      auto marks = burnside::marks_matrix(dd, r);
      const std::size_t n = ring.rank();
      for (std::size_t u = 0; u < n; ++u) {
        if (marks(u, u) == 0) return "zero diagonal mark";
        for (std::size_t v = u + 1; v < n; ++v)
          if (marks(u, v) != 0) return "marks matrix is not lower triangular";
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t w = 0; w < n; ++w) {
            ++triples;
            Integer lhs = 0;
            for (std::size_t x = 0; x < n; ++x) lhs += Integer(static_cast<long>(ring.constant(v, w, x))) * marks(u, x);
            if (lhs != marks(u, v) * marks(u, w))
              return "marks are not multiplicative at " + ring.basis()[u].to_string() + " on " +
                     ring.basis()[v].to_string() + " . " + ring.basis()[w].to_string();
          }
      }
    }
  detail = std::to_string(triples) + " mark triples";
  return "";
}

std::string span_products(int d, std::string& detail) {
  std::size_t pairs = 0;
  for (int r = 1; r <= std::min(d, 2); ++r) {
    auto ring = burnside::BurnsideRing::build(d, r);
    const auto star = SliceObject::final_object(r);
    const auto& basis = ring.basis();
    for (std::size_t w = 0; w < basis.size(); ++w)
      for (std::size_t v = 0; v < basis.size(); ++v) {
        ++pairs;
        auto leg = [&](const SliceObject& x) { return x.structure_map(); };
        auto sw = span::make_connected(star, basis[w], star, leg(basis[w]), leg(basis[w]));
        auto sv = span::make_connected(star, basis[v], star, leg(basis[v]), leg(basis[v]));
        std::vector<std::int64_t> got(basis.size(), 0);
        for (const auto& [key, mult] : span::compose(sw, sv, d)) {
          Tuple fibers(static_cast<std::size_t>(r), 0);
          for (const auto& [l, rr] : key.pairs) ++fibers[static_cast<std::size_t>(l - 1)];
          got[ring.index_of(fibers)] += mult.get_si();
        }
        for (std::size_t x = 0; x < basis.size(); ++x)
          if (got[x] != ring.constant(w, v, x))
            return "span composite differs from the ring at " + basis[w].to_string() + " . " + basis[v].to_string();
      }
    mackey::endomorphism_ring_of_unit(std::min(d, 5), r);
  }
  detail = std::to_string(pairs) + " products by three routes";
  return "";
}

std::string segal(int d, std::string& detail) {
  std::string primes;
  for (long p = 2; p <= std::max(d, 2); ++p) {
    if (!burnside::is_prime(p)) continue;
    auto rep = burnside::segal_report(p);
    if (!rep.pass) return "Segal arithmetic fails at p = " + std::to_string(p);
    primes += (primes.empty() ? "" : ",") + std::to_string(p);
  }
  detail = "p in {" + primes + "}";
  return "";
}

std::string mackey_suite(int d, std::string& detail) {
  const int b = std::min(d, 4);
  std::size_t functors = 0;
  for (int dd = 1; dd <= b; ++dd)
    for (int r = 1; r <= std::min(dd, 2); ++r)
      for (const auto& v : epi::enumerate_objects(dd, r)) {
        auto m = mackey::representable(dd, r, v.fibers());
        ++functors;
        auto rep = mackey::check_axioms(m);
        if (!rep.pass) return "representable at " + v.to_string() + ": " + rep.failure;
        for (int level = r; level < dd; ++level) {
          auto cut = mackey::check_axioms(mackey::restrict_to_cosieve(m, level));
          if (!cut.pass) return "cosieve restriction of " + v.to_string() + " to " + std::to_string(level) + ": " + cut.failure;
        }
      }
  detail = std::to_string(functors) + " representables up to d = " + std::to_string(b);
  return "";
}

std::string cubes(int d, unsigned per_shape, std::string& detail) {
  const int b = std::min(d, 5);
  std::vector<cube::Shape> shapes;
  for (int dd = 1; dd <= b; ++dd)
    for (int r = 1; r <= std::min(dd, 3); ++r) shapes.push_back(cube::Shape::truncated(dd, r));
  for (int r = 1; r <= 3; ++r)
    for (int total = r; total <= b; ++total)
      for (const auto& bounds : cube::compositions(total, r))
        for (int n = 1; n <= total; ++n) shapes.push_back(cube::Shape::filtered(bounds, n));
  std::size_t diagrams = 0;
  for (const auto& s : shapes)
    for (unsigned i = 0; i < per_shape; ++i) {
      auto f = cube::random_diagram(s, 7919u * i + 17, 4, i % 2 == 0);
      ++diagrams;
      if (cube::is_rke_from(f).pass != cube::matches_extension(f))
        return "criterion and extension disagree on " + s.describe() + " seed " + std::to_string(7919u * i + 17);
    }
  detail = std::to_string(diagrams) + " random diagrams on " + std::to_string(shapes.size()) + " shapes";
  return "";
}

std::string pigeonhole(int d, std::string& detail) {
  std::size_t triples = 0;
  for (int dd = 1; dd <= d; ++dd)
    for (int r = 1; r <= dd; ++r)
      for (int s = r; s <= dd; ++s) {
        ++triples;
        auto rep = cube::verify_pigeonhole(dd, r, s);
        if (!rep.pass) return rep.failure;
      }
  detail = std::to_string(triples) + " triples (d, r, s)";
  return "";
}

}  // namespace

Summary verify_all(int d, unsigned per_shape) {
  require(d >= 1, "verify_all needs d >= 1");
  Summary out;
  out.d = d;
  out.suites.push_back(run("surjections", [&](std::string& s) { return surjections(d, s); }));
  out.suites.push_back(run("orbitality", [&](std::string& s) { return orbitality(d, s); }));
  out.suites.push_back(run("pullbacks", [&](std::string& s) { return pullbacks(d, s); }));
  out.suites.push_back(run("rings", [&](std::string& s) { return rings(d, s); }));
  out.suites.push_back(run("products", [&](std::string& s) { return span_products(d, s); }));
  out.suites.push_back(run("segal", [&](std::string& s) { return segal(d, s); }));
  out.suites.push_back(run("mackey", [&](std::string& s) { return mackey_suite(d, s); }));
  out.suites.push_back(run("cube", [&](std::string& s) { return cubes(d, per_shape, s); }));
  out.suites.push_back(run("pigeonhole", [&](std::string& s) { return pigeonhole(d, s); }));
  for (const auto& s : out.suites) out.pass = out.pass && s.pass;
  return out;
}

}  // namespace gwb::verify
