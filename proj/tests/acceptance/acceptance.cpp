// One line per acceptance criterion; nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <string>

#include "gwb/burnside.hpp"
#include "gwb/cube.hpp"
#include "gwb/epi_cat.hpp"
#include "gwb/fin_coprod.hpp"
#include "gwb/finset.hpp"
#include "gwb/mackey.hpp"
#include "gwb/span_cat.hpp"
#include "oracles.hpp"

using namespace gwb;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first mismatch.
struct Tally {
  Outcome out;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
  Outcome done(const std::string& summary) {
    if (out.pass) out.detail = summary + ", " + std::to_string(checks) + " checks";
    return out;
  }
};

std::string run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(GWB_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

// |Epi(n, k)| = k! S(n, k) from the Stirling recurrence.
Integer stirling_surjections(int n, int k) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(k) + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= k; ++b)
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          b * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] + s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  Integer fact = 1;
  for (int b = 2; b <= k; ++b) fact *= b;
  return fact * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Hom counts by enumerating every map, cached across ring sizes.
Integer brute_mark(const Tuple& u, const Tuple& v) {
  static std::map<std::pair<Tuple, Tuple>, Integer> cache;
  auto it = cache.find({u, v});
  if (it != cache.end()) return it->second;
  Integer n = static_cast<unsigned long>(oracle::slice_homs(u, v).size());
  cache.emplace(std::make_pair(u, v), n);
  return n;
}

Outcome segal() {
  Tally t;
  for (int p : {2, 3, 5, 7}) {
    int status = 0;
    auto j = json::parse(run_cli("segal --p " + std::to_string(p) + " --format json", status));
    t.expect(status == 0, "segal --p " + std::to_string(p) + " exited " + std::to_string(status));
    t.expect(j["p"] == p, "wrong p echoed");
    t.expect(j["rows"].size() == static_cast<std::size_t>(p), "wrong number of rows at p = " + std::to_string(p));
    for (auto& row : j["rows"]) {
      const int k = row["k"].get<int>();
      const std::string where = "p = " + std::to_string(p) + ", k = " + std::to_string(k);
      if (k == 1) t.expect(row["generator"] == p, where + ": expected pZ");
      if (k > 1 && k < p) t.expect(row["generator"] == 1, where + ": expected Z");
      if (k == p) t.expect(row["raw_generator"] == 0, where + ": expected zero raw image");
    }
    t.expect(j["pass"] == true, "report verdict false at p = " + std::to_string(p));
  }
  return t.done("(p, Phi^[k](I(p))) = pZ, Z, ..., Z and raw image 0 at k = p");
}

Outcome divisibility() {
  Tally t;
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int i = 2; i <= p; ++i) {
      Integer n = finset::surjection_count(p, i);
      t.expect(n == stirling_surjections(p, i), "count differs from recurrence at " + std::to_string(p) + "," + std::to_string(i));
      t.expect(n % p == 0, std::to_string(p) + " does not divide Surj(" + std::to_string(p) + "," + std::to_string(i) + ")");
    }
  return t.done("p | Surj(p, i) for p <= 13");
}

Outcome factorials() {
  Tally t;
  Integer fact = 1;
  for (int k = 1; k <= 10; ++k) {
    fact *= k;
    t.expect(finset::surjection_count(k, k) == fact, "Surj(k,k) != k! at k = " + std::to_string(k));
  }
  for (int k = 1; k <= 8; ++k)
    for (int i = 1; i <= 8; ++i) {
      auto brute = oracle::surjections(k, i);
      t.expect(finset::surjection_count(k, i) == Integer(static_cast<unsigned long>(brute.size())),
               "count differs from enumeration at " + std::to_string(k) + "," + std::to_string(i));
      t.expect(finset::enumerate_surjections(k, i).size() == brute.size(), "enumeration size differs");
    }
  return t.done("k! for k <= 10, brute-force counts for k, i <= 8");
}

Outcome marks_multiplicative() {
  Tally t;
  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) {
      auto ring = burnside::BurnsideRing::build(d, r);
      const auto& basis = ring.basis();
      const auto n = basis.size();
      std::vector<Integer> bm(n * n);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) bm[u * n + v] = brute_mark(basis[u].fibers(), basis[v].fibers());
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v; w < n; ++w) {
          auto prod = ring.multiply(ring.basis_element(v), ring.basis_element(w));
          for (std::size_t u = 0; u < n; ++u)
            t.expect(burnside::mark(basis[u], prod, basis) == bm[u * n + v] * bm[u * n + w],
                     "mark " + basis[u].to_string() + " of " + basis[v].to_string() + "." + basis[w].to_string() +
                         " in A(" + std::to_string(d) + "," + std::to_string(r) + ")");
        }
    }
  return t.done("all basis triples, d <= 6, r <= 3");
}

Outcome c2() {
  Tally t;
  auto a2 = burnside::BurnsideRing::build(2, 1);
  t.expect(a2.constant(1, 1, 1) == 2 && a2.constant(1, 1, 0) == 0, "[2].[2] != 2[2]");
  auto m = mackey::representable(2, 1, {1});
  t.expect(m.ranks() == std::vector<int>{2, 1}, "ranks of the C2 Burnside functor");
  const auto& s = m.skeleton();
  const auto id = s.identity_index(1);
  const auto swap = s.morphism_index(1, 1, finset::FinMap(2, 2, {2, 1}));
  linalg::IntMatrix res(1, 2), tr(2, 1);
  res(0, 0) = 1;
  res(0, 1) = 2;
  tr(1, 0) = 1;
  t.expect(m.restriction(1, 0, 0) == res, "restriction [2] -> [1] is not (1 2)");
  t.expect(m.transfer(1, 0, 0) == tr, "transfer [2] -> [1] is not (0 1)^T");
  auto lhs = m.restriction(1, 0, 0) * m.transfer(1, 0, 0);
  auto rhs = m.transfer(1, 1, id) * m.restriction(1, 1, id) + m.transfer(1, 1, swap) * m.restriction(1, 1, swap);
  t.expect(lhs == rhs, "res tr != 1 + swap");
  t.expect(lhs(0, 0) == 2, "res tr != 2 on the free orbit");
  t.expect(mackey::check_axioms(m).pass, "axioms fail on the C2 functor");
  return t.done("[2]^2 = 2[2], res tr = 1 + swap");
}

Outcome triple() {
  Tally t;
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= std::min(d, 2); ++r) {
      auto ring = burnside::BurnsideRing::build(d, r);
      auto end = mackey::endomorphism_ring_of_unit(d, r);
      const auto& basis = ring.basis();
      const auto n = basis.size();
      const auto fin = epi::SliceObject::final_object(r);
      const std::string where = " in A(" + std::to_string(d) + "," + std::to_string(r) + ")";
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          auto su = span::make_connected(fin, basis[u], fin, basis[u].structure_map(), basis[u].structure_map());
          auto sv = span::make_connected(fin, basis[v], fin, basis[v].structure_map(), basis[v].structure_map());
          std::vector<std::int64_t> via_spans(n, 0);
          for (auto& [key, c] : span::compose(su, sv, d))
            via_spans[ring.index_of(key.to_span().apex.components[0].fibers())] += c.get_si();
          for (std::size_t w = 0; w < n; ++w) {
            const auto c = ring.constant(u, v, w);
            const std::string at = basis[u].to_string() + "." + basis[v].to_string() + " -> " + basis[w].to_string() + where;
            t.expect(c == via_spans[w], "pullbacks vs spans at " + at);
            t.expect(c == end.constant(u, v, w), "pullbacks vs endomorphisms at " + at);
            t.expect(Integer(static_cast<long>(c)) ==
                         oracle::structure_constant(basis[u].fibers(), basis[v].fibers(), basis[w].fibers(), d),
                     "pullbacks vs fiberwise count at " + at);
          }
        }
    }
  return t.done("d <= 5, r <= 2");
}

Outcome double_cosets() {
  Tally t;
  std::size_t cospans = 0;
  for (int d = 1; d <= 4; ++d)
    for (int r = 1; r <= std::min(d, 2); ++r)
      for (const auto& v : epi::enumerate_objects(d, r)) {
        auto rep = mackey::check_axioms(mackey::representable(d, r, v.fibers()));
        cospans += rep.cospans_checked;
        t.expect(rep.pass, "representable at " + v.to_string() + ", d = " + std::to_string(d) + ": " + rep.failure);
      }
  return t.done("every representable, d <= 4, r <= 2, " + std::to_string(cospans) + " cospans");
}

Outcome universal_property() {
  Tally t;
  const int d = 4;
  for (int r = 1; r <= d; ++r) {
    auto objs = epi::enumerate_objects(d, r);
    for (const auto& e : objs)
      for (const auto& a : objs)
        for (const auto& b : objs)
          for (const auto& fm : epi::hom_set(a, e))
            for (const auto& gm : epi::hom_set(b, e)) {
              auto rep = coprod::verify_universal_property(coprod::connected(epi::make_morphism(a, e, fm)),
                                                           coprod::connected(epi::make_morphism(b, e, gm)), d);
              t.expect(rep.pass, "cospan " + a.to_string() + " -> " + e.to_string() + " <- " + b.to_string() +
                                     " fails at T = " + to_string(rep.failing_object));
            }
  }
  return t.done("all cospans of connected objects in Fin_{Epi_4}");
}

std::vector<cube::Shape> cube_shapes() {
  std::vector<cube::Shape> out;
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) out.push_back(cube::Shape::truncated(d, r));
  for (int r = 1; r <= 3; ++r)
    for (int total = r; total <= 5; ++total)
      for (const auto& bounds : cube::compositions(total, r))
        for (int n = 0; n <= total; ++n) out.push_back(cube::Shape::filtered(bounds, n));
  return out;
}

Outcome cube_oracle() {
  Tally t;
  std::size_t positive = 0, negative = 0, shapes = 0;
  for (const auto& s : cube_shapes()) {
    ++shapes;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto f = cube::random_diagram(s, seed, 4, seed % 2 == 1);
      const bool unit = cube::is_rke_from(f).pass;
      const bool brute = oracle::extended_from_sub(f);
      const bool ext = cube::matches_extension(f);
      t.expect(unit == brute && unit == ext, s.describe() + " seed " + std::to_string(seed));
      (unit ? positive : negative) += 1;
    }
  }
  t.expect(positive > 0 && negative > 0, "sample has only one verdict");
  return t.done(std::to_string(shapes) + " shapes x 200 diagrams, " + std::to_string(positive) + " extended, " +
                std::to_string(negative) + " not");
}

Outcome pigeonhole() {
  Tally t;
  for (int d = 1; d <= 7; ++d)
    for (int r = 1; r <= d; ++r)
      for (int s = r; s <= d; ++s) {
        const std::string where = "(" + std::to_string(d) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
        auto rep = cube::verify_pigeonhole(d, r, s);
        t.expect(rep.pass, where + ": " + rep.failure);

        // the same claims over every surjection [s] ->> [r], recomputed here
        std::vector<Tuple> gens_r, gens_s;
        for (int n = r; n <= d; ++n)
          for (auto& x : oracle::all_maps(r, n))
            if (std::accumulate(x.begin(), x.end(), 0) == n) gens_r.push_back(x);
        for (int n = s; n <= d; ++n)
          for (auto& x : oracle::all_maps(s, n))
            if (std::accumulate(x.begin(), x.end(), 0) == n) gens_s.push_back(x);
        for (const auto& f : oracle::surjections(s, r)) {
          std::vector<int> fiber(static_cast<std::size_t>(r), 0);
          for (int v : f) ++fiber[static_cast<std::size_t>(v - 1)];
          for (const auto& l : gens_r) {
            Tuple deg;
            for (int v : f) deg.push_back(l[static_cast<std::size_t>(v - 1)] - fiber[static_cast<std::size_t>(v - 1)] + 1);
            t.expect(cube::crosseffect_degrees(l, f) == deg, where + ": cross-effect degrees of " + to_string(l));
            bool zero = std::any_of(deg.begin(), deg.end(), [](int x) { return x <= 0; });
            bool bounded = std::all_of(deg.begin(), deg.end(), [&](int x) { return x <= d - s + 1; });
            t.expect(zero || bounded, where + ": cross-effect claim at " + to_string(l) + " along " + to_string(f));
          }
          for (const auto& e : gens_s) {
            Tuple diag(static_cast<std::size_t>(r), 0);
            for (std::size_t j = 0; j < f.size(); ++j) diag[static_cast<std::size_t>(f[j] - 1)] += e[j];
            t.expect(cube::diagonal_degrees(e, f) == diag, where + ": diagonal degrees of " + to_string(e));
            t.expect(std::accumulate(diag.begin(), diag.end(), 0) <= d &&
                         std::all_of(diag.begin(), diag.end(), [&](int x) { return x <= d - r + 1; }),
                     where + ": diagonal claim at " + to_string(e));
          }
          for (const auto& k : oracle::all_maps(s, d - s + 1)) {
            if (std::accumulate(k.begin(), k.end(), 0) <= d) continue;
            Tuple merged(static_cast<std::size_t>(r), 0);
            for (std::size_t j = 0; j < f.size(); ++j) merged[static_cast<std::size_t>(f[j] - 1)] += k[j];
            for (const auto& l : gens_r) {
              bool drops = false;
              for (std::size_t i = 0; i < merged.size(); ++i) drops = drops || l[i] - merged[i] + 1 < 1;
              t.expect(drops, where + ": no vanishing degree at " + to_string(k));
            }
          }
        }
      }
  return t.done("all r <= s <= d <= 7");
}

Outcome orbitality() {
  Tally t;
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= d; ++r) {
      auto rep = epi::check_atomic_orbital(d, r);
      t.expect(rep.pass, "Epi_{" + std::to_string(d) + "," + std::to_string(r) + "}: " + rep.counterexample);
      // brute force: endomorphisms are bijections, retractions only between isos
      auto objs = epi::enumerate_objects(d, r);
      for (const auto& u : objs)
        for (const auto& v : objs) {
          auto uv = oracle::slice_homs(u.fibers(), v.fibers());
          auto vu = oracle::slice_homs(v.fibers(), u.fibers());
          for (const auto& f : uv)
            for (const auto& g : vu) {
              std::vector<int> gf;
              for (int x : f) gf.push_back(g[static_cast<std::size_t>(x - 1)]);
              if (!oracle::onto(gf, u.size()) || gf.size() != static_cast<std::size_t>(u.size())) continue;
              t.expect(u == v && oracle::onto(g, u.size()), "retract pair between " + u.to_string() + " and " + v.to_string());
            }
          if (u == v)
            for (const auto& f : uv) t.expect(oracle::onto(f, u.size()), "non-invertible endomorphism");
        }
    }
  return t.done("Epi_{d,r}, d <= 5");
}

Outcome triangular() {
  Tally t;
  for (int d = 1; d <= 6; ++d)
    for (int r = 1; r <= std::min(d, 3); ++r) {
      auto m = burnside::marks_matrix(d, r);
      auto basis = epi::enumerate_objects(d, r);
      const std::string where = " in A(" + std::to_string(d) + "," + std::to_string(r) + ")";
      Integer det = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Integer diag = 1;
        for (int k : basis[i].fibers()) diag *= finset::factorial(k);
        t.expect(m(i, i) == diag, "diagonal at " + basis[i].to_string() + where);
        det *= m(i, i);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          t.expect(m(i, j) == brute_mark(basis[i].fibers(), basis[j].fibers()), "entry " + basis[i].to_string() + "," +
                                                                                   basis[j].to_string() + where);
          if (j > i) t.expect(m(i, j) == 0, "above the diagonal" + where);
        }
      }
      t.expect(det != 0, "zero determinant" + where);
      t.expect(linalg::rank(linalg::to_rational(m)) == basis.size(), "rank deficient" + where);
    }
  return t.done("d <= 6, r <= 3");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "segal arithmetic via the CLI", 5, segal},
      {2, "divisibility witnesses", 1, divisibility},
      {3, "surjection counts", 10, factorials},
      {4, "marks are ring maps", 60, marks_multiplicative},
      {5, "C2 sanity", 1, c2},
      {6, "three routes to A(d, r)", 120, triple},
      {7, "double-coset formula", 120, double_cosets},
      {8, "pullback universal property", 60, universal_property},
      {9, "cube oracle equivalence", 120, cube_oracle},
      {10, "pigeonhole arithmetic", 30, pigeonhole},
      {11, "atomic orbitality", 30, orbitality},
      {12, "marks triangularity", 10, triangular},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    if (!o.pass) ++failures;
    char line[64];
    std::snprintf(line, sizeof line, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << line << ") - "
              << o.detail << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
