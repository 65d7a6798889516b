#pragma once

// Brute-force reference computations. Nothing here calls the library routine
// it is used to check; library types appear only as inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gwb/common.hpp"
#include "gwb/cube.hpp"
#include "gwb/linalg.hpp"

namespace oracle {

using gwb::Integer;
using gwb::Tuple;

// Every map [k] -> [i] as a value list, in lexicographic order.
inline std::vector<std::vector<int>> all_maps(int k, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 1);
  if (k == 0) return {cur};
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == i) cur[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline bool onto(const std::vector<int>& values, int i) {
  std::vector<bool> hit(static_cast<std::size_t>(i) + 1, false);
  for (int v : values) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

// Walks all i^k maps without storing them.
inline std::vector<std::vector<int>> surjections(int k, int i) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 1);
  while (true) {
    if (onto(cur, i)) out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == i) cur[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

// Fiber label of element x (1-based) in the canonical object with these fibers.
inline int label(const Tuple& fibers, int x) {
  int acc = 0;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    acc += fibers[i];
    if (x <= acc) return static_cast<int>(i) + 1;
  }
  return -1;
}

// Maps u -> v commuting with the labels and surjective.
inline std::vector<std::vector<int>> slice_homs(const Tuple& u, const Tuple& v) {
  const int su = std::accumulate(u.begin(), u.end(), 0), sv = std::accumulate(v.begin(), v.end(), 0);
  std::vector<std::vector<int>> out;
  for (auto& m : all_maps(su, sv)) {
    if (!onto(m, sv)) continue;
    bool ok = true;
    for (int x = 1; x <= su && ok; ++x) ok = label(u, x) == label(v, m[static_cast<std::size_t>(x - 1)]);
    if (ok) out.push_back(m);
  }
  return out;
}

inline Integer choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// Subsets of size n of an a x b grid meeting every row and every column.
inline Integer good_in_grid(int a, int b, int n) {
  Integer total = 0;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      Integer term = choose(a, i) * choose(b, j) * choose(static_cast<long>(a - i) * (b - j), n);
      total += (i + j) % 2 ? -term : term;
    }
  return total;
}

// Multiplicity of w in u . v in A(d, r), fiber by fiber.
inline Integer structure_constant(const Tuple& u, const Tuple& v, const Tuple& w, int d) {
  if (std::accumulate(w.begin(), w.end(), 0) > d) return 0;
  Integer out = 1;
  for (std::size_t i = 0; i < u.size(); ++i) out *= good_in_grid(u[i], v[i], w[i]);
  return out;
}

// Connected spans as (left values, right values) on a labelled apex.
struct RawSpan {
  std::vector<int> left, right;
};

// Some relabelling of the apex carries one span to the other.
inline bool isomorphic(const RawSpan& a, const RawSpan& b) {
  if (a.left.size() != b.left.size()) return false;
  std::vector<std::size_t> p(a.left.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x)
      ok = a.left[x] == b.left[p[x]] && a.right[x] == b.right[p[x]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Composite F(c) -> F(t) walking the highest direction first.
inline gwb::linalg::QMatrix composite(const gwb::cube::Diagram& f, std::size_t from, std::size_t to) {
  const auto& shape = f.shape();
  Tuple cur = shape.element(from);
  const Tuple target = shape.element(to);
  auto acc = gwb::linalg::QMatrix::identity(static_cast<std::size_t>(f.dim(from)));
  for (int i = shape.r() - 1; i >= 0; --i)
    while (cur[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(i)]) {
      acc = f.map(shape.index_of(cur), i) * acc;
      --cur[static_cast<std::size_t>(i)];
    }
  return acc;
}

inline bool below(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Limit over `elements` using every arrow between them, not just covering ones.
// Returns a basis of the limit inside the direct sum, plus block offsets.
struct BruteLimit {
  gwb::linalg::QMatrix basis;
  std::map<std::size_t, std::size_t> offset;
};

inline BruteLimit limit(const gwb::cube::Diagram& f, const std::vector<std::size_t>& elements) {
  using gwb::linalg::QMatrix;
  const auto& shape = f.shape();
  BruteLimit out;
  std::size_t total = 0;
  for (auto e : elements) {
    out.offset[e] = total;
    total += static_cast<std::size_t>(f.dim(e));
  }
  std::vector<QMatrix> rows;
  for (auto s : elements)
    for (auto t : elements) {
      if (s == t || !below(shape.element(t), shape.element(s))) continue;
      QMatrix m = composite(f, s, t);
      QMatrix block(m.rows(), total);
      for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) block(a, out.offset[s] + b) = m(a, b);
        block(a, out.offset[t] + a) -= 1;
      }
      rows.push_back(block);
    }
  out.basis = gwb::linalg::nullspace(gwb::linalg::vstack(rows, total));
  return out;
}

inline std::vector<std::size_t> sub_below(const gwb::cube::Shape& shape, std::size_t e) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < shape.size(); ++s)
    if (shape.in_sub(s) && below(shape.element(s), shape.element(e))) out.push_back(s);
  return out;
}

// F is extended from S iff at every a outside S the cone to the full comma
// limit over S below a is an isomorphism.
inline bool extended_from_sub(const gwb::cube::Diagram& f) {
  const auto& shape = f.shape();
  for (std::size_t e = 0; e < shape.size(); ++e) {
    if (shape.in_sub(e)) continue;
    auto elems = sub_below(shape, e);
    auto lim = limit(f, elems);
    const auto n = static_cast<std::size_t>(f.dim(e));
    if (lim.basis.cols() != n) return false;
    if (n == 0) continue;
    std::vector<gwb::linalg::QMatrix> blocks;
    for (auto s : elems) blocks.push_back(composite(f, e, s));
    if (gwb::linalg::rank(gwb::linalg::vstack(blocks, n)) != n) return false;
  }
  return true;
}

}  // namespace oracle
