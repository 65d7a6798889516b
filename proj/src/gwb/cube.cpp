#include "gwb/cube.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace gwb::cube {

namespace {

bool leq(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Tuple minus_unit(Tuple c, int i) {
  --c[static_cast<std::size_t>(i)];
  return c;
}

}  // namespace

Shape::Shape(Kind kind, int d, Tuple bounds, int n, Tuple extents)
    : kind_(kind), d_(d), bounds_(std::move(bounds)), n_(n), extents_(std::move(extents)) {
  for (int e : extents_) size_ *= static_cast<std::size_t>(e + 1);
}

Shape Shape::truncated(int d, int r) {
  require(r >= 1 && r <= d, "truncated cube needs 1 <= r <= d");
  return Shape(Kind::truncated, d, {}, 0, Tuple(static_cast<std::size_t>(r), d - r));
}

Shape Shape::filtered(Tuple bounds, int n) {
  require(!bounds.empty(), "filtered cube needs at least one bound");
  for (int k : bounds) require(k >= 1, "filtered cube bounds must be positive");
  int total = tuple_sum(bounds);
  require(n >= 0 && n <= total, "threshold n must lie in [0, sum of bounds]");
  Tuple extents = bounds;
  return Shape(Kind::filtered, total, std::move(bounds), n, std::move(extents));
}

Tuple Shape::element(std::size_t index) const {
  Tuple c(extents_.size());
  for (std::size_t i = extents_.size(); i-- > 0;) {
    auto base = static_cast<std::size_t>(extents_[i] + 1);
    c[i] = static_cast<int>(index % base);
    index /= base;
  }
  return c;
}

std::size_t Shape::index_of(const Tuple& c) const {
  require(c.size() == extents_.size(), "tuple has the wrong length for " + describe());
  std::size_t index = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    require(c[i] >= 0 && c[i] <= extents_[i], "tuple lies outside " + describe());
    index = index * static_cast<std::size_t>(extents_[i] + 1) + static_cast<std::size_t>(c[i]);
  }
  return index;
}

Tuple Shape::to_internal(const Tuple& user) const {
  require(user.size() == extents_.size(), "tuple " + to_string(user) + " has the wrong length for " + describe());
  Tuple c(user.size());
  for (std::size_t i = 0; i < user.size(); ++i) c[i] = kind_ == Kind::truncated ? user[i] - 1 : bounds_[i] - user[i];
  for (std::size_t i = 0; i < c.size(); ++i)
    require(c[i] >= 0 && c[i] <= extents_[i], "tuple " + to_string(user) + " lies outside " + describe());
  return c;
}

Tuple Shape::to_user(const Tuple& c) const {
  Tuple u(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) u[i] = kind_ == Kind::truncated ? c[i] + 1 : bounds_[i] - c[i];
  return u;
}

bool Shape::in_sub(const Tuple& c) const {
  int s = tuple_sum(c);
  if (kind_ == Kind::truncated) return s + r() <= d_;
  return d_ - s >= n_;
}

std::string Shape::describe() const {
  if (kind_ == Kind::truncated) return "Q(" + std::to_string(d_) + "," + std::to_string(r()) + ")";
  return "B_" + std::to_string(n_) + " in " + to_string(bounds_);
}

Diagram::Diagram(Shape shape, bool on_sub_only)
    : shape_(std::move(shape)), sub_only_(on_sub_only), dims_(shape_.size(), 0), maps_(shape_.size()) {
  for (auto& m : maps_) m.resize(static_cast<std::size_t>(shape_.r()));
}

void Diagram::set_dim(std::size_t e, int dim) {
  require(has(e), "element is not in the diagram's support");
  require(dim >= 0, "dimensions must be nonnegative");
  dims_[e] = dim;
}

const QMatrix& Diagram::map(std::size_t e, int i) const {
  return maps_[e][static_cast<std::size_t>(i)];
}

void Diagram::set_map(std::size_t e, int i, QMatrix m) {
  require(i >= 0 && i < shape_.r(), "direction out of range");
  require(has(e) && shape_.element(e)[static_cast<std::size_t>(i)] > 0, "no arrow in that direction");
  maps_[e][static_cast<std::size_t>(i)] = std::move(m);
}

QMatrix Diagram::composite(std::size_t from, std::size_t to) const {
  Tuple cur = shape_.element(from);
  const Tuple target = shape_.element(to);
  require(leq(target, cur), "no arrow between these elements");
  QMatrix acc = QMatrix::identity(static_cast<std::size_t>(dims_[from]));
  std::size_t at = from;
  for (int i = 0; i < shape_.r(); ++i)
    while (cur[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(i)]) {
      acc = map(at, i) * acc;
      cur = minus_unit(cur, i);
      at = shape_.index_of(cur);
    }
  return acc;
}

void Diagram::validate() const {
  const int r = shape_.r();
  for (std::size_t e = 0; e < shape_.size(); ++e) {
    if (!has(e)) continue;
    const Tuple c = shape_.element(e);
    for (int i = 0; i < r; ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      std::size_t t = shape_.index_of(minus_unit(c, i));
      const QMatrix& m = map(e, i);
      require(m.rows() == static_cast<std::size_t>(dims_[t]) && m.cols() == static_cast<std::size_t>(dims_[e]),
              "map from " + to_string(shape_.to_user(c)) + " in direction " + std::to_string(i + 1) +
                  " has the wrong shape");
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        if (c[static_cast<std::size_t>(i)] == 0 || c[static_cast<std::size_t>(j)] == 0) continue;
        std::size_t ei = shape_.index_of(minus_unit(c, i));
        std::size_t ej = shape_.index_of(minus_unit(c, j));
        if (map(ei, j) * map(e, i) != map(ej, i) * map(e, j))
          throw InvalidInput("square at " + to_string(shape_.to_user(c)) + " in directions " + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + " does not commute");
      }
  }
}

Diagram Diagram::restrict_to_sub() const {
  Diagram out(shape_, true);
  for (std::size_t e = 0; e < shape_.size(); ++e) {
    if (!shape_.in_sub(e)) continue;
    out.dims_[e] = dims_[e];
    out.maps_[e] = maps_[e];
  }
  return out;
}

namespace {

// Kernel of the difference map over unit arrows inside `elements`.
struct HasseLimit {
  QMatrix basis;  // columns span the limit inside the direct sum
  std::map<std::size_t, std::size_t> offset;
  std::size_t total = 0;
};

HasseLimit hasse_limit(const Diagram& f, const std::vector<std::size_t>& elements) {
  const Shape& shape = f.shape();
  HasseLimit out;
  for (std::size_t e : elements) {
    out.offset[e] = out.total;
    out.total += static_cast<std::size_t>(f.dim(e));
  }
  std::size_t rows = 0;
  std::vector<std::tuple<std::size_t, int, std::size_t>> arrows;
  for (std::size_t e : elements) {
    const Tuple c = shape.element(e);
    for (int i = 0; i < shape.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      std::size_t t = shape.index_of(minus_unit(c, i));
      if (!out.offset.count(t)) continue;
      arrows.emplace_back(e, i, t);
      rows += static_cast<std::size_t>(f.dim(t));
    }
  }
  QMatrix diff(rows, out.total);
  std::size_t row = 0;
  for (const auto& [e, i, t] : arrows) {
    const QMatrix& m = f.map(e, i);
    for (std::size_t a = 0; a < m.rows(); ++a) {
      for (std::size_t b = 0; b < m.cols(); ++b) diff(row + a, out.offset[e] + b) = m(a, b);
      diff(row + a, out.offset[t] + a) -= 1;
    }
    row += m.rows();
  }
  out.basis = linalg::nullspace(diff);
  return out;
}

QMatrix block_rows(const QMatrix& m, std::size_t start, std::size_t count) {
  QMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(start + i, j);
  return out;
}

std::vector<std::size_t> sub_below(const Shape& shape, const Tuple& c) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < shape.size(); ++s) {
    const Tuple t = shape.element(s);
    if (shape.in_sub(t) && leq(t, c)) out.push_back(s);
  }
  return out;
}

}  // namespace

RkeReport is_rke_from(const Diagram& f) {
  require(!f.on_sub_only(), "is_rke_from needs a diagram on the full poset");
  f.validate();
  const Shape& shape = f.shape();
  const int r = shape.r();
  RkeReport rep;
  for (std::size_t e = 0; e < shape.size(); ++e) {
    const Tuple c = shape.element(e);
    if (shape.in_sub(c)) continue;
    std::vector<int> dirs;
    for (int i = 0; i < r; ++i)
      if (c[static_cast<std::size_t>(i)] > 0) dirs.push_back(i);
    // Punctured unit cube: c minus a nonempty subset of dirs.
    std::vector<std::size_t> punctured;
    for (unsigned mask = 1; mask < (1u << dirs.size()); ++mask) {
      Tuple t = c;
      for (std::size_t b = 0; b < dirs.size(); ++b)
        if (mask & (1u << b)) t = minus_unit(t, dirs[b]);
      punctured.push_back(shape.index_of(t));
    }
    std::sort(punctured.begin(), punctured.end());
    HasseLimit lim = hasse_limit(f, punctured);
    const auto n = static_cast<std::size_t>(f.dim(e));
    bool ok = lim.basis.cols() == n;
    if (ok && n > 0) {
      std::vector<QMatrix> blocks;
      for (std::size_t t : punctured) blocks.push_back(f.composite(e, t));
      ok = linalg::rank(linalg::vstack(blocks, n)) == n;
    }
    if (!ok) {
      rep.pass = false;
      rep.failing = shape.to_user(c);
      return rep;
    }
  }
  return rep;
}

Diagram pointwise_rke(const Diagram& g) {
  require(g.on_sub_only(), "pointwise_rke needs a diagram supported on the sub-poset");
  g.validate();
  const Shape& shape = g.shape();
  Diagram out(shape, false);
  struct Value {
    HasseLimit lim;
    std::vector<std::size_t> below;
  };
  std::map<std::size_t, Value> values;

  for (std::size_t e = 0; e < shape.size(); ++e) {
    const Tuple c = shape.element(e);
    if (shape.in_sub(c)) {
      out.set_dim(e, g.dim(e));
      for (int i = 0; i < shape.r(); ++i)
        if (c[static_cast<std::size_t>(i)] > 0) out.set_map(e, i, g.map(e, i));
      continue;
    }
    Value v{{}, sub_below(shape, c)};
    v.lim = hasse_limit(g, v.below);
    out.set_dim(e, static_cast<int>(v.lim.basis.cols()));
    for (int i = 0; i < shape.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      std::size_t t = shape.index_of(minus_unit(c, i));
      if (shape.in_sub(t)) {
        out.set_map(e, i, block_rows(v.lim.basis, v.lim.offset.at(t), static_cast<std::size_t>(g.dim(t))));
        continue;
      }
      // Project onto the smaller comma set and re-express in its limit basis.
      const Value& w = values.at(t);
      QMatrix projected(w.lim.total, v.lim.basis.cols());
      for (std::size_t s : w.below) {
        auto dim = static_cast<std::size_t>(g.dim(s));
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < projected.cols(); ++b)
            projected(w.lim.offset.at(s) + a, b) = v.lim.basis(v.lim.offset.at(s) + a, b);
      }
      QMatrix m(w.lim.basis.cols(), v.lim.basis.cols());
      if (m.rows() > 0 && m.cols() > 0) {
        auto x = linalg::solve_unique(w.lim.basis, projected);
        if (!x) throw ConsistencyError("comma limits are not compatible");
        m = *x;
      }
      out.set_map(e, i, std::move(m));
    }
    values.emplace(e, std::move(v));
  }
  return out;
}

bool matches_extension(const Diagram& f) {
  require(!f.on_sub_only(), "matches_extension needs a diagram on the full poset");
  const Diagram ext = pointwise_rke(f.restrict_to_sub());
  const Shape& shape = f.shape();
  for (std::size_t e = 0; e < shape.size(); ++e) {
    const Tuple c = shape.element(e);
    if (shape.in_sub(c)) continue;
    if (ext.dim(e) != f.dim(e)) return false;
    const auto n = static_cast<std::size_t>(f.dim(e));
    if (n == 0) continue;
    std::vector<QMatrix> blocks;
    for (std::size_t s : sub_below(shape, c)) blocks.push_back(f.composite(e, s));
    if (linalg::rank(linalg::vstack(blocks, n)) != n) return false;
  }
  return true;
}

Limit limit_over(const Diagram& f, const std::vector<std::size_t>& elements) {
  for (std::size_t e : elements) require(f.has(e), "limit over elements outside the diagram's support");
  HasseLimit lim = hasse_limit(f, elements);
  Limit out;
  out.dimension = static_cast<int>(lim.basis.cols());
  for (std::size_t e : elements) {
    out.elements.push_back(e);
    out.projections.push_back(block_rows(lim.basis, lim.offset.at(e), static_cast<std::size_t>(f.dim(e))));
  }
  return out;
}

Limit truncated_limit(const Diagram& f) {
  f.validate();
  std::vector<std::size_t> sub;
  for (std::size_t e = 0; e < f.shape().size(); ++e)
    if (f.shape().in_sub(e)) sub.push_back(e);
  return limit_over(f, sub);
}

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// Product of a few elementary operations with multipliers in [-2, 2], and its inverse.
std::pair<QMatrix, QMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  QMatrix p = QMatrix::identity(n), inv = QMatrix::identity(n);
  if (n < 2) return {p, inv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int step = 0; step < 3; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    int q = mult(rng);
    // p <- E p with E adding q times row b to row a; inv <- inv E^{-1}.
    for (std::size_t j = 0; j < n; ++j) p(a, j) += q * p(b, j);
    for (std::size_t i = 0; i < n; ++i) inv(i, b) -= q * inv(i, a);
  }
  return {p, inv};
}

void twist(Diagram& f, std::mt19937_64& rng) {
  const Shape& shape = f.shape();
  std::vector<std::pair<QMatrix, QMatrix>> change;
  for (std::size_t e = 0; e < shape.size(); ++e) change.push_back(random_unimodular(rng, static_cast<std::size_t>(f.dim(e))));
  for (std::size_t e = 0; e < shape.size(); ++e) {
    const Tuple c = shape.element(e);
    for (int i = 0; i < shape.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      std::size_t t = shape.index_of(minus_unit(c, i));
      f.set_map(e, i, change[t].first * f.map(e, i) * change[e].second);
    }
  }
}

// Direct sum of interval modules on random boxes.
Diagram interval_sum(const Shape& shape, std::mt19937_64& rng, int max_dim) {
  const auto r = static_cast<std::size_t>(shape.r());
  std::vector<std::pair<Tuple, Tuple>> boxes;
  std::vector<int> dims(shape.size(), 0);
  std::uniform_int_distribution<int> attempts(0, 3 * max_dim + 2);
  int tries = attempts(rng);
  for (int t = 0; t < tries; ++t) {
    Tuple lo(r), hi(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::uniform_int_distribution<int> coord(0, shape.extents()[i]);
      int a = coord(rng), b = coord(rng);
      lo[i] = std::min(a, b);
      hi[i] = std::max(a, b);
    }
    bool fits = true;
    for (std::size_t e = 0; e < shape.size() && fits; ++e) {
      Tuple c = shape.element(e);
      if (leq(lo, c) && leq(c, hi) && dims[e] >= max_dim) fits = false;
    }
    if (!fits) continue;
    for (std::size_t e = 0; e < shape.size(); ++e) {
      Tuple c = shape.element(e);
      if (leq(lo, c) && leq(c, hi)) ++dims[e];
    }
    boxes.emplace_back(lo, hi);
  }
  Diagram f(shape, false);
  for (std::size_t e = 0; e < shape.size(); ++e) f.set_dim(e, dims[e]);
  auto position = [&](const Tuple& c) {
    std::vector<int> pos(boxes.size(), -1);
    int k = 0;
    for (std::size_t b = 0; b < boxes.size(); ++b)
      if (leq(boxes[b].first, c) && leq(c, boxes[b].second)) pos[b] = k++;
    return pos;
  };
  for (std::size_t e = 0; e < shape.size(); ++e) {
    const Tuple c = shape.element(e);
    auto from = position(c);
    for (int i = 0; i < shape.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      Tuple tc = minus_unit(c, i);
      std::size_t t = shape.index_of(tc);
      auto to = position(tc);
      QMatrix m(static_cast<std::size_t>(dims[t]), static_cast<std::size_t>(dims[e]));
      for (std::size_t b = 0; b < boxes.size(); ++b)
        if (from[b] >= 0 && to[b] >= 0) m(static_cast<std::size_t>(to[b]), static_cast<std::size_t>(from[b])) = 1;
      f.set_map(e, i, std::move(m));
    }
  }
  return f;
}

}  // namespace

Diagram random_diagram(const Shape& shape, std::uint64_t seed, int max_dim, bool extended) {
  require(max_dim >= 0, "max_dim must be nonnegative");
  std::mt19937_64 rng(seed);
  Diagram f(shape, false);
  if (shape.r() == 1) {
    // A chain: any matrices commute.
    std::uniform_int_distribution<int> dim(0, max_dim);
    for (std::size_t e = 0; e < shape.size(); ++e) f.set_dim(e, dim(rng));
    for (std::size_t e = 1; e < shape.size(); ++e)
      f.set_map(e, 0, random_matrix(rng, static_cast<std::size_t>(f.dim(e - 1)), static_cast<std::size_t>(f.dim(e))));
  } else {
    f = interval_sum(shape, rng, max_dim);
    twist(f, rng);
  }
  if (extended) {
    f = pointwise_rke(f.restrict_to_sub());
    twist(f, rng);
  }
  return f;
}

std::vector<Tuple> compositions(int n, int parts) {
  std::vector<Tuple> out;
  if (parts <= 0 || n < parts) return out;
  Tuple cur(static_cast<std::size_t>(parts), 1);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    int rest = static_cast<int>(cur.size() - pos - 1);
    for (int v = 1; v <= left - rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::optional<int> degenerate_direction(int d, const Tuple& l, const Tuple& k) {
  require(l.size() == k.size() && !l.empty(), "profile and excisiveness must have the same positive length");
  const int r = static_cast<int>(l.size());
  const int m = d - r + 1;
  for (int x : k)
    if (x < 1 || x > m) return std::nullopt;
  if (tuple_sum(l) <= d || tuple_sum(k) > d) return std::nullopt;
  for (int j = 0; j < r; ++j)
    if (k[static_cast<std::size_t>(j)] <= l[static_cast<std::size_t>(j)] - 1) return j + 1;
  throw ConsistencyError("no degenerate direction for " + to_string(l) + " and " + to_string(k));
}

namespace {

void check_surjection(const Tuple& f, std::size_t r) {
  std::vector<bool> hit(r, false);
  for (int v : f) {
    require(v >= 1 && static_cast<std::size_t>(v) <= r, "map value out of range");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  for (bool h : hit) require(h, "map is not surjective");
}

// The map [s] ->> [r] with consecutive fibers of the given sizes.
Tuple canonical_map(const Tuple& fibers) {
  Tuple f;
  for (std::size_t i = 0; i < fibers.size(); ++i) f.insert(f.end(), static_cast<std::size_t>(fibers[i]), static_cast<int>(i + 1));
  return f;
}

}  // namespace

Tuple crosseffect_degrees(const Tuple& profile, const Tuple& f) {
  check_surjection(f, profile.size());
  std::vector<int> fiber(profile.size(), 0);
  for (int v : f) ++fiber[static_cast<std::size_t>(v - 1)];
  Tuple out;
  for (int v : f) out.push_back(profile[static_cast<std::size_t>(v - 1)] - fiber[static_cast<std::size_t>(v - 1)] + 1);
  return out;
}

Tuple diagonal_degrees(const Tuple& profile, const Tuple& f) {
  require(profile.size() == f.size(), "profile and map must have the same length");
  int r = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  check_surjection(f, static_cast<std::size_t>(r));
  Tuple out(static_cast<std::size_t>(r), 0);
  for (std::size_t j = 0; j < f.size(); ++j) out[static_cast<std::size_t>(f[j] - 1)] += profile[j];
  return out;
}

PigeonholeReport verify_pigeonhole(int d, int r, int s) {
  require(r >= 1 && r <= s && s <= d, "verify_pigeonhole needs 1 <= r <= s <= d");
  PigeonholeReport rep;
  rep.d = d;
  rep.r = r;
  rep.s = s;
  auto fail = [&](std::string why) {
    if (rep.pass) rep.failure = std::move(why);
    rep.pass = false;
  };

  std::vector<Tuple> gens_r, gens_s;
  for (int n = r; n <= d; ++n)
    for (auto& t : compositions(n, r)) gens_r.push_back(t);
  for (int n = s; n <= d; ++n)
    for (auto& t : compositions(n, s)) gens_s.push_back(t);
  const auto fiberings = compositions(s, r);

  // Cross-effects of a generator either vanish or land in degrees <= d - s + 1.
  for (const auto& l : gens_r)
    for (const auto& fib : fiberings) {
      ++rep.crosseffect_cases;
      Tuple deg = crosseffect_degrees(l, canonical_map(fib));
      bool zero = std::any_of(deg.begin(), deg.end(), [](int x) { return x <= 0; });
      bool bounded = std::all_of(deg.begin(), deg.end(), [&](int x) { return x <= d - s + 1; });
      if (!zero && !bounded) fail("cross-effect of " + to_string(l) + " along fibers " + to_string(fib) + " has degrees " + to_string(deg));
      if (!zero && tuple_sum(deg) > d && rep.witnesses.size() < 4)
        rep.witnesses.push_back({"crosseffect", l, fib, deg});
    }

  // Diagonals of generators over [s] are generators over [r].
  for (const auto& e : gens_s)
    for (const auto& fib : fiberings) {
      ++rep.diagonal_cases;
      Tuple deg = diagonal_degrees(e, canonical_map(fib));
      bool ok = tuple_sum(deg) <= d && std::all_of(deg.begin(), deg.end(), [&](int x) { return x <= d - r + 1; });
      if (!ok) fail("diagonal of " + to_string(e) + " along fibers " + to_string(fib) + " has degrees " + to_string(deg));
    }

  // Above the diagonal some merged degree drops below 1.
  const int ms = d - s + 1;
  Tuple k(static_cast<std::size_t>(s), 1);
  while (true) {
    if (tuple_sum(k) > d)
      for (const auto& l : gens_r)
        for (const auto& fib : fiberings) {
          ++rep.vanishing_cases;
          Tuple merged = diagonal_degrees(k, canonical_map(fib));
          bool drops = false;
          for (std::size_t i = 0; i < merged.size(); ++i) drops |= l[i] - merged[i] + 1 < 1;
          if (!drops) fail("no vanishing degree for k = " + to_string(k) + ", generator " + to_string(l) + ", fibers " + to_string(fib));
          if (rep.witnesses.size() < 8 && fib.size() == 1 && r == 1)
            rep.witnesses.push_back({"vanishing", l, k, Tuple{l[0] - merged[0] + 1}});
        }
    std::size_t pos = 0;
    while (pos < k.size() && k[pos] == ms) k[pos++] = 1;
    if (pos == k.size()) break;
    ++k[pos];
  }

  // Generator lemma over [r] and over [s].
  for (int width : {r, s}) {
    const int m = d - width + 1;
    std::vector<Tuple> cube;
    Tuple t(static_cast<std::size_t>(width), 1);
    while (true) {
      cube.push_back(t);
      std::size_t pos = 0;
      while (pos < t.size() && t[pos] == m) t[pos++] = 1;
      if (pos == t.size()) break;
      ++t[pos];
    }
    for (const auto& l : cube) {
      if (tuple_sum(l) <= d) continue;
      for (const auto& kk : cube) {
        if (tuple_sum(kk) > d) continue;
        ++rep.generator_cases;
        auto j = degenerate_direction(d, l, kk);
        if (!j || kk[static_cast<std::size_t>(*j - 1)] > l[static_cast<std::size_t>(*j - 1)] - 1)
          fail("no degenerate direction for " + to_string(l) + " and " + to_string(kk));
      }
    }
    if (r == s) break;
  }
  return rep;
}

}  // namespace gwb::cube
