#include "gwb/mackey.hpp"

#include <algorithm>
#include <map>

#include "gwb/fin_coprod.hpp"

namespace gwb::mackey {

using epi::SliceObject;
using finset::FinMap;

Skeleton::Skeleton(int d, int r) : d_(d), r_(r), objects_(epi::enumerate_objects(d, r)) {
  homs_.resize(objects_.size() * objects_.size());
  for (std::size_t u = 0; u < objects_.size(); ++u)
    for (std::size_t v = 0; v < objects_.size(); ++v)
      if (objects_[v].size() <= objects_[u].size()) homs_[u * size() + v] = epi::hom_set(objects_[u], objects_[v]);
}

std::size_t Skeleton::index_of(const Tuple& fibers) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].fibers() == fibers) return i;
  throw InvalidInput("object " + to_string(fibers) + " is not in Epi_{" + std::to_string(d_) + "," +
                     std::to_string(r_) + "}");
}

std::size_t Skeleton::morphism_index(std::size_t u, std::size_t v, const FinMap& f) const {
  const auto& hs = homs(u, v);
  auto it = std::lower_bound(hs.begin(), hs.end(), f);
  if (it == hs.end() || *it != f) throw ConsistencyError("map is not a morphism of the skeleton");
  return static_cast<std::size_t>(it - hs.begin());
}

std::size_t Skeleton::identity_index(std::size_t u) const {
  return morphism_index(u, u, FinMap::identity(objects_[u].size()));
}

MackeyData::MackeyData(int d, int r, std::vector<int> ranks)
    : skeleton_(std::make_shared<Skeleton>(d, r)), ranks_(std::move(ranks)) {
  require(ranks_.size() == n(), "expected " + std::to_string(n()) + " ranks, got " + std::to_string(ranks_.size()));
  for (int k : ranks_) require(k >= 0, "ranks must be nonnegative");
  restrictions_.resize(n() * n());
  transfers_.resize(n() * n());
  for (std::size_t u = 0; u < n(); ++u)
    for (std::size_t v = 0; v < n(); ++v) {
      std::size_t count = skeleton_->homs(u, v).size();
      auto ru = static_cast<std::size_t>(ranks_[u]), rv = static_cast<std::size_t>(ranks_[v]);
      restrictions_[u * n() + v].assign(count, IntMatrix(ru, rv));
      transfers_[u * n() + v].assign(count, IntMatrix(rv, ru));
    }
  labels.resize(n());
}

void MackeyData::validate_shapes() const {
  for (std::size_t u = 0; u < n(); ++u)
    for (std::size_t v = 0; v < n(); ++v) {
      auto ru = static_cast<std::size_t>(ranks_[u]), rv = static_cast<std::size_t>(ranks_[v]);
      std::size_t count = skeleton_->homs(u, v).size();
      const auto& rs = restrictions_[u * n() + v];
      const auto& ts = transfers_[u * n() + v];
      require(rs.size() == count && ts.size() == count, "wrong number of matrices for a hom set");
      for (std::size_t f = 0; f < count; ++f) {
        std::string where = skeleton_->objects()[u].to_string() + "->" + skeleton_->objects()[v].to_string() + "#" +
                            std::to_string(f);
        require(rs[f].rows() == ru && rs[f].cols() == rv, "restriction " + where + " has the wrong shape");
        require(ts[f].rows() == rv && ts[f].cols() == ru, "transfer " + where + " has the wrong shape");
      }
    }
}

bool operator==(const MackeyData& a, const MackeyData& b) {
  return a.d() == b.d() && a.r() == b.r() && a.ranks_ == b.ranks_ && a.restrictions_ == b.restrictions_ &&
         a.transfers_ == b.transfers_;
}

namespace {

epi::SliceMorphism morphism(const Skeleton& s, std::size_t u, std::size_t v, std::size_t f) {
  return {s.objects()[u], s.objects()[v], s.homs(u, v)[f]};
}

std::string describe(const Skeleton& s, std::size_t u, std::size_t v, std::size_t f) {
  return s.objects()[u].to_string() + " -> " + s.objects()[v].to_string() + " via " +
         to_string(s.homs(u, v)[f].values());
}

}  // namespace

AxiomReport check_axioms(const MackeyData& m) {
  m.validate_shapes();
  const Skeleton& s = m.skeleton();
  const std::size_t n = s.size();
  AxiomReport rep;

  for (std::size_t u = 0; u < n; ++u) {
    std::size_t id = s.identity_index(u);
    auto one = IntMatrix::identity(static_cast<std::size_t>(m.rank(u)));
    ++rep.identities_checked;
    if (m.restriction(u, u, id) != one || m.transfer(u, u, id) != one) {
      rep.pass = false;
      rep.failure = "identity of " + s.objects()[u].to_string() + " does not act as the identity";
      return rep;
    }
  }

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const auto& fs = s.homs(u, v);
        const auto& gs = s.homs(v, w);
        if (fs.empty() || gs.empty()) continue;
        for (std::size_t f = 0; f < fs.size(); ++f)
          for (std::size_t g = 0; g < gs.size(); ++g) {
            std::size_t h = s.morphism_index(u, w, finset::compose(gs[g], fs[f]));
            ++rep.compositions_checked;
            if (m.restriction(u, w, h) != m.restriction(u, v, f) * m.restriction(v, w, g)) {
              rep.pass = false;
              rep.failure = "restriction is not functorial at " + describe(s, u, v, f) + " then " + describe(s, v, w, g);
              return rep;
            }
            if (m.transfer(u, w, h) != m.transfer(v, w, g) * m.transfer(u, v, f)) {
              rep.pass = false;
              rep.failure = "transfer is not functorial at " + describe(s, u, v, f) + " then " + describe(s, v, w, g);
              return rep;
            }
          }
      }

  // Double cosets. f: A -> E, g: B -> E.
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t a = 0; a < n; ++a) {
      const auto& fs = s.homs(a, e);
      if (fs.empty()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const auto& gs = s.homs(b, e);
        if (gs.empty()) continue;
        for (std::size_t f = 0; f < fs.size(); ++f)
          for (std::size_t g = 0; g < gs.size(); ++g) {
            ++rep.cospans_checked;
            IntMatrix lhs = m.restriction(a, e, f) * m.transfer(b, e, g);
            IntMatrix rhs(static_cast<std::size_t>(m.rank(a)), static_cast<std::size_t>(m.rank(b)));
            for (const auto& good : coprod::slice_good_subsets(morphism(s, a, e, f), morphism(s, b, e, g), s.d())) {
              std::size_t x = s.index_of(good.object);
              std::size_t to_a = s.morphism_index(x, a, good.subset.to_a);
              std::size_t to_b = s.morphism_index(x, b, good.subset.to_b);
              rhs += m.transfer(x, a, to_a) * m.restriction(x, b, to_b);
            }
            if (lhs != rhs) {
              rep.pass = false;
              rep.failure = "double coset identity fails for f: " + describe(s, a, e, f) + " and g: " +
                            describe(s, b, e, g) + "; R_f T_g = " + linalg::to_string(lhs) +
                            ", sum of T R = " + linalg::to_string(rhs);
              rep.cospan = CospanFailure{s.objects()[a].fibers(), s.objects()[b].fibers(), s.objects()[e].fibers(),
                                         f, g, lhs, rhs};
              return rep;
            }
          }
      }
    }
  return rep;
}

std::vector<std::vector<span::SpanKey>> representable_basis(int d, int r, const Tuple& v_fibers) {
  Skeleton s(d, r);
  std::size_t v = s.index_of(v_fibers);
  std::vector<std::vector<span::SpanKey>> basis(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) {
    std::vector<span::SpanKey> keys;
    for (std::size_t w = 0; w < s.size(); ++w)
      for (const auto& left : s.homs(w, u))
        for (const auto& right : s.homs(w, v))
          keys.push_back(span::connected_key(s.objects()[u], left, s.objects()[v], right));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    basis[u] = std::move(keys);
  }
  return basis;
}

MackeyData representable(int d, int r, const Tuple& v_fibers) {
  auto basis = representable_basis(d, r, v_fibers);
  std::vector<int> ranks;
  for (const auto& b : basis) ranks.push_back(static_cast<int>(b.size()));
  MackeyData m(d, r, ranks);
  const Skeleton& s = m.skeleton();
  const SliceObject& v = s.objects()[s.index_of(v_fibers)];

  std::vector<std::map<span::SpanKey, std::size_t>> position(s.size());
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t i = 0; i < basis[u].size(); ++i) {
      position[u][basis[u][i]] = i;
      // Apex elements as left:right leg values.
      std::string label;
      for (const auto& [l, rr] : basis[u][i].pairs)
        label += (label.empty() ? "" : " ") + std::to_string(l) + ":" + std::to_string(rr);
      m.labels[u].push_back("{" + label + "}");
    }

  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t up = 0; up < s.size(); ++up) {
      const auto& hs = s.homs(u, up);
      for (std::size_t fi = 0; fi < hs.size(); ++fi) {
        const FinMap& f = hs[fi];
        // Transfer: postcompose the left leg.
        IntMatrix& t = m.transfer(u, up, fi);
        for (std::size_t j = 0; j < basis[u].size(); ++j) {
          span::Span sp = basis[u][j].to_span();
          auto key = span::connected_key(s.objects()[up], finset::compose(f, sp.left_legs[0]), v, sp.right_legs[0]);
          t(position[up].at(key), j) += 1;
        }
        // Restriction: pull the left leg back along f.
        IntMatrix& res = m.restriction(u, up, fi);
        epi::SliceMorphism fm{s.objects()[u], s.objects()[up], f};
        for (std::size_t j = 0; j < basis[up].size(); ++j) {
          span::Span sp = basis[up][j].to_span();
          epi::SliceMorphism lm{sp.apex.components[0], s.objects()[up], sp.left_legs[0]};
          for (const auto& good : coprod::slice_good_subsets(fm, lm, d)) {
            auto key = span::connected_key(s.objects()[u], good.subset.to_a, v,
                                           finset::compose(sp.right_legs[0], good.subset.to_b));
            res(position[u].at(key), j) += 1;
          }
        }
      }
    }
  return m;
}

Family Family::above(const Skeleton& s, int b) {
  std::vector<bool> m(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) m[u] = s.objects()[u].size() > b;
  return Family(std::move(m));
}

Family Family::from_objects(const Skeleton& s, const std::vector<Tuple>& members) {
  std::vector<bool> m(s.size(), false);
  for (const auto& t : members) m[s.index_of(t)] = true;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (!m[v]) continue;
    for (std::size_t u = 0; u < s.size(); ++u)
      if (!m[u] && !s.homs(u, v).empty())
        throw InvalidInput("family is not closed under sources: " + s.objects()[u].to_string() + " maps to " +
                           s.objects()[v].to_string());
  }
  return Family(std::move(m));
}

namespace {

// Express each column of `target` in the basis given by the columns of `basis`.
IntMatrix coordinates(const linalg::BigMatrix& basis, const IntMatrix& target) {
  if (basis.cols() == 0 || target.cols() == 0) return IntMatrix(basis.cols(), target.cols());
  auto x = linalg::solve_unique(linalg::to_rational(basis), linalg::to_rational(target));
  if (!x) throw ConsistencyError("restricted map leaves the vanishing sublattice");
  IntMatrix out(x->rows(), x->cols());
  for (std::size_t i = 0; i < x->rows(); ++i)
    for (std::size_t j = 0; j < x->cols(); ++j) {
      const Rational& q = (*x)(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw ConsistencyError("restricted map is not integral on the vanishing sublattice");
      out(i, j) = q.get_num().get_si();
    }
  return out;
}

IntMatrix to_int(const linalg::BigMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).fits_slong_p()) throw ConsistencyError("kernel basis entry exceeds 64 bits");
      out(i, j) = a(i, j).get_si();
    }
  return out;
}

linalg::BigMatrix to_big(const IntMatrix& a) {
  linalg::BigMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = static_cast<long>(a(i, j));
  return out;
}

}  // namespace

MackeyData restrict_to_cosieve(const MackeyData& m, int b) {
  const Skeleton& s = m.skeleton();
  require(b >= s.r() && b <= s.d(), "cosieve level must satisfy r <= b <= d");
  Family family = Family::above(s, b);

  std::vector<std::size_t> kept;
  for (std::size_t u = 0; u < s.size(); ++u)
    if (!family.contains(u)) kept.push_back(u);

  // Sections at u killed by all restrictions to family members.
  std::vector<linalg::BigMatrix> kernels;
  std::vector<int> ranks;
  for (std::size_t u : kept) {
    std::size_t rows = 0;
    for (std::size_t w = 0; w < s.size(); ++w)
      if (family.contains(w)) rows += s.homs(w, u).size() * static_cast<std::size_t>(m.rank(w));
    linalg::BigMatrix constraints(rows, static_cast<std::size_t>(m.rank(u)));
    std::size_t row = 0;
    for (std::size_t w = 0; w < s.size(); ++w) {
      if (!family.contains(w)) continue;
      for (std::size_t h = 0; h < s.homs(w, u).size(); ++h) {
        const IntMatrix& rh = m.restriction(w, u, h);
        for (std::size_t i = 0; i < rh.rows(); ++i, ++row)
          for (std::size_t j = 0; j < rh.cols(); ++j) constraints(row, j) = static_cast<long>(rh(i, j));
      }
    }
    kernels.push_back(linalg::integer_kernel(constraints));
    ranks.push_back(static_cast<int>(kernels.back().cols()));
  }

  MackeyData out(b, s.r(), ranks);
  const Skeleton& t = out.skeleton();
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (t.objects()[i] != s.objects()[kept[i]]) throw ConsistencyError("skeleton orders disagree");

  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      std::size_t u = kept[i], v = kept[j];
      for (std::size_t f = 0; f < s.homs(u, v).size(); ++f) {
        // R_f K_v = K_u X and T_f K_u = K_v Y.
        IntMatrix rk = to_int(to_big(m.restriction(u, v, f)) * kernels[j]);
        IntMatrix tk = to_int(to_big(m.transfer(u, v, f)) * kernels[i]);
        out.restriction(i, j, f) = coordinates(kernels[i], rk);
        out.transfer(i, j, f) = coordinates(kernels[j], tk);
      }
    }
  return out;
}

MackeyData restrict_index(const MackeyData& m, int b) {
  const Skeleton& s = m.skeleton();
  require(b >= s.r() && b <= s.d(), "level must satisfy r <= b <= d");
  std::vector<int> ranks;
  std::vector<std::size_t> kept;
  for (std::size_t u = 0; u < s.size(); ++u)
    if (s.objects()[u].size() <= b) {
      kept.push_back(u);
      ranks.push_back(m.rank(u));
    }
  MackeyData out(b, s.r(), ranks);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.labels[i] = m.labels[kept[i]];
    for (std::size_t j = 0; j < kept.size(); ++j)
      for (std::size_t f = 0; f < s.homs(kept[i], kept[j]).size(); ++f) {
        out.restriction(i, j, f) = m.restriction(kept[i], kept[j], f);
        out.transfer(i, j, f) = m.transfer(kept[i], kept[j], f);
      }
  }
  return out;
}

std::vector<Tuple> vanishing_locus(const MackeyData& m) {
  std::vector<Tuple> out;
  for (std::size_t u = 0; u < m.skeleton().size(); ++u)
    if (m.rank(u) == 0) out.push_back(m.skeleton().objects()[u].fibers());
  return out;
}

bool vanishes_on(const MackeyData& m, const Family& family) {
  for (std::size_t u = 0; u < m.skeleton().size(); ++u)
    if (family.contains(u) && m.rank(u) != 0) return false;
  return true;
}

burnside::BurnsideRing endomorphism_ring_of_unit(int d, int r) {
  Tuple star(static_cast<std::size_t>(r), 1);
  MackeyData m = representable(d, r, star);
  const Skeleton& s = m.skeleton();
  const std::size_t n = s.size();
  auto basis = representable_basis(d, r, star);
  if (basis[0].size() != n) throw ConsistencyError("End of the unit has the wrong rank");

  // Basis span * <- W -> * of M(*) to the index of W.
  std::vector<std::size_t> apex(n);
  for (std::size_t i = 0; i < n; ++i) {
    Tuple fibers(static_cast<std::size_t>(r), 0);
    for (const auto& [l, rr] : basis[0][i].pairs) ++fibers[static_cast<std::size_t>(l - 1)];
    apex[i] = s.index_of(fibers);
  }
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[apex[i]] = i;

  std::vector<std::int64_t> table(n * n * n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    // p_W: W -> *, the only morphism.
    if (s.homs(w, 0).size() != 1) throw ConsistencyError("final object is not final");
    IntMatrix op = m.transfer(w, 0, 0) * m.restriction(w, 0, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t row = 0; row < n; ++row) table[(w * n + v) * n + apex[row]] = op(row, slot[v]);
  }
  auto ring = burnside::BurnsideRing::from_table(d, r, std::move(table));
  auto direct = burnside::BurnsideRing::build(d, r);
  if (ring.table() != direct.table())
    throw ConsistencyError("structure constants from the representable disagree with direct enumeration");
  return ring;
}

}  // namespace gwb::mackey
