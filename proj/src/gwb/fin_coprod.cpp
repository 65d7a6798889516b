#include "gwb/fin_coprod.hpp"

#include <algorithm>

namespace gwb::coprod {

using epi::SliceMorphism;
using epi::SliceObject;
using finset::FinMap;

std::vector<Element> fiber_product_set(const FinMap& f, const FinMap& g) {
  require(f.target_size() == g.target_size(), "fiber product: maps have different targets");
  std::vector<Element> out;
  for (int a = 1; a <= f.source_size(); ++a)
    for (int b = 1; b <= g.source_size(); ++b)
      if (f(a) == g(b)) out.emplace_back(a, b);
  return out;
}

namespace {

struct SubsetSearch {
  const std::vector<Element>& pairs;
  int size_a;
  int size_b;
  int bound;
  std::vector<int> last_a;  // last pair index mentioning a, per a
  std::vector<int> last_b;
  std::vector<int> cover_a;
  std::vector<int> cover_b;
  int uncovered_a;
  int uncovered_b;
  std::vector<int> chosen;
  std::vector<std::vector<int>> found;

  SubsetSearch(const std::vector<Element>& p, int na, int nb, int d)
      : pairs(p), size_a(na), size_b(nb), bound(d),
        last_a(static_cast<std::size_t>(na) + 1, -1), last_b(static_cast<std::size_t>(nb) + 1, -1),
        cover_a(static_cast<std::size_t>(na) + 1, 0), cover_b(static_cast<std::size_t>(nb) + 1, 0),
        uncovered_a(na), uncovered_b(nb) {
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
      last_a[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)] = i;
      last_b[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)] = i;
    }
  }

  // Every uncovered element must still be reachable from index `next` on.
  bool reachable(int next) const {
    for (int a = 1; a <= size_a; ++a)
      if (!cover_a[static_cast<std::size_t>(a)] && last_a[static_cast<std::size_t>(a)] < next) return false;
    for (int b = 1; b <= size_b; ++b)
      if (!cover_b[static_cast<std::size_t>(b)] && last_b[static_cast<std::size_t>(b)] < next) return false;
    return true;
  }

  void run(int next) {
    if (uncovered_a == 0 && uncovered_b == 0) found.push_back(chosen);
    const int room = bound - static_cast<int>(chosen.size());
    if (room <= 0) return;
    for (int i = next; i < static_cast<int>(pairs.size()); ++i) {
      const auto [a, b] = pairs[static_cast<std::size_t>(i)];
      // Skipping pairs before i must not strand an uncovered element.
      if (!reachable(i)) return;
      chosen.push_back(i);
      if (cover_a[static_cast<std::size_t>(a)]++ == 0) --uncovered_a;
      if (cover_b[static_cast<std::size_t>(b)]++ == 0) --uncovered_b;
      if (std::max(uncovered_a, uncovered_b) <= room - 1) run(i + 1);
      if (--cover_a[static_cast<std::size_t>(a)] == 0) ++uncovered_a;
      if (--cover_b[static_cast<std::size_t>(b)] == 0) ++uncovered_b;
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<GoodSubset> good_subsets(const FinMap& f, const FinMap& g, int d) {
  require(f.is_surjective() && g.is_surjective(), "good_subsets: cospan legs must be surjective");
  const auto pairs = fiber_product_set(f, g);
  SubsetSearch search(pairs, f.source_size(), g.source_size(), d);
  search.run(0);
  auto& found = search.found;
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<GoodSubset> out;
  out.reserve(found.size());
  for (const auto& idx : found) {
    std::vector<Element> elements;
    std::vector<int> va, vb;
    for (int i : idx) {
      elements.push_back(pairs[static_cast<std::size_t>(i)]);
      va.push_back(pairs[static_cast<std::size_t>(i)].first);
      vb.push_back(pairs[static_cast<std::size_t>(i)].second);
    }
    const int n = static_cast<int>(idx.size());
    out.push_back(GoodSubset{std::move(elements), FinMap(n, f.source_size(), std::move(va)),
                             FinMap(n, g.source_size(), std::move(vb))});
  }
  return out;
}

std::vector<SliceGoodSubset> slice_good_subsets(const SliceMorphism& f, const SliceMorphism& g, int d) {
  require(f.target == g.target, "slice pullback: cospan legs have different targets");
  std::vector<SliceGoodSubset> out;
  for (auto& u : good_subsets(f.map, g.map, d)) {
    // Pairs are sorted by their A-coordinate and A's fibers are consecutive,
    // so U inherits consecutive fibers over [r].
    std::vector<int> structure;
    for (const auto& [a, b] : u.elements) structure.push_back(f.source.fiber_of(a));
    SliceObject object = SliceObject::from_structure_map(FinMap(u.size(), f.source.r(), structure));
    if (object.structure_map().values() != structure)
      throw ConsistencyError("good subset is not in canonical fiber order");
    out.push_back(SliceGoodSubset{std::move(u), std::move(object)});
  }
  return out;
}

std::vector<SliceObject> FormalCoproduct::sorted() const {
  auto out = components;
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const CoproductMap& m) {
  require(m.component_target.size() == m.source.components.size() && m.maps.size() == m.source.components.size(),
          "coproduct map: one target and one map per source component");
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    require(m.component_target[i] < m.target.components.size(), "coproduct map: target component out of range");
    epi::make_morphism(m.source.components[i], m.target.components[m.component_target[i]], m.maps[i]);
  }
}

CoproductMap connected(const SliceMorphism& m) {
  return CoproductMap{FormalCoproduct{{m.source}}, FormalCoproduct{{m.target}}, {0}, {m.map}};
}

Pullback pullback(const CoproductMap& f, const CoproductMap& g, int d) {
  validate(f);
  validate(g);
  require(f.target.components == g.target.components, "pullback: legs have different targets");
  Pullback out;
  out.to_x.source = out.to_y.source = FormalCoproduct{};
  out.to_x.target = f.source;
  out.to_y.target = g.source;
  for (std::size_t i = 0; i < f.source.components.size(); ++i)
    for (std::size_t j = 0; j < g.source.components.size(); ++j) {
      if (f.component_target[i] != g.component_target[j]) continue;
      const auto& e = f.target.components[f.component_target[i]];
      const SliceMorphism fi{f.source.components[i], e, f.maps[i]};
      const SliceMorphism gj{g.source.components[j], e, g.maps[j]};
      for (auto& u : slice_good_subsets(fi, gj, d)) {
        out.apex.components.push_back(u.object);
        out.to_x.component_target.push_back(i);
        out.to_x.maps.push_back(u.subset.to_a);
        out.to_y.component_target.push_back(j);
        out.to_y.maps.push_back(u.subset.to_b);
      }
    }
  out.to_x.source = out.apex;
  out.to_y.source = out.apex;
  return out;
}

UniversalPropertyReport verify_universal_property(const CoproductMap& f, const CoproductMap& g, int d) {
  const Pullback p = pullback(f, g, d);
  UniversalPropertyReport report;
  const int r = f.target.components.empty() ? 1 : f.target.components.front().r();
  for (const auto& t : epi::enumerate_objects(d, r)) {
    ++report.test_objects;
    Integer lhs = 0;
    for (const auto& c : p.apex.components) lhs += epi::hom_count(t, c);

    // Brute force: composites T -> X -> E and T -> Y -> E, matched exactly.
    auto composites = [&](const CoproductMap& leg) {
      std::vector<std::pair<std::size_t, FinMap>> out;
      for (std::size_t c = 0; c < leg.source.components.size(); ++c)
        for (const auto& a : epi::hom_set(t, leg.source.components[c]))
          out.emplace_back(leg.component_target[c], finset::compose(leg.maps[c], a));
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto xs = composites(f);
    const auto ys = composites(g);
    Integer rhs = 0;
    for (std::size_t i = 0, j = 0; i < xs.size() && j < ys.size();) {
      if (xs[i] < ys[j]) {
        ++i;
      } else if (ys[j] < xs[i]) {
        ++j;
      } else {
        std::size_t i2 = i, j2 = j;
        while (i2 < xs.size() && xs[i2] == xs[i]) ++i2;
        while (j2 < ys.size() && ys[j2] == ys[j]) ++j2;
        rhs += static_cast<unsigned long>((i2 - i) * (j2 - j));
        i = i2;
        j = j2;
      }
    }
    if (lhs != rhs && report.pass) {
      report.pass = false;
      report.failing_object = t.fibers();
      report.lhs = lhs;
      report.rhs = rhs;
    }
  }
  return report;
}

}  // namespace gwb::coprod
