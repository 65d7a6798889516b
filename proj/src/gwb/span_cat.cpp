#include "gwb/span_cat.hpp"

#include <algorithm>

namespace gwb::span {

using epi::SliceObject;
using finset::FinMap;

void validate(const Span& s) {
  require(s.left_foot.r() == s.right_foot.r(), "span feet lie over different [r]");
  require(s.left_legs.size() == s.apex.components.size() && s.right_legs.size() == s.apex.components.size(),
          "span needs one left and one right leg per apex component");
  for (std::size_t c = 0; c < s.apex.components.size(); ++c) {
    epi::make_morphism(s.apex.components[c], s.left_foot, s.left_legs[c]);
    epi::make_morphism(s.apex.components[c], s.right_foot, s.right_legs[c]);
  }
}

Span make_connected(const SliceObject& left_foot, const SliceObject& apex, const SliceObject& right_foot,
                    const FinMap& left_leg, const FinMap& right_leg) {
  Span s{left_foot, right_foot, coprod::FormalCoproduct{{apex}}, {left_leg}, {right_leg}};
  validate(s);
  return s;
}

Span identity_span(const SliceObject& u) {
  const auto id = FinMap::identity(u.size());
  return make_connected(u, u, u, id, id);
}

SpanKey connected_key(const SliceObject& left_foot, const FinMap& left_leg, const SliceObject& right_foot,
                      const FinMap& right_leg) {
  require(left_leg.source_size() == right_leg.source_size(), "span legs have different sources");
  SpanKey key{left_foot.fibers(), right_foot.fibers(), {}};
  for (int x = 1; x <= left_leg.source_size(); ++x) key.pairs.emplace_back(left_leg(x), right_leg(x));
  std::sort(key.pairs.begin(), key.pairs.end());
  return key;
}

Span SpanKey::to_span() const {
  const SliceObject left(left_foot);
  const SliceObject right(right_foot);
  const int n = apex_size();
  std::vector<int> l, r, structure;
  for (const auto& [a, b] : pairs) {
    l.push_back(a);
    r.push_back(b);
    structure.push_back(left.fiber_of(a));
  }
  // Sorted by left value, so the apex fibers over [r] are consecutive.
  const SliceObject apex = SliceObject::from_structure_map(FinMap(n, left.r(), structure));
  return make_connected(left, apex, right, FinMap(n, left.size(), l), FinMap(n, right.size(), r));
}

SpanIsoClass canonicalize(const Span& s) {
  validate(s);
  SpanIsoClass out;
  for (std::size_t c = 0; c < s.apex.components.size(); ++c)
    out.push_back(connected_key(s.left_foot, s.left_legs[c], s.right_foot, s.right_legs[c]));
  std::sort(out.begin(), out.end());
  return out;
}

SpanCombination compose(const Span& s2, const Span& s1, int d) {
  validate(s2);
  validate(s1);
  require(s2.right_foot == s1.left_foot, "span composition: middle feet do not match");
  const SliceObject& middle = s1.left_foot;
  SpanCombination out;
  for (std::size_t i = 0; i < s2.apex.components.size(); ++i)
    for (std::size_t j = 0; j < s1.apex.components.size(); ++j) {
      const epi::SliceMorphism w_leg{s2.apex.components[i], middle, s2.right_legs[i]};
      const epi::SliceMorphism v_leg{s1.apex.components[j], middle, s1.left_legs[j]};
      for (const auto& u : coprod::slice_good_subsets(w_leg, v_leg, d)) {
        const FinMap left = finset::compose(s2.left_legs[i], u.subset.to_a);
        const FinMap right = finset::compose(s1.right_legs[j], u.subset.to_b);
        out[connected_key(s2.left_foot, left, s1.right_foot, right)] += 1;
      }
    }
  return out;
}

}  // namespace gwb::span
