#include "gwb/epi_cat.hpp"

#include <functional>

namespace gwb::epi {

using finset::FinMap;

SliceObject::SliceObject(Tuple fibers) : fibers_(std::move(fibers)), size_(0) {
  require(!fibers_.empty(), "a slice object needs at least one fiber");
  for (int k : fibers_) require(k >= 1, "fiber sizes must be positive: " + gwb::to_string(fibers_));
  size_ = tuple_sum(fibers_);
}

SliceObject SliceObject::from_structure_map(const FinMap& structure_map) {
  require(structure_map.is_surjective(), "structure map must be surjective");
  Tuple fibers(static_cast<std::size_t>(structure_map.target_size()), 0);
  for (int v : structure_map.values()) ++fibers[static_cast<std::size_t>(v - 1)];
  return SliceObject(std::move(fibers));
}

SliceObject SliceObject::final_object(int r) { return SliceObject(Tuple(static_cast<std::size_t>(r), 1)); }

FinMap SliceObject::structure_map() const {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < r(); ++i)
    for (int j = 0; j < fibers_[static_cast<std::size_t>(i)]; ++j) values.push_back(i + 1);
  return FinMap(size_, r(), std::move(values));
}

int SliceObject::fiber_of(int x) const {
  int acc = 0;
  for (int i = 0; i < r(); ++i) {
    acc += fibers_[static_cast<std::size_t>(i)];
    if (x <= acc) return i + 1;
  }
  throw InvalidInput("element outside slice object");
}

int SliceObject::fiber_start(int i) const {
  int acc = 1;
  for (int j = 0; j < i - 1; ++j) acc += fibers_[static_cast<std::size_t>(j)];
  return acc;
}

SliceMorphism make_morphism(const SliceObject& source, const SliceObject& target, const FinMap& map) {
  require(source.r() == target.r(), "morphism between slices over different [r]");
  require(map.source_size() == source.size() && map.target_size() == target.size(),
          "morphism sizes do not match its objects");
  require(map.is_surjective(), "morphisms of Epi are surjections");
  for (int x = 1; x <= source.size(); ++x)
    require(target.fiber_of(map(x)) == source.fiber_of(x), "morphism does not commute with the maps to [r]");
  return SliceMorphism{source, target, map};
}

SliceMorphism compose(const SliceMorphism& g, const SliceMorphism& f) {
  require(f.target == g.source, "compose: objects do not match");
  return SliceMorphism{f.source, g.target, finset::compose(g.map, f.map)};
}

std::vector<SliceObject> enumerate_objects(int d, int r) {
  require(r >= 1 && d >= 1, "enumerate_objects: d and r must be positive");
  require(r <= d, "enumerate_objects: r must not exceed d");
  std::vector<SliceObject> out;
  for (int total = r; total <= d; ++total) {
    // Compositions of `total` into r positive parts, lexicographic.
    Tuple parts(static_cast<std::size_t>(r), 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == r - 1) {
        parts[static_cast<std::size_t>(pos)] = left;
        out.emplace_back(parts);
        return;
      }
      for (int k = 1; k <= left - (r - 1 - pos); ++k) {
        parts[static_cast<std::size_t>(pos)] = k;
        rec(pos + 1, left - k);
      }
    };
    rec(0, total);
  }
  return out;
}

std::vector<FinMap> hom_set(const SliceObject& u, const SliceObject& v) {
  require(u.r() == v.r(), "hom_set: objects lie over different [r]");
  const int r = u.r();
  std::vector<std::vector<FinMap>> per_fiber;
  for (int i = 0; i < r; ++i) {
    auto s = finset::enumerate_surjections(u.fibers()[static_cast<std::size_t>(i)], v.fibers()[static_cast<std::size_t>(i)]);
    if (s.empty()) return {};
    per_fiber.push_back(std::move(s));
  }
  // Fibers are consecutive, so the product order with the first fiber most
  // significant is the lexicographic order of whole value sequences.
  std::vector<FinMap> out;
  std::vector<std::size_t> choice(static_cast<std::size_t>(r), 0);
  while (true) {
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(u.size()));
    for (int i = 0; i < r; ++i) {
      const int offset = v.fiber_start(i + 1) - 1;
      for (int x : per_fiber[static_cast<std::size_t>(i)][choice[static_cast<std::size_t>(i)]].values()) values.push_back(x + offset);
    }
    out.emplace_back(u.size(), v.size(), std::move(values));
    int pos = r - 1;
    while (pos >= 0 && choice[static_cast<std::size_t>(pos)] + 1 == per_fiber[static_cast<std::size_t>(pos)].size()) {
      choice[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[static_cast<std::size_t>(pos)];
  }
  return out;
}

Integer hom_count(const SliceObject& u, const SliceObject& v) {
  require(u.r() == v.r(), "hom_count: objects lie over different [r]");
  Integer out = 1;
  for (int i = 0; i < u.r(); ++i)
    out *= finset::surjection_count(u.fibers()[static_cast<std::size_t>(i)], v.fibers()[static_cast<std::size_t>(i)]);
  return out;
}

OrbitalityReport check_atomic_orbital(int d, int r) {
  OrbitalityReport report;
  const auto objects = enumerate_objects(d, r);
  report.iso_classes = objects.size();
  auto fail = [&](const std::string& why) {
    if (report.pass) report.counterexample = why;
    report.pass = false;
  };
  for (const auto& u : objects) {
    for (const auto& e : hom_set(u, u)) {
      ++report.endomorphisms_checked;
      if (!e.is_bijective()) fail("non-invertible endomorphism of " + u.to_string());
    }
  }
  for (const auto& u : objects)
    for (const auto& v : objects) {
      const auto forward = hom_set(u, v);
      if (forward.empty()) continue;
      const auto backward = hom_set(v, u);
      for (const auto& f : forward)
        for (const auto& g : backward) {
          ++report.retract_pairs_checked;
          if (finset::compose(g, f).is_bijective() && !(f.is_bijective() && g.is_bijective()))
            fail("retract pair through " + v.to_string() + " with non-invertible factor");
        }
    }
  return report;
}

}  // namespace gwb::epi
