#include "gwb/finset.hpp"

#include <algorithm>

namespace gwb::finset {

FinMap::FinMap(int source_size, int target_size, std::vector<int> values)
    : source_size_(source_size), target_size_(target_size), values_(std::move(values)) {
  require(source_size_ >= 1 && target_size_ >= 1, "finite sets must be nonempty");
  require(static_cast<int>(values_.size()) == source_size_, "value sequence length must equal the source size");
  for (int v : values_) require(v >= 1 && v <= target_size_, "map value outside [1, target_size]");
}

FinMap FinMap::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) values[static_cast<std::size_t>(x)] = x + 1;
  return FinMap(n, n, std::move(values));
}

FinMap FinMap::collapse(int n) { return FinMap(n, 1, std::vector<int>(static_cast<std::size_t>(n), 1)); }

bool FinMap::is_surjective() const {
  std::vector<bool> hit(static_cast<std::size_t>(target_size_) + 1, false);
  int count = 0;
  for (int v : values_)
    if (!hit[static_cast<std::size_t>(v)]) {
      hit[static_cast<std::size_t>(v)] = true;
      ++count;
    }
  return count == target_size_;
}

bool FinMap::is_bijective() const { return source_size_ == target_size_ && is_surjective(); }

FinMap compose(const FinMap& g, const FinMap& f) {
  require(f.target_size() == g.source_size(), "compose: target of f differs from source of g");
  std::vector<int> values;
  values.reserve(f.values().size());
  for (int v : f.values()) values.push_back(g(v));
  return FinMap(f.source_size(), g.target_size(), std::move(values));
}

std::vector<FinMap> enumerate_surjections(int k, int i) {
  require(k >= 1 && i >= 1, "enumerate_surjections: sizes must be positive");
  std::vector<FinMap> out;
  if (i > k) return out;
  std::vector<int> values(static_cast<std::size_t>(k), 1);
  std::vector<int> hits(static_cast<std::size_t>(i) + 1, 0);
  // Odometer over [i]^k in lexicographic order with running hit counts.
  hits[1] = k;
  int covered = 1;
  while (true) {
    if (covered == i) out.emplace_back(k, i, values);
    int pos = k - 1;
    while (pos >= 0 && values[static_cast<std::size_t>(pos)] == i) --pos;
    if (pos < 0) break;
    for (int p = pos; p < k; ++p) {
      int& v = values[static_cast<std::size_t>(p)];
      if (--hits[static_cast<std::size_t>(v)] == 0) --covered;
      v = (p == pos) ? v + 1 : 1;
      if (hits[static_cast<std::size_t>(v)]++ == 0) ++covered;
    }
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(int n) {
  require(n >= 0, "factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer surjection_count(int k, int i) {
  require(k >= 1 && i >= 1, "surjection_count: sizes must be positive");
  Integer total = 0;
  for (int j = 0; j <= i; ++j) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i - j), static_cast<unsigned long>(k));
    const Integer term = binomial(i, j) * power;
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::vector<FinMap> elementary_factorization(const FinMap& f) {
  require(f.is_surjective(), "elementary_factorization: map must be surjective");
  std::vector<FinMap> chain;
  FinMap rest = f;
  while (rest.source_size() > rest.target_size()) {
    const auto& v = rest.values();
    int x = 0, y = 0;
    for (int a = 0; a < rest.source_size() && !y; ++a)
      for (int b = a + 1; b < rest.source_size(); ++b)
        if (v[static_cast<std::size_t>(a)] == v[static_cast<std::size_t>(b)]) {
          x = a + 1;
          y = b + 1;
          break;
        }
    const int n = rest.source_size();
    std::vector<int> q(static_cast<std::size_t>(n));
    for (int z = 1; z <= n; ++z) q[static_cast<std::size_t>(z - 1)] = z == y ? x : (z > y ? z - 1 : z);
    std::vector<int> reduced(static_cast<std::size_t>(n - 1));
    for (int z = 1; z <= n; ++z) reduced[static_cast<std::size_t>(q[static_cast<std::size_t>(z - 1)] - 1)] = rest(z);
    chain.emplace_back(n, n - 1, std::move(q));
    rest = FinMap(n - 1, rest.target_size(), std::move(reduced));
  }
  if (chain.empty()) return {f};
  // Absorb the remaining bijection into the last step.
  chain.back() = compose(rest, chain.back());
  return chain;
}

}  // namespace gwb::finset
