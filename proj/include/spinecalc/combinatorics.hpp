#pragma once

#include <stdexcept>
#include <vector>

namespace spinecalc {

// Exact C(n, k) in 64-bit arithmetic. Desk-scale arguments only.
inline long long binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  // r * (n-k+i) is divisible by i at every step
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All tuples of `parts` non-negative integers summing to `total`, in
// ascending lexicographic order.
inline std::vector<std::vector<int>> compositions(int parts, int total) {
  if (parts <= 0) throw std::invalid_argument("compositions: parts must be positive");
  if (total < 0) throw std::invalid_argument("compositions: total must be non-negative");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace spinecalc
