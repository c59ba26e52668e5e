#pragma once

#include <numeric>
#include <vector>

namespace spine::detail {

// Union-find over elements carrying a parity relative to their root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, parity of x relative to root).
  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      par ^= parity_[r];
      r = parent_[r];
    }
    // Path compression.
    int acc = par;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int p = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= p;
      x = next;
    }
    return {r, par};
  }

  // Demands parity(x) xor parity(y) == odd. Returns false on contradiction.
  bool unite(std::size_t x, std::size_t y, int odd) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == odd;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ odd;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace spine::detail
