#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace knotcert {

// Plain union-find, path-halving only; all uses here are tiny.
struct Dsu {
  std::vector<std::uint32_t> parent;

  explicit Dsu(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace knotcert
