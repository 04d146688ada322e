#pragma once

// Reference computations for tests. Nothing here calls into the library's
// algorithms; each oracle recomputes its answer from definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graphmetric/rational.hpp"

namespace oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
constexpr int kInf = std::numeric_limits<int>::max();

inline std::vector<std::vector<bool>> adjacency(std::size_t n, const Edges& edges) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

/// Shortest distances by enumerating every simple path (exponential; small graphs only).
inline std::vector<std::vector<int>> path_enumeration_distances(std::size_t n, const Edges& edges) {
  auto a = adjacency(n, edges);
  std::vector<std::vector<int>> best(n, std::vector<int>(n, kInf));
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, int)> walk = [&](std::size_t start, std::size_t v, int len) {
    best[start][v] = std::min(best[start][v], len);
    on_path[v] = true;
    for (std::size_t w = 0; w < n; ++w)
      if (a[v][w] && !on_path[w]) walk(start, w, len + 1);
    on_path[v] = false;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, 0);
  return best;
}

inline std::vector<std::vector<int>> floyd_warshall(std::size_t n, const Edges& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool connected(std::size_t n, const Edges& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (auto [u, v] : edges) parent[root(u)] = root(v);
  for (std::size_t i = 0; i < n; ++i)
    if (root(i) != root(0)) return false;
  return true;
}

inline Edges edges_of_mask(std::size_t n, std::uint64_t mask) {
  Edges out;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) out.emplace_back(i, j);
  return out;
}

/// Upper-triangle bit string (pair order (0,1),(0,2),(1,2),(0,3),...) minimized
/// over every permutation via std::next_permutation.
inline std::vector<bool> min_code_all_permutations(std::size_t n, const Edges& edges) {
  auto a = adjacency(n, edges);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<bool>> best;
  do {
    std::vector<bool> code;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) code.push_back(a[perm[i]][perm[j]]);
    if (!best || code < *best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline std::size_t automorphism_count(std::size_t n, const Edges& edges) {
  auto a = adjacency(n, edges);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a[i][j] == a[perm[i]][perm[j]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Isomorphism classes of connected graphs on n vertices found by orbit
/// minimization over all labeled graphs, with labeled count per class.
struct OrbitCensus {
  std::size_t labeled_connected = 0;
  std::set<std::vector<bool>> classes;
};

inline OrbitCensus orbit_census(std::size_t n) {
  OrbitCensus out;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto e = edges_of_mask(n, mask);
    if (!connected(n, e)) continue;
    ++out.labeled_connected;
    out.classes.insert(min_code_all_permutations(n, e));
  }
  return out;
}

/// Tries every sign vector for coordinates s_i * d(p0, p_i); returns whether one reproduces all distances.
inline bool line_embeddable_by_signs(const std::vector<std::vector<graphmetric::Rational>>& d) {
  const std::size_t n = d.size();
  if (n <= 1) return true;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << (n - 1)); ++signs) {
    std::vector<graphmetric::Rational> x(n);
    for (std::size_t i = 1; i < n; ++i) x[i] = ((signs >> (i - 1)) & 1u) ? -d[0][i] : d[0][i];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        auto gap = x[i] - x[j];
        ok = (gap < 0 ? -gap : gap) == d[i][j];
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
