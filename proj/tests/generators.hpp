#pragma once

// Seeded random instances for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "graphmetric/graph.hpp"
#include "graphmetric/metric.hpp"

namespace gen {

using graphmetric::Graph;
using graphmetric::IndexPair;
using graphmetric::MetricSpace;
using graphmetric::Rational;

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random spanning tree plus each remaining pair with probability `density`.
inline Graph connected_graph(std::mt19937& rng, std::size_t n, double density) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t parent = order[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
    a[order[k]][parent] = a[parent][order[k]] = true;
  }
  std::bernoulli_distribution extra(density);
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] || extra(rng)) edges.emplace_back(i, j);
  return Graph(labels(n), edges);
}

inline std::vector<std::size_t> random_subset(std::mt19937& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

/// Random points of a random connected graph under its geodesic metric.
inline MetricSpace graph_subset_metric(std::mt19937& rng, std::size_t max_points) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
  Graph g = connected_graph(rng, n, std::uniform_real_distribution<double>(0.0, 0.5)(rng));
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(n, max_points))(rng);
  auto idx = random_subset(rng, n, k);
  return graphmetric::geodesic_metric(g).subspace(idx);
}

/// Random symmetric table with entries drawn by `entry`, retried until it is a metric.
template <typename Entry>
MetricSpace random_metric(std::mt19937& rng, std::size_t n, Entry entry) {
  for (;;) {
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = entry(rng);
    if (!graphmetric::find_metric_violation(d)) return MetricSpace(labels(n, "p"), std::move(d));
  }
}

inline MetricSpace random_integer_metric(std::mt19937& rng, std::size_t n) {
  return random_metric(rng, n, [](std::mt19937& r) { return Rational(std::uniform_int_distribution<int>(1, 7)(r)); });
}

/// Entries are finite decimals with one or two digits after the point.
inline MetricSpace random_decimal_metric(std::mt19937& rng, std::size_t n) {
  return random_metric(rng, n, [](std::mt19937& r) {
    int scale = std::bernoulli_distribution(0.5)(r) ? 10 : 100;
    int value = std::uniform_int_distribution<int>(scale / 2, 6 * scale)(r);
    return Rational(value, scale);
  });
}

/// A subset of at least `min_points` points of a path graph, relabeled in random order.
inline MetricSpace path_subset_metric(std::mt19937& rng, std::size_t min_points, std::size_t max_points) {
  std::size_t len = std::uniform_int_distribution<std::size_t>(max_points, max_points + 10)(rng);
  std::size_t k = std::uniform_int_distribution<std::size_t>(min_points, max_points)(rng);
  auto idx = random_subset(rng, len, k);
  std::shuffle(idx.begin(), idx.end(), rng);
  return graphmetric::geodesic_metric(graphmetric::path_graph(len)).subspace(idx);
}

}  // namespace gen
