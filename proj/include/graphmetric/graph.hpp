#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphmetric/errors.hpp"
#include "graphmetric/metric.hpp"

namespace graphmetric {

/// Finite simple undirected graph with labeled vertices. Immutable.
class Graph {
 public:
  /// Throws ParseError on duplicate/empty labels, self-loops, duplicate edges
  /// or out-of-range endpoints. An empty vertex set is rejected.
  Graph(std::vector<std::string> labels, const std::vector<IndexPair>& edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  std::span<const std::size_t> neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Edges as (i, j) with i < j in lexicographic order.
  std::vector<IndexPair> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.labels_ == b.labels_ && a.adj_ == b.adj_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adj_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t edge_count_ = 0;
};

Graph path_graph(std::size_t vertices);
Graph cycle_graph(std::size_t vertices);

/// All-pairs hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  int at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  int& at(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  bool reachable(std::size_t i, std::size_t j) const { return at(i, j) != kUnreachable; }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, std::size_t source);
DistanceMatrix geodesic_distances(const Graph& g);

/// The geodesic metric of a connected graph, labeled by vertex labels. Throws Disconnected.
MetricSpace geodesic_metric(const Graph& g);

/// A shortest path from `from` to `to` (both endpoints included), empty if
/// unreachable. Each vertex's predecessor is its lowest-index neighbor one
/// step closer to `from`.
std::vector<std::size_t> shortest_path(const Graph& g, std::size_t from, std::size_t to);

bool is_connected(const Graph& g);

/// Throws EmptySubset, UnknownLabel. Vertex order follows the subset order.
Graph induced_subgraph(const Graph& g, std::span<const std::string> subset);
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> subset);

struct ShapeClass {
  enum class Kind { kSingleVertex, kPath, kCycle, kOther };
  Kind kind = Kind::kOther;
  /// Edge count for paths, vertex count for cycles, 0 otherwise.
  std::size_t length = 0;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

std::string to_string(const ShapeClass& shape);

ShapeClass classify_shape(const Graph& g);

inline constexpr std::size_t kDefaultMaxOrder = 8;

/// Lexicographically least upper-triangle adjacency encoding over all vertex
/// permutations, prefixed by the vertex count. Equal strings iff isomorphic.
/// max_order may be raised up to 16.
/// Pair (i, j), i < j, sits at position j(j-1)/2 + i. Throws TooLarge.
std::string canonical_form(const Graph& g, std::size_t max_order = kDefaultMaxOrder);

/// Bitmask encoding of labeled graphs on vertices 0..n-1: bit j(j-1)/2 + i is
/// set iff {i, j} is an edge.
std::uint64_t pair_count(std::size_t n);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Whether the labeled graph `mask` is connected.
bool mask_connected(std::size_t n, std::uint64_t mask);

/// Whether no relabeling of `mask` yields a smaller encoding, i.e. `mask`
/// is the representative of its isomorphism class.
bool mask_is_canonical(std::size_t n, std::uint64_t mask);

/// Visits one representative per isomorphism class of connected graphs on n
/// vertices among masks in [mask_begin, mask_end), in ascending mask order.
void for_each_connected_graph(std::size_t n, std::uint64_t mask_begin, std::uint64_t mask_end,
                              const std::function<void(std::uint64_t mask)>& visit);

/// One graph per isomorphism class of connected graphs on n vertices,
/// vertices labeled v0..v{n-1}. Throws TooLarge for n > max_order (and max_order > 8).
std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

enum class GraphFormat { kJson, kText };

/// Throws ParseError.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string graph_to_json(const Graph& g);
std::string graph_to_text(const Graph& g);

}  // namespace graphmetric
