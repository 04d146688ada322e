#include "graphmetric/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include <json.hpp>

namespace graphmetric {

Graph::Graph(std::vector<std::string> labels, const std::vector<IndexPair>& edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
  if (labels_.empty()) throw ParseError("graph needs at least one vertex");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ParseError("empty vertex label");
    if (!index_.emplace(labels_[i], i).second) throw ParseError("duplicate vertex label '" + labels_[i] + "'");
  }
  for (auto [u, v] : edges) {
    if (u >= order() || v >= order()) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < order(); ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw ParseError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UnknownLabel(std::string(label));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<IndexPair> Graph::edges() const {
  std::vector<IndexPair> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

Graph path_graph(std::size_t vertices) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 1; i < vertices; ++i) edges.emplace_back(i - 1, i);
  return Graph(default_labels(vertices), edges);
}

Graph cycle_graph(std::size_t vertices) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 1; i < vertices; ++i) edges.emplace_back(i - 1, i);
  if (vertices >= 3) edges.emplace_back(0, vertices - 1);
  return Graph(default_labels(vertices), edges);
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] == DistanceMatrix::kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix geodesic_distances(const Graph& g) {
  DistanceMatrix out(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (std::size_t t = 0; t < g.order(); ++t) out.at(s, t) = row[t];
  }
  return out;
}

MetricSpace geodesic_metric(const Graph& g) {
  auto dm = geodesic_distances(g);
  const std::size_t n = g.order();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!dm.reachable(i, j)) throw Disconnected();
      d[i][j] = dm.at(i, j);
    }
  }
  return MetricSpace(g.labels(), std::move(d));
}

std::vector<std::size_t> shortest_path(const Graph& g, std::size_t from, std::size_t to) {
  auto dist = bfs_distances(g, from);
  if (dist[to] == DistanceMatrix::kUnreachable) return {};
  std::vector<std::size_t> path{to};
  std::size_t cur = to;
  while (cur != from) {
    // Neighbor lists are sorted, so the first closer neighbor has the lowest index.
    for (std::size_t v : g.neighbors(cur)) {
      if (dist[v] == dist[cur] - 1) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == DistanceMatrix::kUnreachable; });
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> subset) {
  if (subset.empty()) throw EmptySubset();
  std::vector<std::string> labels;
  for (std::size_t v : subset) labels.push_back(g.label(v));
  std::vector<IndexPair> edges;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      if (g.adjacent(subset[a], subset[b])) edges.emplace_back(a, b);
  return Graph(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> subset) {
  std::vector<std::size_t> indices;
  for (const auto& label : subset) indices.push_back(g.index_of(label));
  return induced_subgraph(g, std::span<const std::size_t>(indices));
}

std::string to_string(const ShapeClass& shape) {
  switch (shape.kind) {
    case ShapeClass::Kind::kSingleVertex: return "single_vertex";
    case ShapeClass::Kind::kPath: return "path(" + std::to_string(shape.length) + ")";
    case ShapeClass::Kind::kCycle: return "cycle(" + std::to_string(shape.length) + ")";
    case ShapeClass::Kind::kOther: return "other";
  }
  return "other";
}

ShapeClass classify_shape(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 1) return {ShapeClass::Kind::kSingleVertex, 0};
  if (!is_connected(g)) return {};
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t deg = g.degree(v);
    if (deg == 1) {
      ++leaves;
    } else if (deg != 2) {
      return {};
    }
  }
  if (leaves == 2) return {ShapeClass::Kind::kPath, n - 1};
  if (leaves == 0 && n >= 3) return {ShapeClass::Kind::kCycle, n};
  return {};
}

// ---------------------------------------------------------------------------
// Canonical forms over small graphs.
//
// A labeling's code lists the pair bits in sequence order, first pair most
// significant, so numeric order of codes is lexicographic order of the bit
// strings. Relabelings are searched position by position: placing vertex p
// fixes the bits of pairs (0,p)..(p-1,p), which extend the code prefix.

namespace {

constexpr std::size_t kMaxCodedOrder = 16;  // 120 pair bits fit in 128
using Code = unsigned __int128;

struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxCodedOrder> rows{};

  bool adjacent(std::size_t u, std::size_t v) const { return (rows[u] >> v) & 1u; }
};

SmallGraph from_mask(std::size_t n, std::uint64_t mask) {
  SmallGraph s;
  s.n = n;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) {
        s.rows[i] |= 1u << j;
        s.rows[j] |= 1u << i;
      }
    }
  }
  return s;
}

SmallGraph from_graph(const Graph& g) {
  SmallGraph s;
  s.n = g.order();
  for (auto [u, v] : g.edges()) {
    s.rows[u] |= 1u << v;
    s.rows[v] |= 1u << u;
  }
  return s;
}

Code identity_code(const SmallGraph& s) {
  Code code = 0;
  for (std::size_t j = 1; j < s.n; ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (s.adjacent(i, j) ? 1u : 0u);
  return code;
}

std::size_t prefix_bits(std::size_t placed) { return placed * (placed - 1) / 2; }

class RelabelSearch {
 public:
  explicit RelabelSearch(const SmallGraph& s) : s_(s), total_bits_(prefix_bits(s.n)) {}

  /// Least code over all relabelings.
  Code minimum() {
    best_ = identity_code(s_);
    stop_at_smaller_ = false;
    descend(0, 0, 0);
    return best_;
  }

  /// Whether some relabeling beats the identity.
  bool identity_beaten() {
    best_ = identity_code(s_);
    stop_at_smaller_ = true;
    found_smaller_ = false;
    descend(0, 0, 0);
    return found_smaller_;
  }

 private:
  void descend(std::size_t placed, std::uint32_t used, Code prefix) {
    if (placed == s_.n) {
      if (prefix < best_) best_ = prefix;
      return;
    }
    const std::size_t bits = prefix_bits(placed + 1);
    for (std::size_t v = 0; v < s_.n; ++v) {
      if ((used >> v) & 1u) continue;
      Code next = prefix;
      for (std::size_t i = 0; i < placed; ++i) next = (next << 1) | (s_.adjacent(perm_[i], v) ? 1u : 0u);
      const Code bound = best_ >> (total_bits_ - bits);
      if (next > bound) continue;
      if (stop_at_smaller_ && next < bound) {
        found_smaller_ = true;
        return;
      }
      perm_[placed] = v;
      descend(placed + 1, used | (1u << v), next);
      if (found_smaller_) return;
    }
  }

  const SmallGraph& s_;
  std::size_t total_bits_;
  std::array<std::size_t, kMaxCodedOrder> perm_{};
  Code best_ = 0;
  bool stop_at_smaller_ = false;
  bool found_smaller_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g, std::size_t max_order) {
  if (g.order() > std::min(max_order, kMaxCodedOrder)) {
    throw TooLarge("canonical form limited to " + std::to_string(std::min(max_order, kMaxCodedOrder)) +
                   " vertices, graph has " + std::to_string(g.order()));
  }
  SmallGraph s = from_graph(g);
  Code code = RelabelSearch(s).minimum();
  const std::size_t bits = prefix_bits(s.n);
  std::string out(1, static_cast<char>(s.n));
  out.resize(1 + (bits + 7) / 8, '\0');
  for (std::size_t k = 0; k < bits; ++k) {
    if ((code >> (bits - 1 - k)) & 1u) out[1 + k / 8] = static_cast<char>(out[1 + k / 8] | (0x80 >> (k % 8)));
  }
  return out;
}

std::uint64_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<IndexPair> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return Graph(default_labels(n), edges);
}

bool mask_connected(std::size_t n, std::uint64_t mask) {
  SmallGraph s = from_mask(n, mask);
  const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1u);
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= s.rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

bool mask_is_canonical(std::size_t n, std::uint64_t mask) {
  SmallGraph s = from_mask(n, mask);
  return !RelabelSearch(s).identity_beaten();
}

void for_each_connected_graph(std::size_t n, std::uint64_t mask_begin, std::uint64_t mask_end,
                              const std::function<void(std::uint64_t)>& visit) {
  for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
    // A connected graph needs at least n - 1 edges.
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
    if (mask_connected(n, mask) && mask_is_canonical(n, mask)) visit(mask);
  }
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_order) {
  const std::size_t cap = std::min(max_order, kDefaultMaxOrder);
  if (n < 1 || n > cap) {
    throw TooLarge("enumeration supports 1 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  std::vector<Graph> out;
  for_each_connected_graph(n, 0, std::uint64_t{1} << pair_count(n),
                           [&](std::uint64_t mask) { out.push_back(graph_from_mask(n, mask)); });
  return out;
}

// ---------------------------------------------------------------------------
// File formats.

namespace {

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<IndexPair> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("each edge must be a pair of vertex indices");
    auto i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>();
    if (i >= j) throw ParseError("edge [" + std::to_string(i) + "," + std::to_string(j) + "] must have i < j");
    edges.emplace_back(i, j);
  }
  return Graph(std::move(labels), edges);
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw ParseError("graph text must start with 'n m'");
  std::vector<IndexPair> edges;
  for (long long k = 0; k < m; ++k) {
    long long i = 0, j = 0;
    if (!(in >> i >> j)) throw ParseError("graph text ended early");
    if (i < 0 || j < 0) throw ParseError("negative vertex index");
    auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing token '" + extra + "'");
  return Graph(default_labels(static_cast<std::size_t>(n)), edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kJson ? parse_graph_json(text) : parse_graph_text(text);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace graphmetric
