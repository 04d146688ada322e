#include "graphmetric/realization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace graphmetric {

EmbeddingMap::EmbeddingMap(std::map<std::string, std::string> assignment) : assignment_(std::move(assignment)) {
  std::set<std::string> targets;
  for (const auto& [point, vertex] : assignment_) {
    if (!targets.insert(vertex).second) throw std::invalid_argument("map is not injective at vertex '" + vertex + "'");
  }
}

EmbeddingMap EmbeddingMap::identity(const MetricSpace& m) {
  std::map<std::string, std::string> assignment;
  for (const auto& label : m.labels()) assignment.emplace(label, label);
  return EmbeddingMap(std::move(assignment));
}

const std::string& EmbeddingMap::target(const std::string& point) const {
  auto it = assignment_.find(point);
  if (it == assignment_.end()) throw UnknownLabel(point);
  return it->second;
}

namespace {

std::vector<IndexPair> unit_distance_pairs(const MetricSpace& m) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.distance(i, j) == 1) edges.emplace_back(i, j);
  return edges;
}

void self_verify(const MetricSpace& m, RealizationResult& result, const char* construction) {
  auto check = verify_map(m, result.graph, result.map);
  if (!check.passed()) {
    const auto& bad = std::get<MapMismatch>(check.failure);
    throw InternalVerificationFailure(std::string(construction) + " produced d_G(" + bad.first + "," + bad.second +
                                      ") = " + std::to_string(bad.actual) + ", expected " + bad.expected.to_string());
  }
  result.map.mark_verified();
}

}  // namespace

RealizationResult realize(const MetricSpace& m) {
  auto condition = kay_chartrand_check(m);
  if (!condition.passed()) {
    auto [x, z] = *condition.witness;
    throw ConditionFailed(m.label(x), m.label(z));
  }
  RealizationResult result{Graph(m.labels(), unit_distance_pairs(m)), EmbeddingMap::identity(m), 0};
  self_verify(m, result, "realize");
  return result;
}

std::string aux_label(const std::string& a, const std::string& b, std::size_t k) {
  const auto& lo = std::min(a, b);
  const auto& hi = std::max(a, b);
  return std::string(kReservedPrefix) + "aux::" + lo + "::" + hi + "::" + std::to_string(k);
}

RealizationResult embed(const MetricSpace& m) {
  const X2Set x2 = compute_x2_set(m);
  std::vector<std::string> labels = m.labels();
  std::vector<IndexPair> edges = unit_distance_pairs(m);
  std::size_t aux_count = 0;

  for (auto [x, y] : x2.pairs) {
    // Interior vertices are numbered from the lexicographically smaller endpoint.
    std::size_t from = m.label(x) < m.label(y) ? x : y;
    std::size_t to = from == x ? y : x;
    const auto length = static_cast<std::size_t>(m.distance(x, y).numerator());
    std::size_t prev = from;
    for (std::size_t k = 1; k < length; ++k) {
      labels.push_back(aux_label(m.label(x), m.label(y), k));
      std::size_t cur = labels.size() - 1;
      edges.emplace_back(std::min(prev, cur), std::max(prev, cur));
      prev = cur;
    }
    edges.emplace_back(std::min(prev, to), std::max(prev, to));
    aux_count += length - 1;
  }

  std::sort(edges.begin(), edges.end());
  RealizationResult result{Graph(std::move(labels), edges), EmbeddingMap::identity(m), aux_count};
  self_verify(m, result, "embed");
  return result;
}

RealizationResult ceil_embed(const MetricSpace& m) {
  RealizationResult result = embed(ceiling_metric(m));
  if (auto bad = check_ceiling_bounds(m, result.graph, result.map)) {
    throw InternalVerificationFailure("ceiling embedding breaks distortion bound at (" + bad->first + "," +
                                      bad->second + ")");
  }
  return result;
}

namespace {

/// Targets of every point as vertex indices, plus the BFS row of each.
struct MappedDistances {
  std::vector<std::size_t> vertex;
  std::vector<std::vector<int>> rows;
};

MappedDistances mapped_distances(const MetricSpace& m, const Graph& g, const EmbeddingMap& map) {
  MappedDistances out;
  for (const auto& label : m.labels()) out.vertex.push_back(g.index_of(map.target(label)));
  if (!is_connected(g)) throw Disconnected();
  for (std::size_t v : out.vertex) out.rows.push_back(bfs_distances(g, v));
  return out;
}

}  // namespace

VerifyResult verify_map(const MetricSpace& m, const Graph& g, const EmbeddingMap& map, bool require_onto) {
  auto md = mapped_distances(m, g, map);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      int actual = md.rows[i][md.vertex[j]];
      if (m.distance(i, j) != actual) return {MapMismatch{m.label(i), m.label(j), m.distance(i, j), actual}};
    }
  }
  if (require_onto) {
    std::vector<bool> hit(g.order(), false);
    for (std::size_t v : md.vertex) hit[v] = true;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (!hit[v]) return {NotOnto{g.label(v)}};
  }
  return {};
}

std::optional<MapMismatch> check_ceiling_bounds(const MetricSpace& m, const Graph& g, const EmbeddingMap& map) {
  auto md = mapped_distances(m, g, map);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Rational& d = m.distance(i, j);
      Rational actual = md.rows[i][md.vertex[j]];
      if (!(d <= actual && actual < d + 1)) {
        return MapMismatch{m.label(i), m.label(j), d, md.rows[i][md.vertex[j]]};
      }
    }
  }
  return std::nullopt;
}

std::string map_to_json(const EmbeddingMap& map, std::size_t aux_count) {
  nlohmann::ordered_json doc;
  doc["assignment"] = nlohmann::ordered_json(map.assignment());
  doc["aux_count"] = aux_count;
  doc["verified"] = map.verified();
  return doc.dump();
}

}  // namespace graphmetric
