#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "graphmetric/graph.hpp"
#include "graphmetric/metric.hpp"

namespace graphmetric {

/// Injective assignment of metric points to graph vertices.
class EmbeddingMap {
 public:
  EmbeddingMap() = default;
  /// Throws std::invalid_argument if two points share a target.
  explicit EmbeddingMap(std::map<std::string, std::string> assignment);

  static EmbeddingMap identity(const MetricSpace& m);

  const std::map<std::string, std::string>& assignment() const { return assignment_; }
  /// Throws UnknownLabel.
  const std::string& target(const std::string& point) const;

  bool verified() const { return verified_; }
  void mark_verified() { verified_ = true; }

 private:
  std::map<std::string, std::string> assignment_;
  bool verified_ = false;
};

struct RealizationResult {
  Graph graph;
  EmbeddingMap map;
  /// Vertices added beyond the metric's points.
  std::size_t aux_count = 0;
};

/// Graph on the points of m with an edge exactly at distance-1 pairs.
///
/// Throws NotIntegerMetric, ConditionFailed (first pair with no point between
/// it), or InternalVerificationFailure if d != d_G afterwards.
RealizationResult realize(const MetricSpace& m);

/// Label of the k-th interior vertex on the subdivision path for {a, b}.
std::string aux_label(const std::string& a, const std::string& b, std::size_t k);

/// Isometric embedding of an integer metric into a connected graph: the
/// distance-1 graph on the points plus, for every pair with no point between
/// it, a fresh path of exactly that length. Throws NotIntegerMetric or
/// InternalVerificationFailure.
RealizationResult embed(const MetricSpace& m);

/// embed() of the ceiling metric; every pair then satisfies
/// d <= d_G(map(x), map(y)) < d + 1. Throws InternalVerificationFailure.
RealizationResult ceil_embed(const MetricSpace& m);

struct MapMismatch {
  std::string first;
  std::string second;
  Rational expected;
  int actual = 0;
};

/// Reason a map is not onto: a graph vertex no point maps to.
struct NotOnto {
  std::string vertex;
};

struct VerifyResult {
  std::variant<std::monostate, MapMismatch, NotOnto> failure;
  bool passed() const { return std::holds_alternative<std::monostate>(failure); }
};

/// Checks d(x, y) = d_G(map(x), map(y)) for every pair of points; with
/// require_onto also that every vertex is hit. Throws UnknownLabel if a point
/// is unmapped or a target is missing from g, Disconnected if g is.
VerifyResult verify_map(const MetricSpace& m, const Graph& g, const EmbeddingMap& map, bool require_onto = false);

/// First pair breaking d <= d_G(map(x), map(y)) < d + 1, if any.
std::optional<MapMismatch> check_ceiling_bounds(const MetricSpace& m, const Graph& g, const EmbeddingMap& map);

std::string map_to_json(const EmbeddingMap& map, std::size_t aux_count);

}  // namespace graphmetric
