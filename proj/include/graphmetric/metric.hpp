#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphmetric/errors.hpp"
#include "graphmetric/rational.hpp"

namespace graphmetric {

using IndexPair = std::pair<std::size_t, std::size_t>;
using IndexTriple = std::array<std::size_t, 3>;

/// Labels beginning with this prefix are reserved for generated vertices.
inline constexpr std::string_view kReservedPrefix = "__";

/// Finite metric space with exact rational distances.
///
/// Construction validates every axiom; a MetricSpace that exists is a metric.
/// Instances are immutable.
class MetricSpace {
 public:
  /// Throws ParseError on empty/duplicate labels or a non-square table, and
  /// MetricViolation naming the first failing index tuple in lexicographic order.
  MetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> distances);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  const Rational& distance(std::string_view a, std::string_view b) const {
    return distance(index_of(a), index_of(b));
  }

  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  /// Restriction to the given points, in the given order.
  MetricSpace subspace(std::span<const std::size_t> indices) const;

  std::vector<std::vector<Rational>> table() const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class MetricFormat { kJson, kMatrix };

/// Checks the metric axioms without constructing a space. Returns the
/// violation (first in lexicographic index order) or nullopt.
std::optional<MetricViolation> find_metric_violation(const std::vector<std::vector<Rational>>& distances);

/// Throws ParseError or MetricViolation. Labels starting with "__" are rejected.
MetricSpace parse_metric(std::string_view text, MetricFormat format);

std::string metric_to_json(const MetricSpace& m);
std::string metric_to_matrix_text(const MetricSpace& m);

bool is_integer_metric(const MetricSpace& m);

/// Whether y lies between x and z: all distinct and d(x,z) = d(x,y) + d(y,z).
bool between(const MetricSpace& m, std::size_t x, std::size_t y, std::size_t z);
bool between(const MetricSpace& m, std::string_view x, std::string_view y, std::string_view z);

/// Pass/fail outcome carrying the first violating pair on failure.
struct PairCheck {
  std::optional<IndexPair> witness;
  bool passed() const { return !witness.has_value(); }
};

/// Every pair at distance >= 2 has a point between it. Throws NotIntegerMetric.
PairCheck kay_chartrand_check(const MetricSpace& m);

/// Pairs at distance >= 2 with no point between them, sorted (i < j, lexicographic).
struct X2Set {
  std::vector<IndexPair> pairs;
  bool contains(std::size_t i, std::size_t j) const;
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
};

/// Throws NotIntegerMetric.
X2Set compute_x2_set(const MetricSpace& m);

/// Entrywise ceiling of every distance. The result is always a metric.
MetricSpace ceiling_metric(const MetricSpace& m);

}  // namespace graphmetric
