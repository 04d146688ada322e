#include "graphmetric/metric.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace graphmetric {

const char* to_string(MetricViolation::Kind kind) {
  switch (kind) {
    case MetricViolation::Kind::kNonzeroDiagonal: return "nonzero_diagonal";
    case MetricViolation::Kind::kAsymmetry: return "asymmetry";
    case MetricViolation::Kind::kZeroDistance: return "zero_distance";
    case MetricViolation::Kind::kNegativeDistance: return "negative_distance";
    case MetricViolation::Kind::kTriangle: return "triangle";
  }
  return "unknown";
}

std::optional<MetricViolation> find_metric_violation(const std::vector<std::vector<Rational>>& d) {
  using Kind = MetricViolation::Kind;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != 0) {
      return MetricViolation(Kind::kNonzeroDiagonal, {i}, "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (d[i][j] != d[j][i]) return MetricViolation(Kind::kAsymmetry, {i, j}, "asymmetry at " + where);
      if (d[i][j] == 0) return MetricViolation(Kind::kZeroDistance, {i, j}, "zero distance between distinct points " + where);
      if (d[i][j] < 0) return MetricViolation(Kind::kNegativeDistance, {i, j}, "negative distance at " + where);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][j] > d[i][k] + d[k][j]) {
          return MetricViolation(Kind::kTriangle, {i, j, k},
                                 "triangle inequality fails: d(" + std::to_string(i) + "," + std::to_string(j) +
                                     ") > d(" + std::to_string(i) + "," + std::to_string(k) + ") + d(" +
                                     std::to_string(k) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return std::nullopt;
}

MetricSpace::MetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> distances)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ParseError("metric space needs at least one point");
  if (distances.size() != n) throw ParseError("distance table has " + std::to_string(distances.size()) +
                                              " rows for " + std::to_string(n) + " points");
  for (const auto& row : distances) {
    if (row.size() != n) throw ParseError("distance table is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw ParseError("empty point label");
    if (!index_.emplace(labels_[i], i).second) throw ParseError("duplicate label '" + labels_[i] + "'");
  }
  if (auto violation = find_metric_violation(distances)) throw *violation;
  dist_.reserve(n * n);
  for (auto& row : distances) dist_.insert(dist_.end(), row.begin(), row.end());
}

std::optional<std::size_t> MetricSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MetricSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw UnknownLabel(std::string(label));
}

MetricSpace MetricSpace::subspace(std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> d(indices.size(), std::vector<Rational>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    labels.push_back(labels_.at(indices[a]));
    for (std::size_t b = 0; b < indices.size(); ++b) d[a][b] = distance(indices[a], indices[b]);
  }
  return MetricSpace(std::move(labels), std::move(d));
}

std::vector<std::vector<Rational>> MetricSpace::table() const {
  std::vector<std::vector<Rational>> d(size(), std::vector<Rational>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) d[i][j] = distance(i, j);
  return d;
}

namespace {

Rational rational_from_json(const nlohmann::json& value) {
  try {
    if (value.is_number_integer()) {
      return value.is_number_unsigned() ? Rational(static_cast<std::int64_t>(value.get<std::uint64_t>()))
                                        : Rational(value.get<std::int64_t>());
    }
    if (value.is_number_float()) {
      // Shortest round-trip text of the double, read back exactly.
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, value.get<double>());
      std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
      if (text.find_first_of("eE") != std::string_view::npos) {
        throw ParseError("distance " + std::string(text) + " must be written as a plain decimal");
      }
      return Rational::parse(text);
    }
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::overflow_error& e) {
    throw ParseError(e.what());
  }
  throw ParseError("distance entries must be numbers or decimal strings, got " + value.dump());
}

void check_labels(const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    if (l.starts_with(kReservedPrefix)) throw ParseError("label '" + l + "' uses the reserved '__' prefix");
  }
}

MetricSpace parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("distances"))
    throw ParseError("metric JSON needs \"points\" and \"distances\"");
  const auto& points = doc["points"];
  const auto& rows = doc["distances"];
  if (!points.is_array() || !rows.is_array()) throw ParseError("\"points\" and \"distances\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) throw ParseError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> d;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each distance row must be an array");
    auto& out = d.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  check_labels(labels);
  return MetricSpace(std::move(labels), std::move(d));
}

MetricSpace parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n < 1) throw ParseError("matrix text must start with a positive point count");
  std::vector<std::vector<Rational>> d(static_cast<std::size_t>(n));
  for (auto& row : d) {
    for (long long j = 0; j < n; ++j) {
      std::string token;
      if (!(in >> token)) throw ParseError("matrix text ended early");
      try {
        row.push_back(Rational::parse(token));
      } catch (const std::exception& e) {
        throw ParseError(e.what());
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing token '" + extra + "'");
  std::vector<std::string> labels;
  for (long long i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return MetricSpace(std::move(labels), std::move(d));
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.numerator();
  return r.to_string();
}

}  // namespace

MetricSpace parse_metric(std::string_view text, MetricFormat format) {
  return format == MetricFormat::kJson ? parse_json(text) : parse_matrix(text);
}

std::string metric_to_json(const MetricSpace& m) {
  nlohmann::ordered_json doc;
  doc["points"] = m.labels();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rational_to_json(m.distance(i, j)));
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  return doc.dump();
}

std::string metric_to_matrix_text(const MetricSpace& m) {
  std::ostringstream out;
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.distance(i, j);
    out << '\n';
  }
  return out.str();
}

bool is_integer_metric(const MetricSpace& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!m.distance(i, j).is_integer()) return false;
  return true;
}

bool between(const MetricSpace& m, std::size_t x, std::size_t y, std::size_t z) {
  if (x == y || y == z) return false;
  return m.distance(x, z) == m.distance(x, y) + m.distance(y, z);
}

bool between(const MetricSpace& m, std::string_view x, std::string_view y, std::string_view z) {
  return between(m, m.index_of(x), m.index_of(y), m.index_of(z));
}

namespace {

bool has_between_point(const MetricSpace& m, std::size_t x, std::size_t z) {
  for (std::size_t y = 0; y < m.size(); ++y)
    if (between(m, x, y, z)) return true;
  return false;
}

}  // namespace

PairCheck kay_chartrand_check(const MetricSpace& m) {
  if (!is_integer_metric(m)) throw NotIntegerMetric();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t z = x + 1; z < m.size(); ++z) {
      if (m.distance(x, z) >= 2 && !has_between_point(m, x, z)) return {IndexPair{x, z}};
    }
  }
  return {};
}

bool X2Set::contains(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(pairs.begin(), pairs.end(), IndexPair{i, j});
}

X2Set compute_x2_set(const MetricSpace& m) {
  if (!is_integer_metric(m)) throw NotIntegerMetric();
  X2Set out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      if (m.distance(x, y) < 2) continue;
      bool strict = true;
      for (std::size_t z = 0; z < m.size() && strict; ++z) {
        if (z == x || z == y) continue;
        strict = m.distance(x, y) < m.distance(x, z) + m.distance(z, y);
      }
      if (strict) out.pairs.emplace_back(x, y);
    }
  }
  return out;
}

MetricSpace ceiling_metric(const MetricSpace& m) {
  auto d = m.table();
  for (auto& row : d)
    for (auto& v : row) v = Rational(v.ceil());
  try {
    return MetricSpace(m.labels(), std::move(d));
  } catch (const MetricViolation& e) {
    throw InternalVerificationFailure(std::string("ceiling of a metric is not a metric: ") + e.what());
  }
}

}  // namespace graphmetric
