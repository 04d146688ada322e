#include "graphmetric/quadruples.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

namespace graphmetric {

TripleCheck mb_check(const MetricSpace& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const Rational& xz = m.distance(x, z);
        const Rational& xy = m.distance(x, y);
        const Rational& yz = m.distance(y, z);
        if (xz >= std::max(xy, yz) && xz != xy + yz) return {IndexTriple{x, y, z}};
      }
    }
  }
  return {};
}

std::optional<std::vector<Rational>> line_embed(const MetricSpace& m) {
  const std::size_t n = m.size();
  std::vector<Rational> coords(n);
  if (n >= 2) coords[1] = m.distance(0, 1);
  for (std::size_t z = 2; z < n; ++z) {
    // z sits at +d(p0,z) or -d(p0,z); its distance to p1 picks the side.
    const Rational& r = m.distance(0, z);
    const Rational& to_p1 = m.distance(1, z);
    auto abs = [](const Rational& v) { return v < 0 ? -v : v; };
    if (abs(r - coords[1]) == to_p1) {
      coords[z] = r;
    } else if (abs(-r - coords[1]) == to_p1) {
      coords[z] = -r;
    } else {
      return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational gap = coords[i] - coords[j];
      if ((gap < 0 ? -gap : gap) != m.distance(i, j)) return std::nullopt;
    }
  }
  return coords;
}

namespace {

void require_four_distinct(std::span<const std::size_t> points, std::size_t space_size) {
  if (points.size() != 4) throw WrongArity("expected 4 points, got " + std::to_string(points.size()));
  std::set<std::size_t> distinct(points.begin(), points.end());
  if (distinct.size() != 4) throw WrongArity("the 4 points must be distinct");
  for (std::size_t p : points)
    if (p >= space_size) throw WrongArity("point index out of range");
}

}  // namespace

PLQClassification plq_classify(const MetricSpace& m, std::span<const std::size_t> points) {
  require_four_distinct(points, m.size());
  const Quad p{points[0], points[1], points[2], points[3]};
  const std::array<Quad, 3> cycles{{
      {p[0], p[1], p[2], p[3]},
      {p[0], p[2], p[1], p[3]},
      {p[0], p[1], p[3], p[2]},
  }};
  for (const Quad& x : cycles) {
    auto d = [&](int a, int b) -> const Rational& { return m.distance(x[a], x[b]); };
    const Rational& s = d(0, 1);
    const Rational& t = d(1, 2);
    if (d(2, 3) != s || d(3, 0) != t) continue;
    if (d(0, 2) != s + t || d(1, 3) != s + t) continue;
    PLQClassification out;
    if (s <= t) {
      out.plq = PseudoLinearQuadruple{s, t, x};
    } else {
      out.plq = PseudoLinearQuadruple{t, s, Quad{x[1], x[2], x[3], x[0]}};
    }
    out.equilateral = s == t;
    return out;
  }
  return {};
}

QuadInequality quad_inequality(const MetricSpace& m, std::span<const std::size_t> ordering) {
  require_four_distinct(ordering, m.size());
  auto d = [&](int a, int b) -> const Rational& { return m.distance(ordering[a - 1], ordering[b - 1]); };
  QuadInequality out;
  out.lhs = d(1, 3) * d(2, 4) - d(1, 2) * d(3, 4) - d(4, 1) * d(2, 3);
  Rational perimeter = d(1, 2) + d(2, 3) + d(3, 4) + d(4, 1);
  out.bound = perimeter * perimeter / 8;
  out.slack = out.bound - out.lhs;
  if (out.slack < 0) {
    throw InternalVerificationFailure("four-point inequality fails: lhs " + out.lhs.to_string() + " > " +
                                      out.bound.to_string());
  }
  return out;
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::kMbImpliesShape: return "mb_implies_shape";
    case Direction::kShapeImpliesMb: return "shape_implies_mb";
    case Direction::kIImpliesII: return "i_implies_ii";
    case Direction::kIIImpliesI: return "ii_implies_i";
  }
  return "unknown";
}

const char* to_string(ConjectureId id) { return id == ConjectureId::kC42 ? "C42" : "C44"; }

Conjecture42Outcome check_conjecture_42(const Graph& g) {
  if (g.size() == 0) throw EmptyGraph();
  if (!is_connected(g)) throw Disconnected();
  Conjecture42Outcome out;
  auto mb = mb_check(geodesic_metric(g));
  out.mb = mb.passed();
  out.mb_witness = mb.witness;
  out.shape = classify_shape(g);
  const bool listed = out.shape.kind == ShapeClass::Kind::kPath ||
                      (out.shape.kind == ShapeClass::Kind::kCycle && out.shape.length == 4);
  if (out.mb && !listed) out.violation = Direction::kMbImpliesShape;
  if (!out.mb && listed) out.violation = Direction::kShapeImpliesMb;
  return out;
}

std::vector<QuadFinding> check_conjecture_44(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) throw TooSmall("conjecture 4.4 needs at least 4 vertices, graph has " + std::to_string(n));
  if (!is_connected(g)) throw Disconnected();
  const MetricSpace metric = geodesic_metric(g);
  std::vector<QuadFinding> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          const Quad subset{a, b, c, e};
          QuadFinding f{subset, false, false};
          auto shape = classify_shape(induced_subgraph(g, std::span<const std::size_t>(subset)));
          f.holds_i = shape.kind == ShapeClass::Kind::kCycle;
          f.holds_ii = plq_classify(metric, subset).equilateral;
          if (f.holds_i != f.holds_ii) out.push_back(f);
        }
  return out;
}

namespace {

struct Finding {
  std::size_t n;
  std::uint64_t mask;
  std::vector<std::string> witness;
  Direction direction;
};

std::vector<Finding> check_graph(ConjectureId id, std::size_t n, std::uint64_t mask) {
  Graph g = graph_from_mask(n, mask);
  std::vector<Finding> out;
  if (id == ConjectureId::kC42) {
    auto outcome = check_conjecture_42(g);
    if (!outcome.violation) return out;
    std::vector<std::string> witness;
    if (outcome.mb_witness) {
      for (std::size_t v : *outcome.mb_witness) witness.push_back(g.label(v));
    } else {
      witness = g.labels();
    }
    out.push_back({n, mask, std::move(witness), *outcome.violation});
  } else {
    for (const auto& f : check_conjecture_44(g)) {
      std::vector<std::string> witness;
      for (std::size_t v : f.subset) witness.push_back(g.label(v));
      out.push_back({n, mask, std::move(witness), f.holds_i ? Direction::kIImpliesII : Direction::kIIImpliesI});
    }
  }
  return out;
}

}  // namespace

ConjectureReport search(const SearchOptions& options) {
  if (options.max_n > kDefaultMaxOrder) {
    throw TooLarge("max_n " + std::to_string(options.max_n) + " exceeds the enumeration cap of " +
                   std::to_string(kDefaultMaxOrder));
  }
  if (options.max_n < 3) throw TooSmall("max_n must be at least 3");
  const std::size_t min_n = options.conjecture == ConjectureId::kC42 ? 3 : 4;
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  ConjectureReport report;
  report.conjecture = options.conjecture;
  report.max_n = options.max_n;

  std::vector<Finding> findings;
  for (std::size_t n = min_n; n <= options.max_n; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 512);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::size_t> checked{0};
    std::mutex merge;

    auto worker = [&] {
      std::vector<Finding> local;
      std::size_t local_checked = 0;
      for (;;) {
        std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= total) break;
        for_each_connected_graph(n, begin, std::min(total, begin + chunk), [&](std::uint64_t mask) {
          ++local_checked;
          auto found = check_graph(options.conjecture, n, mask);
          std::move(found.begin(), found.end(), std::back_inserter(local));
        });
      }
      checked += local_checked;
      std::lock_guard lock(merge);
      std::move(local.begin(), local.end(), std::back_inserter(findings));
    };

    std::vector<std::jthread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    pool.clear();
    report.graphs_checked += checked;
  }

  // Sort key (n, canonical form, witness); representatives carry their own
  // canonical labeling, so the canonical form is read off the mask.
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(findings.size());
  for (std::size_t i = 0; i < findings.size(); ++i) {
    keys.emplace_back(canonical_form(graph_from_mask(findings[i].n, findings[i].mask)), i);
  }
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    const Finding& fa = findings[a.second];
    const Finding& fb = findings[b.second];
    if (fa.n != fb.n) return fa.n < fb.n;
    if (a.first != b.first) return a.first < b.first;
    return fa.witness < fb.witness;
  });

  report.violations_found = findings.size();
  for (const auto& [key, i] : keys) {
    if (report.violations.size() >= options.max_violations) break;
    const Finding& f = findings[i];
    report.violations.push_back({graph_from_mask(f.n, f.mask), f.witness, f.direction});
  }
  return report;
}

bool replay(ConjectureId id, const Violation& v) {
  const Graph& g = v.graph;
  if (id == ConjectureId::kC42) {
    auto outcome = check_conjecture_42(g);
    if (outcome.violation != v.direction) return false;
    std::vector<std::string> witness;
    if (outcome.mb_witness) {
      for (std::size_t x : *outcome.mb_witness) witness.push_back(g.label(x));
    } else {
      witness = g.labels();
    }
    return witness == v.witness;
  }
  if (v.witness.size() != 4) return false;
  Quad subset{};
  for (std::size_t k = 0; k < 4; ++k) subset[k] = g.index_of(v.witness[k]);
  for (const auto& f : check_conjecture_44(g)) {
    if (f.subset != subset) continue;
    return (f.holds_i ? Direction::kIImpliesII : Direction::kIIImpliesI) == v.direction;
  }
  return false;
}

std::string report_to_json(const ConjectureReport& report) {
  nlohmann::ordered_json doc;
  doc["conjecture"] = to_string(report.conjecture);
  doc["max_n"] = report.max_n;
  doc["graphs_checked"] = report.graphs_checked;
  doc["violations_found"] = report.violations_found;
  auto list = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["graph"] = nlohmann::ordered_json::parse(graph_to_json(v.graph));
    entry["witness"] = v.witness;
    entry["direction"] = to_string(v.direction);
    list.push_back(std::move(entry));
  }
  doc["violations"] = std::move(list);
  return doc.dump();
}

}  // namespace graphmetric
