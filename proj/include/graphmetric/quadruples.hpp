#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphmetric/graph.hpp"
#include "graphmetric/metric.hpp"

namespace graphmetric {

using Quad = std::array<std::size_t, 4>;

struct TripleCheck {
  std::optional<IndexTriple> witness;
  bool passed() const { return !witness.has_value(); }
};

/// Membership in the class of spaces where d(x,z) >= max(d(x,y), d(y,z))
/// forces d(x,z) = d(x,y) + d(y,z). Scans ordered triples (x, y, z) of
/// distinct points lexicographically; the witness is the first failure.
TripleCheck mb_check(const MetricSpace& m);

/// Exact coordinates of an isometric embedding into the real line, with the
/// first point at 0 and the second on the positive side; nullopt if none exists.
std::optional<std::vector<Rational>> line_embed(const MetricSpace& m);

struct PseudoLinearQuadruple {
  Rational s;
  Rational t;
  /// x1..x4 with d(x1,x2) = d(x3,x4) = s, d(x2,x3) = d(x4,x1) = t and
  /// diagonals s + t; normalized so that s <= t.
  Quad ordering;
};

struct PLQClassification {
  std::optional<PseudoLinearQuadruple> plq;
  bool equilateral = false;
  bool is_plq() const { return plq.has_value(); }
};

/// Tries the three ways of splitting the points into two diagonals, in the
/// order (0 2 | 1 3), (0 1 | 2 3), (0 3 | 1 2) of `points`. Throws
/// WrongArity unless given four distinct points.
PLQClassification plq_classify(const MetricSpace& m, std::span<const std::size_t> points);

struct QuadInequality {
  Rational lhs;    // d13 d24 - d12 d34 - d41 d23
  Rational bound;  // p^2 / 8 with p = d12 + d23 + d34 + d41
  Rational slack;  // bound - lhs
};

/// Throws WrongArity, or InternalVerificationFailure if the slack is negative.
QuadInequality quad_inequality(const MetricSpace& m, std::span<const std::size_t> ordering);

// ---------------------------------------------------------------------------
// Conjecture checkers. They report evidence on single finite graphs.

enum class Direction {
  kMbImpliesShape,  // geodesic metric in the class, but not a path or C4
  kShapeImpliesMb,  // path or C4 whose metric is not in the class
  kIImpliesII,      // induced 4-cycle that is not an equilateral PLQ
  kIIImpliesI,      // equilateral PLQ whose induced subgraph is not a cycle
};

const char* to_string(Direction d);

struct Conjecture42Outcome {
  bool mb = false;
  ShapeClass shape;
  std::optional<IndexTriple> mb_witness;
  std::optional<Direction> violation;
  bool consistent() const { return !violation.has_value(); }
};

/// Throws Disconnected or EmptyGraph.
Conjecture42Outcome check_conjecture_42(const Graph& g);

struct QuadFinding {
  Quad subset;  // ascending vertex indices
  bool holds_i = false;   // induced subgraph is a 4-cycle
  bool holds_ii = false;  // geodesic metric on the subset is an equilateral PLQ

  friend bool operator==(const QuadFinding&, const QuadFinding&) = default;
};

/// Every 4-subset where the two statements disagree, in lexicographic order.
/// Throws Disconnected or TooSmall.
std::vector<QuadFinding> check_conjecture_44(const Graph& g);

enum class ConjectureId { kC42, kC44 };

const char* to_string(ConjectureId id);

struct Violation {
  Graph graph;
  std::vector<std::string> witness;
  Direction direction;
};

struct ConjectureReport {
  ConjectureId conjecture = ConjectureId::kC42;
  std::size_t max_n = 0;
  std::size_t graphs_checked = 0;
  std::size_t violations_found = 0;
  std::vector<Violation> violations;  // first max_violations, ordered by (n, canonical form)
};

struct SearchOptions {
  ConjectureId conjecture = ConjectureId::kC42;
  std::size_t max_n = 5;
  std::size_t max_violations = 10;
  std::size_t jobs = 1;
};

/// Runs the checker on every connected graph up to isomorphism with
/// 3 <= n <= max_n (4 <= n for C44). Output does not depend on `jobs`.
/// Throws TooLarge above the enumeration cap, TooSmall below 3.
ConjectureReport search(const SearchOptions& options);

/// Re-runs the relevant checker on a recorded violation.
bool replay(ConjectureId id, const Violation& v);

std::string report_to_json(const ConjectureReport& report);

}  // namespace graphmetric
