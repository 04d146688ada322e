#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad JSON, wrong shape, duplicate or reserved labels).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A distance table that breaks one of the metric axioms.
///
/// `indices` holds the witnessing point indices: one index for a nonzero
/// diagonal, a pair for asymmetry or a zero off-diagonal entry, and a triple
/// (i, j, k) with d(i,j) > d(i,k) + d(k,j) for a triangle failure.
class MetricViolation : public Error {
 public:
  enum class Kind { kNonzeroDiagonal, kAsymmetry, kZeroDistance, kNegativeDistance, kTriangle };

  MetricViolation(Kind kind, std::vector<std::size_t> indices, const std::string& what)
      : Error(what), kind_(kind), indices_(std::move(indices)) {}

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  Kind kind_;
  std::vector<std::size_t> indices_;
};

const char* to_string(MetricViolation::Kind kind);

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label) : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class NotIntegerMetric : public Error {
 public:
  NotIntegerMetric() : Error("metric has non-integer distances") {}
};

/// realize() was called on a metric without a between point for some pair at distance >= 2.
class ConditionFailed : public Error {
 public:
  ConditionFailed(std::string first, std::string second)
      : Error("no point lies between '" + first + "' and '" + second + "'"),
        pair_(std::move(first), std::move(second)) {}
  const std::pair<std::string, std::string>& pair() const { return pair_; }

 private:
  std::pair<std::string, std::string> pair_;
};

/// A construction produced output that failed its own verification. Always a bug.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  EmptySubset() : Error("vertex subset is empty") {}
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no edges") {}
};

class WrongArity : public Error {
 public:
  using Error::Error;
};

}  // namespace graphmetric
