#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dibs {

/// Base class for every error raised by the library. `reason()` is a short
/// machine-readable token (e.g. "triangle", "retry-exhausted") that the CLI
/// prints verbatim; `what()` carries the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

  /// Vertices (or vertex pairs flattened) naming the offending object, if any.
  const std::vector<std::uint64_t>& witness() const noexcept { return witness_; }

 protected:
  Error(std::string reason, const std::string& message, std::vector<std::uint64_t> witness)
      : std::runtime_error(message), reason_(std::move(reason)), witness_(std::move(witness)) {}

 private:
  std::string reason_;
  std::vector<std::uint64_t> witness_;
};

/// Malformed input to build_graph or a parser: out-of-range endpoint, self-loop,
/// bad token. `index` is the offending pair/line index when known.
class InputError : public Error {
 public:
  InputError(const std::string& message, std::uint64_t index)
      : Error("input", message, {index}), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// A documented precondition does not hold (empty core, degree too small, ...).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string reason, const std::string& message,
                    std::vector<std::uint64_t> witness = {})
      : Error(std::move(reason), message, std::move(witness)) {}
};

/// The host graph was required to be triangle-free but is not.
class TriangleFound : public Error {
 public:
  TriangleFound(std::uint64_t a, std::uint64_t b, std::uint64_t c)
      : Error("triangle",
              "graph contains triangle " + std::to_string(a) + " " + std::to_string(b) + " " +
                  std::to_string(c),
              {a, b, c}) {}
};

/// A randomized search ran out of its retry budget.
class RetryExhausted : public Error {
 public:
  RetryExhausted(const std::string& message, std::uint64_t attempts, double best_score)
      : Error("retry-exhausted", message), attempts_(attempts), best_score_(best_score) {}
  std::uint64_t attempts() const noexcept { return attempts_; }
  /// Best (largest) acceptance score seen; the search needs it strictly positive.
  double best_score() const noexcept { return best_score_; }

 private:
  std::uint64_t attempts_;
  double best_score_;
};

}  // namespace dibs
