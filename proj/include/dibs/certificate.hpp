#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

/// Audit record of one extraction: seed, retries, and named stage statistics
/// (|X|, |Y|, e(Y), chosen colour class, ...) in insertion order.
struct ExtractionTrace {
  std::uint64_t seed = 0;
  std::uint64_t retries = 0;
  std::uint64_t retry_budget = 0;
  std::vector<std::pair<std::string, std::int64_t>> stage_stats;
  std::vector<std::string> notes;

  void set(const std::string& name, std::int64_t value);
  std::optional<std::int64_t> get(const std::string& name) const;
  bool has_note(const std::string& note) const;
  void note(std::string text);
};

/// Claimed induced bipartite subgraph: two disjoint independent sets where every
/// vertex has at least `claimed_min_degree` neighbours on the other side.
struct BipartiteCert {
  std::string algorithm;
  VertexSet side_a;
  VertexSet side_b;
  std::uint64_t claimed_min_degree = 0;  // achieved by this certificate
  std::uint64_t guarantee = 0;           // bound promised by the algorithm
  ExtractionTrace trace;

  std::size_t size() const { return side_a.size() + side_b.size(); }
};

/// Builds a certificate from two sides, sorting them and setting
/// claimed_min_degree to the achieved cross degree.
BipartiteCert make_certificate(const Graph& g, std::string algorithm, VertexSet side_a,
                               VertexSet side_b);

struct VerificationReport {
  bool ok = false;
  std::string failure;                // empty when ok
  std::vector<std::uint64_t> witness;  // shared vertex, inner edge, or low-degree vertex
  std::uint64_t achieved_min_degree = 0;
  std::uint64_t edges_across = 0;

  std::string describe() const;
};

/// Checks the certificate against g using nothing but g's adjacency. Throws
/// PreconditionError("range") if a listed vertex is >= g.n().
VerificationReport verify_bipartite_cert(const Graph& g, const BipartiteCert& cert);

/// Minimum number of cross neighbours over side_a ∪ side_b (0 when empty).
std::uint64_t cross_min_degree(const Graph& g, const VertexSet& side_a, const VertexSet& side_b);

/// Fixed-field-order text document (see README for the grammar).
void write_certificate(std::ostream& out, const BipartiteCert& cert);
std::string certificate_to_string(const BipartiteCert& cert);
BipartiteCert read_certificate(std::istream& in);
BipartiteCert read_certificate_file(const std::string& path);

}  // namespace dibs
