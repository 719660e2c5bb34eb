#include "dibs/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dibs/errors.hpp"
#include "dibs/rng.hpp"

namespace dibs {

void ExtractionTrace::set(const std::string& name, std::int64_t value) {
  for (auto& [k, v] : stage_stats) {
    if (k == name) {
      v = value;
      return;
    }
  }
  stage_stats.emplace_back(name, value);
}

std::optional<std::int64_t> ExtractionTrace::get(const std::string& name) const {
  for (const auto& [k, v] : stage_stats)
    if (k == name) return v;
  return std::nullopt;
}

bool ExtractionTrace::has_note(const std::string& text) const {
  return std::find(notes.begin(), notes.end(), text) != notes.end();
}

void ExtractionTrace::note(std::string text) {
  if (!has_note(text)) notes.push_back(std::move(text));
}

std::uint64_t cross_min_degree(const Graph& g, const VertexSet& side_a, const VertexSet& side_b) {
  if (side_a.empty() && side_b.empty()) return 0;
  auto in_a = membership(g.n(), side_a);
  auto in_b = membership(g.n(), side_b);
  std::uint64_t best = ~std::uint64_t{0};
  for (Vertex v : side_a) {
    std::uint64_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in_b[w];
    best = std::min(best, d);
  }
  for (Vertex v : side_b) {
    std::uint64_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in_a[w];
    best = std::min(best, d);
  }
  return best;
}

BipartiteCert make_certificate(const Graph& g, std::string algorithm, VertexSet side_a,
                               VertexSet side_b) {
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  BipartiteCert cert;
  cert.algorithm = std::move(algorithm);
  cert.claimed_min_degree = cross_min_degree(g, side_a, side_b);
  cert.side_a = std::move(side_a);
  cert.side_b = std::move(side_b);
  return cert;
}

std::string VerificationReport::describe() const {
  std::ostringstream os;
  if (ok) {
    os << "PASS min_degree=" << achieved_min_degree << " edges=" << edges_across;
  } else {
    os << "FAIL " << failure << " witness=";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  }
  return os.str();
}

VerificationReport verify_bipartite_cert(const Graph& g, const BipartiteCert& cert) {
  for (const VertexSet* side : {&cert.side_a, &cert.side_b})
    for (Vertex v : *side)
      if (v >= g.n())
        throw PreconditionError("range", "certificate vertex " + std::to_string(v) +
                                             " outside graph of order " + std::to_string(g.n()),
                                {v});

  VerificationReport report;
  auto fail = [&](std::string why, std::vector<std::uint64_t> witness) {
    report.ok = false;
    report.failure = std::move(why);
    report.witness = std::move(witness);
    return report;
  };

  // 0 = absent, 1 = side a, 2 = side b
  std::vector<std::uint8_t> side(g.n(), 0);
  for (Vertex v : cert.side_a) {
    if (side[v] == 1) return fail("duplicate", {v});
    side[v] = 1;
  }
  for (Vertex v : cert.side_b) {
    if (side[v] == 1) return fail("overlap", {v});
    if (side[v] == 2) return fail("duplicate", {v});
    side[v] = 2;
  }
  if (cert.claimed_min_degree >= 1 && (cert.side_a.empty() || cert.side_b.empty()))
    return fail("empty-side", {});

  std::uint64_t min_deg = ~std::uint64_t{0};
  std::uint64_t across = 0;
  std::optional<std::uint64_t> low_vertex;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!side[u]) continue;
    std::uint64_t d = 0;
    for (Vertex w : g.neighbors(u)) {
      if (!side[w]) continue;
      if (side[w] == side[u])
        return fail(side[u] == 1 ? "edge-in-side-a" : "edge-in-side-b",
                    {std::min(u, w), std::max(u, w)});
      ++d;
    }
    across += d;
    if (d < cert.claimed_min_degree && !low_vertex) low_vertex = u;
    min_deg = std::min(min_deg, d);
  }
  report.edges_across = across / 2;
  report.achieved_min_degree = cert.size() ? min_deg : 0;
  if (low_vertex) return fail("low-degree", {*low_vertex});
  report.ok = true;
  return report;
}

namespace {

void write_side(std::ostream& out, const char* key, const VertexSet& side) {
  out << key << ' ' << side.size();
  for (Vertex v : side) out << ' ' << v;
  out << '\n';
}

}  // namespace

void write_certificate(std::ostream& out, const BipartiteCert& cert) {
  out << "dibs-certificate 1\n";
  out << "algorithm " << cert.algorithm << '\n';
  out << "seed " << cert.trace.seed << '\n';
  out << "rng " << kRngName << '\n';
  out << "guarantee " << cert.guarantee << '\n';
  out << "achieved " << cert.claimed_min_degree << '\n';
  write_side(out, "side_a", cert.side_a);
  write_side(out, "side_b", cert.side_b);
  out << "retries " << cert.trace.retries << '\n';
  out << "retry_budget " << cert.trace.retry_budget << '\n';
  for (const auto& [k, v] : cert.trace.stage_stats) out << "stat " << k << ' ' << v << '\n';
  for (const auto& note : cert.trace.notes) out << "note " << note << '\n';
  out << "end\n";
}

std::string certificate_to_string(const BipartiteCert& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

BipartiteCert read_certificate(std::istream& in) {
  BipartiteCert cert;
  std::string line;
  std::uint64_t lineno = 0;
  bool header = false, ended = false;
  auto bad = [&](const std::string& why) {
    return InputError("certificate line " + std::to_string(lineno) + ": " + why, lineno);
  };
  auto read_side = [&](std::istringstream& row, VertexSet& side) {
    std::uint64_t count = 0;
    if (!(row >> count)) throw bad("missing side size");
    side.clear();
    for (std::uint64_t i = 0; i < count; ++i) {
      std::int64_t v = 0;
      if (!(row >> v) || v < 0 || v > 0xffffffffll) throw bad("bad vertex");
      side.push_back(static_cast<Vertex>(v));
    }
    std::string extra;
    if (row >> extra) throw bad("side has more vertices than declared");
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string key;
    row >> key;
    if (!header) {
      int version = 0;
      if (key != "dibs-certificate" || !(row >> version) || version != 1)
        throw bad("expected `dibs-certificate 1`");
      header = true;
      continue;
    }
    if (key == "algorithm") {
      row >> cert.algorithm;
    } else if (key == "seed") {
      if (!(row >> cert.trace.seed)) throw bad("bad seed");
    } else if (key == "rng") {
      // informational
    } else if (key == "guarantee") {
      if (!(row >> cert.guarantee)) throw bad("bad guarantee");
    } else if (key == "achieved") {
      if (!(row >> cert.claimed_min_degree)) throw bad("bad achieved");
    } else if (key == "side_a") {
      read_side(row, cert.side_a);
    } else if (key == "side_b") {
      read_side(row, cert.side_b);
    } else if (key == "retries") {
      if (!(row >> cert.trace.retries)) throw bad("bad retries");
    } else if (key == "retry_budget") {
      if (!(row >> cert.trace.retry_budget)) throw bad("bad retry_budget");
    } else if (key == "stat") {
      std::string name;
      std::int64_t value = 0;
      if (!(row >> name >> value)) throw bad("bad stat");
      cert.trace.stage_stats.emplace_back(name, value);
    } else if (key == "note") {
      std::string rest;
      std::getline(row >> std::ws, rest);
      cert.trace.notes.push_back(rest);
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      throw bad("unknown field `" + key + "`");
    }
  }
  if (!header) throw InputError("empty certificate", 0);
  if (!ended) throw InputError("certificate missing `end`", lineno);
  return cert;
}

BipartiteCert read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open certificate " + path, 0);
  return read_certificate(in);
}

}  // namespace dibs
