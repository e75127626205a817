#pragma once

// General hypergraphs: a vertex count plus a set of distinct, non-empty edges.
// Vertices are 1-based.  A Hypergraph is always in canonical form (each edge
// sorted, edge list sorted lexicographically) and immutable once built.

#include "hyperspec/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperspec {

using Vertex = std::size_t;

class Edge {
 public:
  Edge() = default;
  explicit Edge(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t delta_max = 0;
  bool is_regular = false;
  std::size_t k = 0;  // common degree, meaningful only when is_regular
};

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and canonicalizes.  Throws Error with EmptyEdge,
  /// VertexOutOfRange, DuplicateEdge, or SyntaxError (vertex repeated
  /// inside one edge, or n = 0).
  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> edges) : n_(n) {
    if (n == 0) throw Error(ErrorCode::SyntaxError, "vertex count must be positive");
    edges_.reserve(edges.size());
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
      edges_.push_back(make_edge(n, std::move(edges[idx]), "edge #" + std::to_string(idx + 1)));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw Error(ErrorCode::DuplicateEdge, "edge {" + edge_text(*dup) + "} appears more than once");
    }
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  /// Validation shared with the parsers so they can attach positions.
  static Edge make_edge(std::size_t n, std::vector<Vertex> vertices, const std::string& where) {
    if (vertices.empty()) throw Error(ErrorCode::EmptyEdge, where + " is empty");
    for (Vertex v : vertices) {
      if (v < 1 || v > n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    where + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
    Edge e(std::move(vertices));
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::SyntaxError, where + ": vertex repeated within an edge");
    }
    return e;
  }

  static std::string edge_text(const Edge& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// queries

/// Maximum cardinality of edges.
inline std::size_t mce(const Hypergraph& h) {
  if (h.edges().empty()) throw Error(ErrorCode::NoEdges, "maximum edge cardinality of an edgeless hypergraph");
  std::size_t best = 0;
  for (const Edge& e : h.edges()) best = std::max(best, e.size());
  return best;
}

inline DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees.assign(h.n(), 0);
  for (const Edge& e : h.edges())
    for (Vertex v : e) ++p.degrees[v - 1];
  p.delta_max = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                             [&](std::size_t d) { return d == p.degrees.front(); });
  p.k = p.is_regular ? p.degrees.front() : 0;
  return p;
}

struct Component {
  std::vector<Vertex> vertices;  // original ids, ascending; position i maps to local id i+1
  Hypergraph graph;
};

/// Connected components under "share an edge".  Isolated vertices form
/// singleton components.  Ordered by smallest original vertex.
inline std::vector<Component> components(const Hypergraph& h) {
  std::vector<std::size_t> parent(h.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      std::size_t a = find(e[0] - 1), b = find(e[i] - 1);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> root_to_comp(h.n(), SIZE_MAX);
  std::vector<std::vector<Vertex>> verts;
  for (std::size_t v = 0; v < h.n(); ++v) {
    std::size_t r = find(v);
    if (root_to_comp[r] == SIZE_MAX) {
      root_to_comp[r] = verts.size();
      verts.emplace_back();
    }
    verts[root_to_comp[r]].push_back(v + 1);
  }
  std::vector<std::vector<std::vector<Vertex>>> comp_edges(verts.size());
  std::vector<Vertex> local(h.n() + 1, 0);
  for (const auto& vs : verts)
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = i + 1;
  for (const Edge& e : h.edges()) {
    std::vector<Vertex> mapped;
    for (Vertex v : e) mapped.push_back(local[v]);
    comp_edges[root_to_comp[find(e[0] - 1)]].push_back(std::move(mapped));
  }
  std::vector<Component> out;
  for (std::size_t c = 0; c < verts.size(); ++c) {
    std::size_t size = verts[c].size();
    out.push_back({std::move(verts[c]), Hypergraph(size, std::move(comp_edges[c]))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// file formats

enum class Format { Lines, Json };

inline std::optional<Format> format_from_name(std::string_view name) {
  if (name == "lines") return Format::Lines;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline Vertex parse_id(const std::string& tok, std::size_t lineno) {
  bool digits = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!digits || tok.size() > 18) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<Vertex>(std::stoull(tok));
}

inline Hypergraph parse_lines(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() != 1) throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected the vertex count alone");
      n = parse_id(toks[0], lineno);
      if (*n == 0) throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": vertex count must be positive");
      continue;
    }
    std::vector<Vertex> vs;
    for (const auto& t : toks) vs.push_back(parse_id(t, lineno));
    edges.push_back(Hypergraph::make_edge(*n, std::move(vs), "line " + std::to_string(lineno)));
    edge_lines.push_back(lineno);
  }
  if (!n) throw Error(ErrorCode::SyntaxError, "missing vertex count");
  // report duplicates with both line numbers
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      auto [first, second] = std::minmax(edge_lines[order[i - 1]], edge_lines[order[i]]);
      throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(second) + ": edge {" +
                                                Hypergraph::edge_text(edges[order[i]]) + "} repeats line " +
                                                std::to_string(first));
    }
  }
  std::vector<std::vector<Vertex>> raw;
  for (auto& e : edges) raw.push_back(e.vertices());
  return Hypergraph(*n, std::move(raw));
}

inline Hypergraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error(ErrorCode::SyntaxError, "json: expected an object with fields \"n\" and \"edges\"");
  const auto& jn = doc["n"];
  if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0)
    throw Error(ErrorCode::SyntaxError, "json: \"n\" must be a positive integer");
  const auto& je = doc["edges"];
  if (!je.is_array()) throw Error(ErrorCode::SyntaxError, "json: \"edges\" must be an array");
  std::size_t n = jn.get<std::size_t>();
  std::vector<std::vector<Vertex>> raw;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!je[i].is_array()) throw Error(ErrorCode::SyntaxError, "json: " + where + " must be an array");
    std::vector<Vertex> vs;
    for (const auto& v : je[i]) {
      if (!v.is_number_integer()) throw Error(ErrorCode::SyntaxError, "json: " + where + " holds a non-integer");
      auto id = v.get<long long>();
      if (id < 1) throw Error(ErrorCode::VertexOutOfRange, where + ": vertex " + std::to_string(id) + " outside 1.." + std::to_string(n));
      vs.push_back(static_cast<Vertex>(id));
    }
    Hypergraph::make_edge(n, vs, where);
    raw.push_back(std::move(vs));
  }
  return Hypergraph(n, std::move(raw));
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text, Format format) {
  return format == Format::Lines ? detail::parse_lines(text) : detail::parse_json(text);
}

inline std::string serialize_lines(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : h.edges()) edges.push_back(e.vertices());
  return {{"n", h.n()}, {"edges", std::move(edges)}};
}

inline std::string serialize(const Hypergraph& h, Format format) {
  return format == Format::Lines ? serialize_lines(h) : to_json(h).dump() + "\n";
}

/// Content hash of the canonical form (FNV-1a, 64 bit), hex encoded.
inline std::string digest(const Hypergraph& h) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : serialize_lines(h)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(hash >> shift) & 0xF];
  return out;
}

}  // namespace hyperspec
