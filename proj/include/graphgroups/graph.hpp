#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphgroups {

using VertexId = std::uint32_t;
using VertexMask = std::uint64_t;

/// Largest vertex count supported; adjacency rows are 64-bit masks.
inline constexpr std::size_t kMaxVertices = 64;

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }

/// Raised by the text parsers; carries the source name and 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Finite simple graph over named vertices.
///
/// Vertices are kept in lexicographic order and a VertexId is the position in
/// that order, so comparing ids compares names. Only irreflexive edges are
/// stored; adjacent(v, v) nevertheless reports true, which is the convention
/// the commutation relation needs (every generator commutes with itself).
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on duplicate vertices, unknown endpoints,
  /// self-loops, invalid names or more than kMaxVertices vertices.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }

  std::optional<VertexId> find(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  VertexId index(std::string_view name) const;

  /// Reflexive adjacency.
  bool adjacent(VertexId u, VertexId v) const {
    return u == v || (rows_[u] & bit(v)) != 0;
  }
  bool adjacent(std::string_view u, std::string_view v) const {
    return adjacent(index(u), index(v));
  }

  /// Neighbours of v, excluding v itself.
  VertexMask neighbours(VertexId v) const { return rows_[v]; }
  VertexMask all_vertices() const;

  std::size_t degree(VertexId v) const;
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::vector<std::pair<std::string, std::string>> named_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<VertexMask> rows_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

bool is_valid_vertex_name(std::string_view name);

// ---------------------------------------------------------------------------
// Named families. Vertex names are v1, v2, ...

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Path on n vertices (n - 1 edges).
Graph path_graph(std::size_t n);
/// E(i, j): i isolated vertices followed by j disjoint edges.
Graph disjoint_edges_graph(std::size_t isolated, std::size_t edges);
/// The four-cycle v1-v2-v3-v4-v1.
Graph four_cycle();
/// The three-edge line v1-v2-v3-v4.
Graph three_edge_line();

/// Accepts C4, L3, E(i,j), complete(n), cycle(n), path(n) (whitespace
/// tolerant). Throws std::invalid_argument for anything else.
Graph standard_graph(std::string_view text);

// ---------------------------------------------------------------------------
// Constructions

Graph complement(const Graph& g);

struct ConnectedProduct {
  Graph graph;
  /// Names of the second factor that had to be changed, old -> new.
  std::map<std::string, std::string> renamed;
};

/// Disjoint union plus every cross edge. Names of `right` colliding with
/// `left` are suffixed with '_' until unique.
ConnectedProduct connected_product(const Graph& left, const Graph& right);

/// Vertex blocks of the connected components of the complement, each block
/// sorted, blocks ordered by their least vertex.
std::vector<std::vector<VertexId>> co_components(const Graph& g);
/// Same restricted to the vertices in `within` (components of the complement
/// of the induced subgraph), returned as masks.
std::vector<VertexMask> co_components(const Graph& g, VertexMask within);

std::vector<std::vector<VertexId>> components(const Graph& g);

/// Throws std::invalid_argument for unknown vertex names.
Graph induced(const Graph& g, const std::vector<std::string>& subset);
Graph induced(const Graph& g, VertexMask subset);

/// Pattern vertex name -> host vertex name.
using VertexInjection = std::map<std::string, std::string>;

/// Induced-subgraph embedding: injective, preserves adjacency and
/// non-adjacency. Exhaustive backtracking; nullopt means none exists.
std::optional<VertexInjection> find_embedding(const Graph& pattern, const Graph& host);

/// True iff `map` is an injective map V(pattern) -> V(host) preserving
/// adjacency and non-adjacency.
bool is_embedding(const Graph& pattern, const Graph& host, const VertexInjection& map);

bool isomorphic(const Graph& a, const Graph& b);

/// Size of the largest complete induced subgraph.
std::size_t clique_number(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 7), named v1..vn.
std::vector<Graph> isomorphism_classes(std::size_t n);

// ---------------------------------------------------------------------------
// Text format:
//   # comment
//   vertices a b c d
//   edge a b

Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph parse_graph(std::string_view text, const std::string& source = "<input>");
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace graphgroups
