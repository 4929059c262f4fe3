#include "graphgroups/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace graphgroups {

namespace {

std::string numbered(std::size_t i) { return "v" + std::to_string(i); }

Graph numbered_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(numbered(i));
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : edges) named.emplace_back(numbered(u), numbered(v));
  return Graph(std::move(names), named);
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

bool is_valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  if (names_.size() > kMaxVertices) {
    throw std::invalid_argument("graph has " + std::to_string(names_.size()) +
                                " vertices; at most " + std::to_string(kMaxVertices) +
                                " are supported");
  }
  for (const auto& n : names_) {
    if (!is_valid_vertex_name(n)) throw std::invalid_argument("invalid vertex name '" + n + "'");
  }
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw std::invalid_argument("duplicate vertex '" + *dup + "'");
  }
  rows_.assign(names_.size(), 0);
  for (const auto& [a, b] : edges) {
    const VertexId u = index(a);
    const VertexId v = index(b);
    if (u == v) throw std::invalid_argument("self-loop at vertex '" + a + "'");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::index(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

VertexMask Graph::all_vertices() const {
  return names_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << names_.size()) - 1;
}

std::size_t Graph::degree(VertexId v) const {
  return static_cast<std::size_t>(std::popcount(rows_.at(v)));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v = u + 1; v < size(); ++v) {
      if (rows_[u] & bit(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::named_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [u, v] : edges()) out.emplace_back(names_[u], names_[v]);
  return out;
}

// ---------------------------------------------------------------------------

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return numbered_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n != 0 && n < 3) {
    throw std::invalid_argument("cycle(n) needs n = 0 or n >= 3 in a simple graph");
  }
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= n; ++i) e.emplace_back(i, i == n ? 1 : i + 1);
  return numbered_graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return numbered_graph(n, e);
}

Graph disjoint_edges_graph(std::size_t isolated, std::size_t edges) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t k = 0; k < edges; ++k) {
    const std::size_t first = isolated + 2 * k + 1;
    e.emplace_back(first, first + 1);
  }
  return numbered_graph(isolated + 2 * edges, e);
}

Graph four_cycle() { return cycle_graph(4); }
Graph three_edge_line() { return path_graph(4); }

Graph standard_graph(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);

  auto args = [&](std::string_view prefix) -> std::optional<std::vector<std::size_t>> {
    if (s.size() < prefix.size() + 2 || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (s[prefix.size()] != '(' || s.back() != ')') return std::nullopt;
    std::vector<std::size_t> out;
    std::string body = s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("bad argument in graph name '" + std::string(text) + "'");
      out.push_back(std::stoul(item));
    }
    return out;
  };

  if (s == "C4") return four_cycle();
  if (s == "L3") return three_edge_line();
  if (auto a = args("E"); a && a->size() == 2) return disjoint_edges_graph((*a)[0], (*a)[1]);
  if (auto a = args("complete"); a && a->size() == 1) return complete_graph((*a)[0]);
  if (auto a = args("K"); a && a->size() == 1) return complete_graph((*a)[0]);
  if (auto a = args("cycle"); a && a->size() == 1) return cycle_graph((*a)[0]);
  if (auto a = args("path"); a && a->size() == 1) return path_graph((*a)[0]);
  throw std::invalid_argument("unknown standard graph '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> e;
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(g.name(u), g.name(v));
  return Graph(g.vertices(), e);
}

ConnectedProduct connected_product(const Graph& left, const Graph& right) {
  ConnectedProduct out;
  std::set<std::string> taken(left.vertices().begin(), left.vertices().end());
  std::vector<std::string> right_names;
  for (const auto& n : right.vertices()) {
    std::string fresh = n;
    if (taken.count(fresh)) {
      // Also avoid names that `right` itself still uses.
      while (taken.count(fresh) || right.find(fresh)) fresh += '_';
      out.renamed[n] = fresh;
    }
    taken.insert(fresh);
    right_names.push_back(fresh);
  }

  std::vector<std::string> names = left.vertices();
  names.insert(names.end(), right_names.begin(), right_names.end());
  auto edges = left.named_edges();
  for (auto [u, v] : right.edges()) edges.emplace_back(right_names[u], right_names[v]);
  for (const auto& a : left.vertices())
    for (const auto& b : right_names) edges.emplace_back(a, b);
  out.graph = Graph(std::move(names), edges);
  return out;
}

std::vector<VertexMask> co_components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> blocks;
  VertexMask left = within & g.all_vertices();
  while (left) {
    const auto start = static_cast<VertexId>(std::countr_zero(left));
    VertexMask block = bit(start);
    VertexMask frontier = block;
    while (frontier) {
      const auto v = static_cast<VertexId>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const VertexMask next = within & ~g.neighbours(v) & ~block & ~bit(v);
      block |= next;
      frontier |= next;
    }
    blocks.push_back(block);
    left &= ~block;
  }
  return blocks;
}

std::vector<std::vector<VertexId>> co_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (VertexMask m : co_components(g, g.all_vertices())) {
    auto& block = out.emplace_back();
    for (; m; m &= m - 1) block.push_back(static_cast<VertexId>(std::countr_zero(m)));
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  return co_components(complement(g));
}

Graph induced(const Graph& g, VertexMask subset) {
  std::vector<std::string> names;
  for (VertexMask m = subset; m; m &= m - 1) {
    names.push_back(g.name(static_cast<VertexId>(std::countr_zero(m))));
  }
  std::vector<std::pair<std::string, std::string>> e;
  for (auto [u, v] : g.edges())
    if ((subset & bit(u)) && (subset & bit(v))) e.emplace_back(g.name(u), g.name(v));
  return Graph(std::move(names), e);
}

Graph induced(const Graph& g, const std::vector<std::string>& subset) {
  VertexMask m = 0;
  for (const auto& n : subset) m |= bit(g.index(n));
  return induced(g, m);
}

bool is_embedding(const Graph& pattern, const Graph& host, const VertexInjection& map) {
  if (map.size() != pattern.size()) return false;
  std::set<std::string> image;
  for (const auto& [p, h] : map) {
    if (!pattern.find(p) || !host.find(h)) return false;
    image.insert(h);
  }
  if (image.size() != map.size()) return false;
  for (const auto& [p1, h1] : map)
    for (const auto& [p2, h2] : map)
      if (pattern.adjacent(p1, p2) != host.adjacent(h1, h2)) return false;
  return true;
}

std::optional<VertexInjection> find_embedding(const Graph& pattern, const Graph& host) {
  const std::size_t np = pattern.size();
  if (np > host.size()) return std::nullopt;

  std::vector<VertexId> order(np);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return pattern.degree(a) > pattern.degree(b);
  });

  // Candidate domains filtered by degree and co-degree.
  std::vector<VertexMask> domain(np, 0);
  for (VertexId p = 0; p < np; ++p) {
    const std::size_t pd = pattern.degree(p);
    const std::size_t pco = np - 1 - pd;
    for (VertexId h = 0; h < host.size(); ++h) {
      const std::size_t hd = host.degree(h);
      if (hd >= pd && host.size() - 1 - hd >= pco) domain[p] |= bit(h);
    }
  }

  std::vector<VertexId> assigned(np, 0);
  std::function<bool(std::size_t, std::vector<VertexMask>&)> extend =
      [&](std::size_t depth, std::vector<VertexMask>& dom) -> bool {
    if (depth == np) return true;
    const VertexId p = order[depth];
    for (VertexMask cand = dom[p]; cand; cand &= cand - 1) {
      const auto h = static_cast<VertexId>(std::countr_zero(cand));
      std::vector<VertexMask> next = dom;
      bool ok = true;
      for (std::size_t k = depth + 1; k < np && ok; ++k) {
        const VertexId q = order[k];
        const VertexMask allowed =
            pattern.adjacent(p, q) ? host.neighbours(h) : (~host.neighbours(h) & ~bit(h));
        next[q] &= allowed & ~bit(h);
        ok = next[q] != 0;
      }
      if (!ok) continue;
      assigned[p] = h;
      if (extend(depth + 1, next)) return true;
    }
    return false;
  };

  if (!extend(0, domain)) return std::nullopt;
  VertexInjection out;
  for (VertexId p = 0; p < np; ++p) out[pattern.name(p)] = host.name(assigned[p]);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return find_embedding(a, b).has_value();
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  std::function<void(VertexMask, std::size_t)> grow = [&](VertexMask candidates, std::size_t size) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    if (!candidates) {
      best = std::max(best, size);
      return;
    }
    while (candidates) {
      if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
      const auto v = static_cast<VertexId>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      grow(candidates & g.neighbours(v), size + 1);
    }
    best = std::max(best, size);
  };
  grow(g.all_vertices(), 0);
  return best;
}

std::vector<Graph> isomorphism_classes(std::size_t n) {
  if (n > 6) throw std::invalid_argument("isomorphism_classes supports n <= 6");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pair_index[pairs[k].first][pairs[k].second] = k;
    pair_index[pairs[k].second][pairs[k].first] = k;
  }

  // For every permutation, where each edge bit moves to.
  std::vector<std::vector<std::size_t>> moves;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<std::size_t> m(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      m[k] = pair_index[perm[pairs[k].first]][perm[pairs[k].second]];
    moves.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    bool minimal = true;
    for (const auto& m : moves) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (code >> k & 1U) image |= std::uint64_t{1} << m[k];
      if (image < code) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (code >> k & 1U) e.emplace_back(pairs[k].first + 1, pairs[k].second + 1);
    out.push_back(numbered_graph(n, e));
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph parse_graph(std::istream& in, const std::string& source) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool have_vertices = false;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string t; tokens >> t;) args.push_back(t);

    if (keyword == "vertices") {
      if (have_vertices) throw ParseError(source, line_no, "second 'vertices' line");
      have_vertices = true;
      for (const auto& a : args) {
        if (!is_valid_vertex_name(a)) throw ParseError(source, line_no, "invalid vertex name '" + a + "'");
        if (!seen.insert(a).second) throw ParseError(source, line_no, "duplicate vertex '" + a + "'");
        names.push_back(a);
      }
    } else if (keyword == "edge") {
      if (args.size() != 2) throw ParseError(source, line_no, "'edge' takes exactly two vertices");
      for (const auto& a : args)
        if (!seen.count(a)) throw ParseError(source, line_no, "unknown endpoint '" + a + "'");
      if (args[0] == args[1]) throw ParseError(source, line_no, "self-loop at '" + args[0] + "'");
      edges.emplace_back(args[0], args[1]);
    } else {
      throw ParseError(source, line_no, "unknown directive '" + keyword + "'");
    }
  }
  try {
    return Graph(std::move(names), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line_no, e.what());
  }
}

Graph parse_graph(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, source);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  return parse_graph(in, path);
}

std::string format_graph(const Graph& g) {
  std::string out = "vertices";
  for (const auto& n : g.vertices()) out += " " + n;
  out += "\n";
  for (const auto& [a, b] : g.named_edges()) out += "edge " + a + " " + b + "\n";
  return out;
}

}  // namespace graphgroups
