#include "graphgroups/trace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace graphgroups {

namespace {

void require_monoid_pair(const Word& u, const Word& v) {
  require_same_ambient(u, v);
  require_positive(u);
  require_positive(v);
}

std::vector<VertexId> sigma_sequence(const Word& w, VertexId x, VertexId y) {
  std::vector<VertexId> out;
  for (auto l : w.letters())
    if (l.vertex == x || l.vertex == y) out.push_back(l.vertex);
  return out;
}

bool projections_agree(std::span<const Letter> u, std::span<const Letter> v, VertexId x, VertexId y) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    while (i < u.size() && u[i].vertex != x && u[i].vertex != y) ++i;
    while (j < v.size() && v[j].vertex != x && v[j].vertex != y) ++j;
    if (i == u.size() || j == v.size()) return i == u.size() && j == v.size();
    if (u[i].vertex != v[j].vertex) return false;
    ++i;
    ++j;
  }
}

}  // namespace

std::size_t project_rho(const Word& w, VertexId x) {
  require_positive(w);
  if (x >= w.ambient().size()) throw std::invalid_argument("unknown vertex");
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(), [x](Letter l) { return l.vertex == x; }));
}

std::size_t project_rho(const Word& w, std::string_view x) { return project_rho(w, w.ambient().index(x)); }

Word project_sigma(const Word& w, VertexId x, VertexId y) {
  require_positive(w);
  const Graph& g = w.ambient();
  if (x >= g.size() || y >= g.size()) throw std::invalid_argument("unknown vertex");
  if (g.adjacent(x, y)) {
    throw std::invalid_argument("pair projection needs distinct non-adjacent vertices, got " + g.name(x) +
                                ", " + g.name(y));
  }
  std::vector<Letter> out;
  for (auto l : w.letters())
    if (l.vertex == x || l.vertex == y) out.push_back(l);
  return Word(w.ambient_ptr(), std::move(out));
}

Word project_sigma(const Word& w, std::string_view x, std::string_view y) {
  return project_sigma(w, w.ambient().index(x), w.ambient().index(y));
}

bool trace_equal(const Word& u, const Word& v) {
  require_monoid_pair(u, v);
  if (u.size() != v.size()) return false;
  const Graph& g = u.ambient();
  std::vector<std::size_t> cu(g.size(), 0);
  std::vector<std::size_t> cv(g.size(), 0);
  for (auto l : u.letters()) ++cu[l.vertex];
  for (auto l : v.letters()) ++cv[l.vertex];
  if (cu != cv) return false;
  for (VertexId x = 0; x < g.size(); ++x) {
    if (cu[x] == 0) continue;
    for (VertexId y = x + 1; y < g.size(); ++y) {
      if (g.adjacent(x, y) || cu[y] == 0) continue;
      if (!projections_agree(u.letters(), v.letters(), x, y)) return false;
    }
  }
  return true;
}

std::vector<Letter> lex_normal_form(const Graph& g, std::span<const Letter> letters) {
  std::vector<Letter> rest(letters.begin(), letters.end());
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // A letter can move to the front iff it commutes with everything before it.
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j) available = letters_commute(g, rest[j], rest[i]);
      if (available && (!found || rest[i] < rest[best])) {
        best = i;
        found = true;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word trace_normal_form(const Word& w) {
  require_positive(w);
  return Word(w.ambient_ptr(), lex_normal_form(w.ambient(), w.letters()));
}

std::size_t free_primitive_period(std::span<const VertexId> s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = s[i] == s[i - d];
    if (periodic) return d;
  }
  return n;
}

std::optional<std::pair<VertexId, VertexId>> commutation_obstruction(const Word& u, const Word& v) {
  require_monoid_pair(u, v);
  const Graph& g = u.ambient();
  const VertexMask cu = u.content();
  const VertexMask cv = v.content();
  for (VertexId x = 0; x < g.size(); ++x) {
    for (VertexId y = x + 1; y < g.size(); ++y) {
      if (g.adjacent(x, y)) continue;
      const VertexMask xy = bit(x) | bit(y);
      if (!(cu & xy) || !(cv & xy)) continue;  // an empty projection is w^0
      const auto su = sigma_sequence(u, x, y);
      const auto sv = sigma_sequence(v, x, y);
      const std::size_t pu = free_primitive_period(su);
      const std::size_t pv = free_primitive_period(sv);
      if (pu != pv || !std::equal(su.begin(), su.begin() + static_cast<std::ptrdiff_t>(pu), sv.begin())) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

bool trace_commute(const Word& u, const Word& v) { return !commutation_obstruction(u, v).has_value(); }

std::pair<std::vector<Letter>, std::size_t> signed_primitive_root(const Graph& g,
                                                                  std::span<const Letter> letters) {
  if (letters.empty()) throw std::invalid_argument("primitive root of the empty word");
  std::map<Letter, std::size_t> counts;
  for (auto l : letters) ++counts[l];
  std::size_t common = 0;
  for (const auto& [l, c] : counts) common = std::gcd(common, c);

  const auto target = lex_normal_form(g, letters);
  for (std::size_t k = common; k >= 1; --k) {
    if (common % k != 0) continue;
    // A prefix of a trace is fixed by how many of each letter it takes, so
    // the only candidate root takes the first count/k occurrences of each.
    std::map<Letter, std::size_t> quota;
    for (const auto& [l, c] : counts) quota[l] = c / k;
    std::vector<Letter> candidate;
    for (auto l : letters) {
      auto& q = quota[l];
      if (q > 0) {
        candidate.push_back(l);
        --q;
      }
    }
    std::vector<Letter> powered;
    for (std::size_t i = 0; i < k; ++i) powered.insert(powered.end(), candidate.begin(), candidate.end());
    if (lex_normal_form(g, powered) == target) return {lex_normal_form(g, candidate), k};
  }
  return {target, 1};  // unreachable: k = 1 always matches
}

PrimitiveRoot primitive_root(const Word& w) {
  require_positive(w);
  auto [root, k] = signed_primitive_root(w.ambient(), w.letters());
  return {Word(w.ambient_ptr(), std::move(root)), k};
}

std::size_t max_free_commutative_rank(const Graph& g) { return clique_number(g); }

ProductEmbeddingTable::ProductEmbeddingTable(GraphPtr g) : graph_(std::move(g)) {
  for (VertexId x = 0; x < graph_->size(); ++x)
    coordinates_.push_back({ProductCoordinate::Kind::rank_one, x, x});
  rank_one_ = coordinates_.size();
  for (VertexId x = 0; x < graph_->size(); ++x)
    for (VertexId y = x + 1; y < graph_->size(); ++y)
      if (!graph_->adjacent(x, y)) coordinates_.push_back({ProductCoordinate::Kind::rank_two, x, y});
}

Graph ProductEmbeddingTable::target_graph() const {
  return complement(disjoint_edges_graph(rank_one_count(), rank_two_count()));
}

std::vector<std::vector<VertexId>> ProductEmbeddingTable::evaluate(const Word& w) const {
  require_positive(w);
  if (w.ambient_ptr() != graph_ && !(w.ambient() == *graph_)) throw std::invalid_argument("ambient mismatch");
  std::vector<std::vector<VertexId>> out;
  out.reserve(coordinates_.size());
  for (const auto& c : coordinates_) {
    if (c.kind == ProductCoordinate::Kind::rank_one) {
      out.emplace_back(project_rho(w, c.x), c.x);
    } else {
      out.push_back(sigma_sequence(w, c.x, c.y));
    }
  }
  return out;
}

ProductEmbeddingTable embed_into_product(GraphPtr g) { return ProductEmbeddingTable(std::move(g)); }

}  // namespace graphgroups
