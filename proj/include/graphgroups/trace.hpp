#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphgroups/graph.hpp"
#include "graphgroups/word.hpp"

namespace graphgroups {

// Elements of the graph (trace) monoid M(G). Monoid words carry no inverse
// letters; every public function here rejects them with
// std::invalid_argument.

/// Number of occurrences of x in w (the rank-one projection).
std::size_t project_rho(const Word& w, VertexId x);
std::size_t project_rho(const Word& w, std::string_view x);

/// Subsequence of x and y occurrences. Defined only for distinct,
/// non-adjacent x and y; anything else throws std::invalid_argument.
Word project_sigma(const Word& w, VertexId x, VertexId y);
Word project_sigma(const Word& w, std::string_view x, std::string_view y);

/// Equality in M(G), decided by comparing every rank-one projection and every
/// projection onto a non-adjacent pair.
bool trace_equal(const Word& u, const Word& v);

/// Lexicographically least word in the commutation class of w.
Word trace_normal_form(const Word& w);

/// uv = vu in M(G), decided pairwise: for each non-adjacent {x, y} the two
/// projections must be powers of one primitive word.
bool trace_commute(const Word& u, const Word& v);

/// A non-adjacent pair on which u and v fail the commutation test, if any.
std::optional<std::pair<VertexId, VertexId>> commutation_obstruction(const Word& u, const Word& v);

struct PrimitiveRoot {
  Word root;  // in normal form
  std::size_t exponent = 1;
};

/// w = root^exponent with exponent maximal. Throws on the empty word.
PrimitiveRoot primitive_root(const Word& w);

/// Size of the largest clique of g, which is the largest rank of a free
/// commutative submonoid of M(g).
std::size_t max_free_commutative_rank(const Graph& g);

/// Coordinates of the injective morphism from M(G) into a direct product of
/// free monoids of rank one (one per vertex) and rank two (one per
/// non-adjacent pair).
struct ProductCoordinate {
  enum class Kind { rank_one, rank_two };
  Kind kind = Kind::rank_one;
  VertexId x = 0;
  VertexId y = 0;  // rank_two only
};

class ProductEmbeddingTable {
 public:
  explicit ProductEmbeddingTable(GraphPtr g);

  const Graph& source() const { return *graph_; }
  const std::vector<ProductCoordinate>& coordinates() const { return coordinates_; }
  std::size_t rank_one_count() const { return rank_one_; }
  std::size_t rank_two_count() const { return coordinates_.size() - rank_one_; }

  /// Complement of E(rank_one_count, rank_two_count): the graph whose monoid
  /// is the product of the coordinate monoids.
  Graph target_graph() const;

  /// Image of w, one free-monoid word per coordinate (a rank-one coordinate
  /// is x repeated rho_x(w) times).
  std::vector<std::vector<VertexId>> evaluate(const Word& w) const;

 private:
  GraphPtr graph_;
  std::vector<ProductCoordinate> coordinates_;
  std::size_t rank_one_ = 0;
};

ProductEmbeddingTable embed_into_product(GraphPtr g);

// ---------------------------------------------------------------------------
// Signed-alphabet trace machinery, shared with the group code. Letters with
// the same base but opposite signs are distinct and do not commute.

std::vector<Letter> lex_normal_form(const Graph& g, std::span<const Letter> letters);

/// Primitive root over the signed alphabet; letters must be non-empty.
std::pair<std::vector<Letter>, std::size_t> signed_primitive_root(const Graph& g,
                                                                  std::span<const Letter> letters);

/// Free-monoid primitive root of a plain sequence: least period dividing
/// the length.
std::size_t free_primitive_period(std::span<const VertexId> s);

}  // namespace graphgroups
