#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphgroups/graph.hpp"
#include "graphgroups/word.hpp"

namespace graphgroups {

/// Element of the graph group G(G), held as its canonical reduced word: the
/// lexicographically least geodesic (vertex order, positive before negative).
/// Two elements are equal iff their canonical words are.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(GraphPtr ambient);
  static GroupElement parse(GraphPtr ambient, std::string_view text);

  const Graph& ambient() const { return word_.ambient(); }
  const GraphPtr& ambient_ptr() const { return word_.ambient_ptr(); }

  const Word& word() const { return word_; }
  std::span<const Letter> letters() const { return word_.letters(); }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  /// Bases occurring in any (equivalently every) reduced word.
  VertexMask support() const { return word_.content(); }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement power(long long n) const;

  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.word_ == b.word_; }

 private:
  explicit GroupElement(Word canonical) : word_(std::move(canonical)) {}
  friend GroupElement group_reduce(const Word& w);
  friend GroupElement from_reduced(GraphPtr ambient, std::vector<Letter> reduced);

  Word word_;
};

/// Geodesic canonical representative of w.
GroupElement group_reduce(const Word& w);

/// Wraps a word already known to be reduced; only reorders it into
/// canonical form.
GroupElement from_reduced(GraphPtr ambient, std::vector<Letter> reduced);

bool group_equal(const Word& u, const Word& v);

std::vector<std::string> support_names(const GroupElement& g);

/// Every support base of u is adjacent to every support base of v (a base
/// counts as adjacent to itself).
bool commutes_totally(const GroupElement& u, const GroupElement& v);

/// uv = vu in G(G).
bool group_commute(const GroupElement& u, const GroupElement& v);

/// Image under the retraction onto the subgroup generated by `keep`: letters
/// with other bases are deleted, then the word is reduced.
GroupElement retract(const GroupElement& g, VertexMask keep);

/// u = u'x and v = x^-1 v' as reduced factorisations with u'v' a reduced
/// factorisation of uv.
struct ReducedFactorization {
  GroupElement left;    // u'
  GroupElement middle;  // x
  GroupElement right;   // v'
};

ReducedFactorization multiply_factorize(const GroupElement& u, const GroupElement& v);

/// g = p h p^-1 as a reduced product with h cyclically reduced.
struct CyclicDecomposition {
  GroupElement conjugator;  // p
  GroupElement core;        // h
};

CyclicDecomposition cyclic_reduce(const GroupElement& g);
bool is_cyclically_reduced(const GroupElement& g);

struct PureFactor {
  GroupElement base;  // not a proper power
  std::size_t exponent = 1;
};

/// Pure factors of a cyclically reduced element, one per co-component of its
/// support, ordered by least support vertex.
struct PureFactorization {
  std::vector<PureFactor> factors;
};

/// Throws std::invalid_argument unless h is cyclically reduced.
PureFactorization pure_factors(const GroupElement& h);

/// Product of base^exponent over all factors.
GroupElement expand(const PureFactorization& f, const GraphPtr& ambient);

enum class CentralizerStatus { found, no_witness_within_bound, proved_non_commuting };

const char* to_string(CentralizerStatus s);

/// k = p (prod factor_i^exponents_i) k2 p^-1 with k2 commuting totally with h.
struct CentralizerWitness {
  GroupElement conjugator;       // p
  std::vector<long long> exponents;
  GroupElement remainder;        // k2
};

struct CentralizerResult {
  CentralizerStatus status = CentralizerStatus::proved_non_commuting;
  std::optional<CentralizerWitness> witness;
  CyclicDecomposition decomposition;
  PureFactorization factors;
  std::size_t exponent_bound = 0;
};

/// Searches for a witness that k lies in the centralizer of g. Exponents are
/// limited to |e| <= length(k) + length(h).
CentralizerResult centralizer_witness(const GroupElement& g, const GroupElement& k);

/// p (prod base_i^e_i) k2 p^-1.
GroupElement rebuild(const CentralizerWitness& w, const PureFactorization& f);

/// All elements of length <= radius, ordered by length then canonical word.
std::vector<GroupElement> group_ball(const GraphPtr& ambient, std::size_t radius);

}  // namespace graphgroups
