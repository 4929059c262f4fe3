#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphgroups/graph.hpp"

namespace graphgroups {

/// A generator or its inverse. Ordered by vertex, then positive before
/// negative.
struct Letter {
  VertexId vertex = 0;
  bool inverted = false;

  Letter inverse() const { return {vertex, !inverted}; }
  auto operator<=>(const Letter&) const = default;
};

/// Two letters commute iff their bases are distinct and adjacent.
inline bool letters_commute(const Graph& g, Letter a, Letter b) {
  return a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex);
}

/// A word over the symmetrised generators of an ambient graph. Plain value:
/// equality is letter-by-letter, not equality in the monoid or group.
class Word {
 public:
  Word() = default;
  explicit Word(GraphPtr ambient, std::vector<Letter> letters = {});

  /// Whitespace-separated vertex names, each optionally followed by a single
  /// apostrophe for the inverse. "" and "1" denote the empty word (unless
  /// "1" is a vertex name).
  static Word parse(GraphPtr ambient, std::string_view text);
  /// Builds a positive word from a vertex-name sequence.
  static Word of(GraphPtr ambient, const std::vector<std::string>& names);

  const Graph& ambient() const { return *ambient_; }
  const GraphPtr& ambient_ptr() const { return ambient_; }

  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& letter_vector() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const;
  /// Bases occurring in the word.
  VertexMask content() const;

  /// Concatenation; throws std::invalid_argument on ambient mismatch.
  Word operator*(const Word& other) const;
  Word power(std::size_t n) const;
  /// Formal inverse: reversed, each letter inverted.
  Word inverse() const;

  /// "a b c'" style; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && (a.ambient_ == b.ambient_ ||
                                        (a.ambient_ && b.ambient_ && *a.ambient_ == *b.ambient_));
  }

 private:
  GraphPtr ambient_;
  std::vector<Letter> letters_;
};

bool same_ambient(const Word& a, const Word& b);
/// Throws std::invalid_argument("ambient mismatch") unless same_ambient.
void require_same_ambient(const Word& a, const Word& b);
/// Throws std::invalid_argument if the word contains an inverse letter.
void require_positive(const Word& w);

std::string format_letters(const Graph& g, std::span<const Letter> letters);

}  // namespace graphgroups
