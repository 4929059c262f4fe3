#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphgroups/graph.hpp"
#include "graphgroups/word.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace graphgroups;

// Square a-b-c-d-a.
inline GraphPtr square() { return share(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})); }

// Path w-x-y-z.
inline GraphPtr line() { return share(Graph({"w", "x", "y", "z"}, {{"w", "x"}, {"x", "y"}, {"y", "z"}})); }

// x isolated, y-z an edge.
inline GraphPtr e11() { return share(Graph({"x", "y", "z"}, {{"y", "z"}})); }

// Free group on u, v.
inline GraphPtr free2() { return share(Graph({"u", "v"}, {})); }

inline Word w(const GraphPtr& g, std::string_view text) { return Word::parse(g, text); }

inline Word as_word(const GraphPtr& g, const oracle::Letters& l) { return Word(g, l); }

inline std::vector<Word> words(const GraphPtr& g, std::size_t max_len, bool signed_letters = false) {
  const auto alphabet = signed_letters ? oracle::signed_alphabet(*g) : oracle::positive_alphabet(*g);
  std::vector<Word> out;
  for (auto& l : oracle::all_words(alphabet, max_len)) out.emplace_back(g, std::move(l));
  return out;
}

}  // namespace fixtures
