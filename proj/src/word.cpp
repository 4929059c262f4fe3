#include "graphgroups/word.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace graphgroups {

Word::Word(GraphPtr ambient, std::vector<Letter> letters)
    : ambient_(std::move(ambient)), letters_(std::move(letters)) {
  if (!ambient_) throw std::invalid_argument("word without ambient graph");
  for (const auto& l : letters_) {
    if (l.vertex >= ambient_->size()) throw std::invalid_argument("letter outside ambient graph");
  }
}

Word Word::parse(GraphPtr ambient, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1 && tokens[0] == "1" && !ambient->find("1")) tokens.clear();

  std::vector<Letter> letters;
  for (const auto& t : tokens) {
    Letter l;
    std::string_view base = t;
    if (!base.empty() && base.back() == '\'') {
      l.inverted = true;
      base.remove_suffix(1);
    }
    if (!is_valid_vertex_name(base)) throw std::invalid_argument("malformed letter '" + t + "'");
    l.vertex = ambient->index(base);
    letters.push_back(l);
  }
  return Word(std::move(ambient), std::move(letters));
}

Word Word::of(GraphPtr ambient, const std::vector<std::string>& names) {
  std::vector<Letter> letters;
  for (const auto& n : names) letters.push_back({ambient->index(n), false});
  return Word(std::move(ambient), std::move(letters));
}

bool Word::is_positive() const {
  return std::none_of(letters_.begin(), letters_.end(), [](Letter l) { return l.inverted; });
}

VertexMask Word::content() const {
  VertexMask m = 0;
  for (auto l : letters_) m |= bit(l.vertex);
  return m;
}

Word Word::operator*(const Word& other) const {
  require_same_ambient(*this, other);
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(ambient_, std::move(out));
}

Word Word::power(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(ambient_, std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(ambient_, std::move(out));
}

std::string Word::to_string() const { return format_letters(*ambient_, letters_); }

std::string format_letters(const Graph& g, std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += g.name(l.vertex);
    if (l.inverted) out += '\'';
  }
  return out;
}

bool same_ambient(const Word& a, const Word& b) {
  return a.ambient_ptr() == b.ambient_ptr() || a.ambient() == b.ambient();
}

void require_same_ambient(const Word& a, const Word& b) {
  if (!same_ambient(a, b)) throw std::invalid_argument("ambient mismatch");
}

void require_positive(const Word& w) {
  if (!w.is_positive()) {
    throw std::invalid_argument("monoid operation given a word with inverse letters: " + w.to_string());
  }
}

}  // namespace graphgroups
