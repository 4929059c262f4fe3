#include "graphgroups/raag.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "graphgroups/trace.hpp"

namespace graphgroups {

namespace {

struct Tagged {
  Letter letter;
  bool from_right = false;
  std::size_t origin = 0;
};

struct Cancellation {
  Tagged stacked;
  Tagged incoming;
};

// Appends `incoming`, or cancels it against an inverse that can be brought to
// the end of the stack past letters commuting with it.
void push_reducing(const Graph& g, std::vector<Tagged>& stack, const Tagged& incoming,
                   std::vector<Cancellation>* cancellations) {
  for (std::size_t j = stack.size(); j-- > 0;) {
    const Letter s = stack[j].letter;
    if (s == incoming.letter.inverse()) {
      if (cancellations) cancellations->push_back({stack[j], incoming});
      stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
    if (!letters_commute(g, s, incoming.letter)) break;
  }
  stack.push_back(incoming);
}

std::vector<Letter> reduce_letters(const Graph& g, std::span<const Letter> letters) {
  std::vector<Tagged> stack;
  for (auto l : letters) push_reducing(g, stack, {l}, nullptr);
  std::vector<Letter> out;
  out.reserve(stack.size());
  for (const auto& t : stack) out.push_back(t.letter);
  return out;
}

std::vector<Letter> subsequence_in(std::span<const Letter> letters, VertexMask keep) {
  std::vector<Letter> out;
  for (auto l : letters)
    if (keep & bit(l.vertex)) out.push_back(l);
  return out;
}

// Positions that can be moved to the front (resp. back) by commutations.
std::vector<bool> movable_to_front(const Graph& g, std::span<const Letter> w) {
  std::vector<bool> out(w.size(), false);
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = letters_commute(g, w[j], w[i]);
    out[i] = ok;
  }
  return out;
}

std::vector<bool> movable_to_back(const Graph& g, std::span<const Letter> w) {
  std::vector<bool> out(w.size(), false);
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = i + 1; j < w.size() && ok; ++j) ok = letters_commute(g, w[j], w[i]);
    out[i] = ok;
  }
  return out;
}

}  // namespace

GroupElement from_reduced(GraphPtr ambient, std::vector<Letter> reduced) {
  auto canonical = lex_normal_form(*ambient, reduced);
  return GroupElement(Word(std::move(ambient), std::move(canonical)));
}

GroupElement group_reduce(const Word& w) {
  return from_reduced(w.ambient_ptr(), reduce_letters(w.ambient(), w.letters()));
}

GroupElement GroupElement::identity(GraphPtr ambient) { return GroupElement(Word(std::move(ambient))); }

GroupElement GroupElement::parse(GraphPtr ambient, std::string_view text) {
  return group_reduce(Word::parse(std::move(ambient), text));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return group_reduce(word_ * other.word_);
}

GroupElement GroupElement::inverse() const { return from_reduced(ambient_ptr(), word_.inverse().letter_vector()); }

GroupElement GroupElement::power(long long n) const {
  const GroupElement base = n < 0 ? inverse() : *this;
  const auto times = static_cast<std::size_t>(n < 0 ? -n : n);
  return group_reduce(base.word_.power(times));
}

bool group_equal(const Word& u, const Word& v) {
  require_same_ambient(u, v);
  return group_reduce(u) == group_reduce(v);
}

std::vector<std::string> support_names(const GroupElement& g) {
  std::vector<std::string> out;
  for (VertexMask m = g.support(); m; m &= m - 1)
    out.push_back(g.ambient().name(static_cast<VertexId>(std::countr_zero(m))));
  return out;
}

bool commutes_totally(const GroupElement& u, const GroupElement& v) {
  require_same_ambient(u.word(), v.word());
  const Graph& g = u.ambient();
  const VertexMask sv = v.support();
  for (VertexMask m = u.support(); m; m &= m - 1) {
    const auto a = static_cast<VertexId>(std::countr_zero(m));
    if ((sv & ~(g.neighbours(a) | bit(a))) != 0) return false;
  }
  return true;
}

bool group_commute(const GroupElement& u, const GroupElement& v) {
  require_same_ambient(u.word(), v.word());
  return u * v == v * u;
}

GroupElement retract(const GroupElement& g, VertexMask keep) {
  return group_reduce(Word(g.ambient_ptr(), subsequence_in(g.letters(), keep)));
}

ReducedFactorization multiply_factorize(const GroupElement& u, const GroupElement& v) {
  require_same_ambient(u.word(), v.word());
  const Graph& g = u.ambient();
  std::vector<Tagged> stack;
  for (std::size_t i = 0; i < u.length(); ++i) stack.push_back({u.letters()[i], false, i});
  std::vector<Cancellation> cancelled;
  for (std::size_t i = 0; i < v.length(); ++i) push_reducing(g, stack, {v.letters()[i], true, i}, &cancelled);

  std::vector<bool> u_gone(u.length(), false);
  std::vector<bool> v_gone(v.length(), false);
  for (const auto& c : cancelled) {
    // Both inputs are reduced, so a letter of v can only meet a letter of u.
    if (c.stacked.from_right) throw std::logic_error("multiply_factorize: cancellation inside v");
    u_gone[c.stacked.origin] = true;
    v_gone[c.incoming.origin] = true;
  }
  std::vector<Letter> left, middle, right;
  for (std::size_t i = 0; i < u.length(); ++i) (u_gone[i] ? middle : left).push_back(u.letters()[i]);
  for (std::size_t i = 0; i < v.length(); ++i)
    if (!v_gone[i]) right.push_back(v.letters()[i]);
  return {from_reduced(u.ambient_ptr(), std::move(left)), from_reduced(u.ambient_ptr(), std::move(middle)),
          from_reduced(u.ambient_ptr(), std::move(right))};
}

CyclicDecomposition cyclic_reduce(const GroupElement& g) {
  const Graph& graph = g.ambient();
  std::vector<Letter> core(g.letters().begin(), g.letters().end());
  std::vector<Letter> conjugator;
  while (core.size() >= 2) {
    const auto front = movable_to_front(graph, core);
    const auto back = movable_to_back(graph, core);
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (!front[i]) continue;
      for (std::size_t j = 0; j < core.size(); ++j) {
        if (j == i || !back[j] || core[j] != core[i].inverse()) continue;
        if (!best || core[i] < core[best->first]) best = std::pair{i, j};
      }
    }
    if (!best) break;
    conjugator.push_back(core[best->first]);
    const auto [i, j] = *best;
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
    core.erase(core.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
  }
  return {from_reduced(g.ambient_ptr(), std::move(conjugator)), from_reduced(g.ambient_ptr(), std::move(core))};
}

bool is_cyclically_reduced(const GroupElement& g) { return cyclic_reduce(g).conjugator.is_identity(); }

PureFactorization pure_factors(const GroupElement& h) {
  if (!is_cyclically_reduced(h)) {
    throw std::invalid_argument("pure factors need a cyclically reduced element, got " + h.to_string());
  }
  PureFactorization out;
  for (VertexMask block : co_components(h.ambient(), h.support())) {
    const auto piece = subsequence_in(h.letters(), block);
    auto [root, exponent] = signed_primitive_root(h.ambient(), piece);
    out.factors.push_back({from_reduced(h.ambient_ptr(), std::move(root)), exponent});
  }
  return out;
}

GroupElement expand(const PureFactorization& f, const GraphPtr& ambient) {
  GroupElement out = GroupElement::identity(ambient);
  for (const auto& factor : f.factors) out = out * factor.base.power(static_cast<long long>(factor.exponent));
  return out;
}

const char* to_string(CentralizerStatus s) {
  switch (s) {
    case CentralizerStatus::found:
      return "found";
    case CentralizerStatus::no_witness_within_bound:
      return "no-witness-within-bound";
    case CentralizerStatus::proved_non_commuting:
      return "proved-non-commuting";
  }
  return "?";
}

GroupElement rebuild(const CentralizerWitness& w, const PureFactorization& f) {
  GroupElement k1 = GroupElement::identity(w.conjugator.ambient_ptr());
  for (std::size_t i = 0; i < f.factors.size(); ++i) k1 = k1 * f.factors[i].base.power(w.exponents.at(i));
  return w.conjugator * k1 * w.remainder * w.conjugator.inverse();
}

CentralizerResult centralizer_witness(const GroupElement& g, const GroupElement& k) {
  require_same_ambient(g.word(), k.word());
  CentralizerResult result;
  result.decomposition = cyclic_reduce(g);
  const GroupElement& p = result.decomposition.conjugator;
  const GroupElement& h = result.decomposition.core;
  result.factors = pure_factors(h);
  result.exponent_bound = k.length() + h.length();
  if (!group_commute(g, k)) {
    result.status = CentralizerStatus::proved_non_commuting;
    return result;
  }

  const auto& factors = result.factors.factors;
  const GroupElement conjugated = p.inverse() * k * p;
  const auto bound = static_cast<long long>(result.exponent_bound);

  auto attempt = [&](const std::vector<long long>& exponents) -> bool {
    GroupElement k1 = GroupElement::identity(g.ambient_ptr());
    for (std::size_t i = 0; i < factors.size(); ++i) k1 = k1 * factors[i].base.power(exponents[i]);
    GroupElement k2 = k1.inverse() * conjugated;
    if (!commutes_totally(k2, h)) return false;
    result.witness = CentralizerWitness{p, exponents, std::move(k2)};
    result.status = CentralizerStatus::found;
    return true;
  };

  // First guess: read each exponent off the retraction onto that factor's
  // co-component. This leaves no letter of supp(h) in k2 when it succeeds.
  std::vector<long long> guess(factors.size(), 0);
  bool guessable = true;
  for (std::size_t i = 0; i < factors.size() && guessable; ++i) {
    const GroupElement& base = factors[i].base;
    const GroupElement image = retract(conjugated, base.support());
    if (image.is_identity()) continue;
    if (image.length() % base.length() != 0) {
      guessable = false;
      continue;
    }
    const auto m = static_cast<long long>(image.length() / base.length());
    if (base.power(m) == image) {
      guess[i] = m;
    } else if (base.power(-m) == image) {
      guess[i] = -m;
    } else {
      guessable = false;
    }
    if (guessable && (guess[i] > bound || guess[i] < -bound)) guessable = false;
  }
  if (guessable && attempt(guess)) return result;

  // Exhaustive fallback over the exponent box, nearest to zero first.
  std::vector<long long> exponents(factors.size(), 0);
  for (long long radius = 0; radius <= bound; ++radius) {
    std::function<bool(std::size_t, bool)> sweep = [&](std::size_t i, bool on_shell) -> bool {
      if (i == factors.size()) return on_shell && attempt(exponents);
      for (long long e = -radius; e <= radius; ++e) {
        exponents[i] = e;
        if (sweep(i + 1, on_shell || e == radius || e == -radius)) return true;
      }
      return false;
    };
    if (sweep(0, radius == 0)) return result;
  }
  result.status = CentralizerStatus::no_witness_within_bound;
  return result;
}

std::vector<GroupElement> group_ball(const GraphPtr& ambient, std::size_t radius) {
  std::vector<GroupElement> out{GroupElement::identity(ambient)};
  std::set<std::vector<Letter>> seen{{}};
  std::vector<GroupElement> layer = out;
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<GroupElement> next;
    for (const auto& e : layer) {
      for (VertexId v = 0; v < ambient->size(); ++v) {
        for (bool inv : {false, true}) {
          std::vector<Letter> letters = e.word().letter_vector();
          letters.push_back({v, inv});
          auto reduced = reduce_letters(*ambient, letters);
          if (reduced.size() != r + 1) continue;
          GroupElement x = from_reduced(ambient, std::move(reduced));
          if (seen.insert(x.word().letter_vector()).second) next.push_back(std::move(x));
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const GroupElement& a, const GroupElement& b) {
      return a.word().letter_vector() < b.word().letter_vector();
    });
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace graphgroups
