// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "graphgroups/commgraph.hpp"
#include "graphgroups/conceal.hpp"
#include "graphgroups/raag.hpp"
#include "graphgroups/trace.hpp"

using namespace graphgroups;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Named {
  std::string name;
  GraphPtr graph;
};

std::vector<Graph> classes_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& g : isomorphism_classes(k)) out.push_back(std::move(g));
  return out;
}

Named named(const char* name) { return {name, share(standard_graph(name))}; }

// 1. Projection equality decides equality in the monoid.
Outcome projection_equality() {
  std::size_t pairs = 0, mismatches = 0, bad_normal_forms = 0;
  for (const auto& [name, g] : {named("C4"), named("L3"), named("E(0,2)"), named("complete(3)")}) {
    const auto all = fixtures::words(g, 5);
    std::vector<std::vector<Letter>> keys;
    keys.reserve(all.size());
    for (const auto& w : all) {
      keys.push_back(trace_normal_form(w).letter_vector());
      if (keys.back() != oracle::swap_class_min(*g, w.letter_vector())) ++bad_normal_forms;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        ++pairs;
        if (trace_equal(all[i], all[j]) != (keys[i] == keys[j])) ++mismatches;
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << mismatches << " mismatches, " << bad_normal_forms << " normal forms off the swap-class oracle";
  return {mismatches == 0 && bad_normal_forms == 0, d.str()};
}

// 2. Pairwise root test decides commutation.
Outcome commutation_criterion() {
  std::size_t pairs = 0, mismatches = 0;
  for (const auto& [name, g] : {named("C4"), named("L3")}) {
    const auto all = fixtures::words(g, 4);
    for (const auto& u : all) {
      for (const auto& v : all) {
        ++pairs;
        if (trace_commute(u, v) != trace_equal(u * v, v * u)) ++mismatches;
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

// 3. Commuting pairs: distinct ones differ in a letter count, and a letter of
// u missing from v commutes with all of v.
Outcome commuting_pairs() {
  std::size_t commuting = 0, count_violations = 0, letter_violations = 0;
  for (const auto& [name, g] : {named("C4"), named("L3")}) {
    const auto all = fixtures::words(g, 4);
    for (const auto& u : all) {
      for (const auto& v : all) {
        if (!trace_equal(u * v, v * u)) continue;
        ++commuting;
        if (!trace_equal(u, v)) {
          bool differs = false;
          for (VertexId x = 0; x < g->size(); ++x) differs |= project_rho(u, x) != project_rho(v, x);
          if (!differs) ++count_violations;
        }
        for (VertexId x = 0; x < g->size(); ++x) {
          if (!(u.content() & bit(x)) || (v.content() & bit(x))) continue;
          for (VertexId y = 0; y < g->size(); ++y)
            if ((v.content() & bit(y)) && !g->adjacent(x, y)) ++letter_violations;
        }
      }
    }
  }
  std::ostringstream d;
  d << commuting << " commuting pairs, " << count_violations << " + " << letter_violations << " violations";
  return {count_violations == 0 && letter_violations == 0, d.str()};
}

// 4. Reduction length equals the geodesic length found by rewriting search.
Outcome group_word_problem() {
  std::size_t words = 0, length_mismatches = 0, word_mismatches = 0;
  for (const auto& [name, g] : {named("L3"), named("C4")}) {
    for (const auto& w : fixtures::words(g, 4, true)) {
      ++words;
      const auto reduced = group_reduce(w);
      const auto key = oracle::geodesic_bfs(*g, w.letter_vector());
      if (reduced.length() != key.length) ++length_mismatches;
      if (reduced.word().letter_vector() != key.least) ++word_mismatches;
    }
  }
  std::ostringstream d;
  d << words << " words, " << length_mismatches << " length mismatches, " << word_mismatches << " canonical mismatches";
  return {length_mismatches == 0 && word_mismatches == 0, d.str()};
}

// 5. Centralizer witnesses exist exactly for commuting pairs.
Outcome centralizer_witnesses() {
  std::size_t pairs = 0, disagreements = 0, unbounded = 0, bad_witnesses = 0;
  for (const auto& [name, g] : {named("C4"), named("L3")}) {
    const auto ball = group_ball(g, 3);
    for (const auto& a : ball) {
      for (const auto& k : ball) {
        ++pairs;
        const auto r = centralizer_witness(a, k);
        if (r.status == CentralizerStatus::no_witness_within_bound) ++unbounded;
        if ((r.status == CentralizerStatus::found) != group_commute(a, k)) ++disagreements;
        if (r.witness) {
          const bool rebuilt = rebuild(*r.witness, r.factors) == k;
          const bool total = commutes_totally(r.witness->remainder, r.decomposition.core);
          const bool conj = r.decomposition.conjugator * r.decomposition.core * r.decomposition.conjugator.inverse() == a;
          if (!rebuilt || !total || !conj) ++bad_witnesses;
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << disagreements << " disagreements, " << unbounded << " bound exhaustions, " << bad_witnesses
    << " bad witnesses";
  return {disagreements == 0 && unbounded == 0 && bad_witnesses == 0, d.str()};
}

// 6. The square is realised in a small graph group only by graphs containing it.
Outcome square_in_groups(std::size_t jobs) {
  const Graph c4 = four_cycle();
  std::size_t graphs = 0, with_square = 0, wrong = 0;
  for (const Graph& g : classes_up_to(4)) {
    ++graphs;
    const bool contains = oracle::embeds_brute_force(c4, g);
    if (contains != find_embedding(c4, g).has_value()) ++wrong;
    if (contains) {
      ++with_square;
      if (phi_search(c4, g, Mode::group, 1, {.strict = false, .jobs = jobs}).status != SearchStatus::found) ++wrong;
    } else if (phi_search(c4, g, Mode::group, 2, {.strict = false, .jobs = jobs}).status != SearchStatus::exhausted) {
      ++wrong;
    }
  }
  std::ostringstream d;
  d << graphs << " graphs, " << with_square << " with an induced square, " << wrong << " wrong verdicts";
  return {wrong == 0 && with_square == 1, d.str()};
}

// 7. Monoid realisation of the complement of E(0,2) (the square) matches
// induced embedding.
Outcome square_in_monoids(std::size_t jobs) {
  const Graph target = complement(disjoint_edges_graph(0, 2));
  std::size_t graphs = 0, found = 0, wrong = 0;
  for (const Graph& g : classes_up_to(4)) {
    ++graphs;
    const auto r = phi_search(target, g, Mode::monoid, 2, {.strict = false, .jobs = jobs});
    const bool realised = r.status == SearchStatus::found;
    found += realised;
    if (realised != find_embedding(target, g).has_value()) ++wrong;
  }
  std::ostringstream d;
  d << graphs << " graphs, " << found << " realised, " << wrong << " disagreements";
  return {wrong == 0, d.str()};
}

// 8. Largest free commutative rank is the clique number.
Outcome commutative_rank() {
  std::size_t graphs = 0, wrong = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      ++graphs;
      if (max_free_commutative_rank(g) != oracle::clique_brute_force(g)) ++wrong;
    }
  }
  std::ostringstream d;
  d << graphs << " labelled graphs, " << wrong << " mismatches";
  return {wrong == 0, d.str()};
}

// 9. Every small eligible graph is concealed.
Outcome concealment() {
  std::size_t eligible_graphs = 0, failures = 0, ball = 0;
  for (const Graph& g : classes_up_to(6)) {
    if (!eligible(g).eligible) continue;
    ++eligible_graphs;
    try {
      const auto r = build_concealment(g);
      const bool hidden = verify_no_embedding(r);
      const bool phi = isomorphic(commutation_graph(monoid_phi_witness(r)), g);
      const auto tau = verify_tau_injective(r, 3);
      ball += tau.ball_size;
      if (!hidden || !phi || !tau.ok()) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << eligible_graphs << " eligible graphs, " << ball << " ball elements checked, " << failures << " failures";
  return {failures == 0 && eligible_graphs > 0, d.str()};
}

// Free reduction over an alphabet where nothing commutes.
std::vector<Letter> free_reduce(const std::vector<Letter>& w) {
  std::vector<Letter> stack;
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

// 10. A non-trivial group element invisible to every small projection.
Outcome group_projection_gap() {
  const auto g = fixtures::e11();
  const Word w = Word::parse(g, "x y x' z x y' x' z'");
  const bool nontrivial = !group_equal(w, Word(g));
  std::size_t projections = 0, nontrivial_projections = 0;
  for (VertexId a = 0; a < g->size(); ++a) {
    for (VertexId b = a; b < g->size(); ++b) {
      if (a != b && g->adjacent(a, b)) continue;
      std::vector<Letter> kept;
      for (const Letter& l : w.letters())
        if (l.vertex == a || l.vertex == b) kept.push_back(l);
      ++projections;
      if (!free_reduce(kept).empty()) ++nontrivial_projections;
    }
  }
  std::ostringstream d;
  d << "word " << (nontrivial ? "is not" : "is") << " the identity; " << projections << " projections, "
    << nontrivial_projections << " non-trivial";
  return {nontrivial && projections == 5 && nontrivial_projections == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::size_t jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 projection equality", projection_equality},
      {"AC2 commutation criterion", commutation_criterion},
      {"AC3 commuting pair lemmas", commuting_pairs},
      {"AC4 group word problem", group_word_problem},
      {"AC5 centralizer witnesses", centralizer_witnesses},
      {"AC6 square in graph groups", [jobs] { return square_in_groups(jobs); }},
      {"AC7 square in graph monoids", [jobs] { return square_in_monoids(jobs); }},
      {"AC8 free commutative rank", commutative_rank},
      {"AC9 concealment", concealment},
      {"AC10 projections miss a group element", group_projection_gap},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
