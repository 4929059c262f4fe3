#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "graphgroups/trace.hpp"

using namespace graphgroups;
using fixtures::w;

namespace {

oracle::Letters class_key(const Word& x) {
  return oracle::swap_class_min(x.ambient(), x.letter_vector());
}

}  // namespace

TEST_CASE("rank-one and pair projections") {
  const auto c4 = fixtures::square();
  CHECK(project_rho(w(c4, "a b a b"), "a") == 2);
  CHECK(project_rho(w(c4, ""), "a") == 0);
  CHECK(project_rho(w(c4, "b c d"), "a") == 0);

  CHECK(project_sigma(w(c4, "a b c a"), "a", "c") == w(c4, "a c a"));
  CHECK(project_sigma(w(c4, "b d"), "a", "c").empty());
  CHECK_THROWS_AS(project_sigma(w(c4, "a c"), "a", "b"), std::invalid_argument);
  CHECK_THROWS_AS(project_sigma(w(c4, "a c"), "a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(project_rho(w(c4, "a'"), "a"), std::invalid_argument);
}

TEST_CASE("monoid equality and normal form examples") {
  const auto c4 = fixtures::square();
  CHECK(trace_equal(w(c4, "a b"), w(c4, "b a")));
  CHECK_FALSE(trace_equal(w(c4, "a c"), w(c4, "c a")));
  CHECK(trace_normal_form(w(c4, "b a")) == w(c4, "a b"));
  CHECK(trace_normal_form(w(c4, "c a")) == w(c4, "c a"));
  CHECK(trace_normal_form(w(c4, "")).empty());

  CHECK_THROWS_AS(trace_equal(w(c4, "a'"), w(c4, "a")), std::invalid_argument);
  CHECK_THROWS_AS(trace_equal(w(c4, "a"), w(fixtures::line(), "w")), std::invalid_argument);

  // Four of the sixteen length-two words pair up across the square's edges.
  std::set<std::vector<Letter>> classes;
  for (const auto& x : fixtures::words(c4, 2))
    if (x.size() == 2) classes.insert(trace_normal_form(x).letter_vector());
  CHECK(classes.size() == 12);
}

TEST_CASE("normal form is the least word of the swap class") {
  for (const auto& g : {fixtures::square(), fixtures::line(), fixtures::e11()}) {
    for (const auto& x : fixtures::words(g, 5)) {
      const Word nf = trace_normal_form(x);
      REQUIRE(nf.letter_vector() == class_key(x));
      REQUIRE(trace_equal(nf, x));
    }
  }
}

TEST_CASE("trace_equal matches swap classes") {
  const auto l3 = fixtures::line();
  const auto all = fixtures::words(l3, 4);
  std::vector<oracle::Letters> keys;
  for (const auto& x : all) keys.push_back(class_key(x));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) REQUIRE(trace_equal(all[i], all[j]) == (keys[i] == keys[j]));
}

TEST_CASE("commutation examples") {
  const auto c4 = fixtures::square();
  CHECK(trace_commute(w(c4, "a"), w(c4, "b")));
  CHECK(trace_commute(w(c4, "a c a c"), w(c4, "a c")));
  CHECK_FALSE(trace_commute(w(c4, "a c"), w(c4, "c a")));
  CHECK(trace_commute(w(c4, ""), w(c4, "a c")));

  const auto obstruction = commutation_obstruction(w(c4, "a c"), w(c4, "c a"));
  REQUIRE(obstruction);
  CHECK(c4->name(obstruction->first) == "a");
  CHECK(c4->name(obstruction->second) == "c");
  CHECK_FALSE(commutation_obstruction(w(c4, "a"), w(c4, "b")));
}

TEST_CASE("trace_commute agrees with comparing uv and vu by swaps") {
  for (const auto& g : {fixtures::square(), fixtures::line()}) {
    const auto all = fixtures::words(g, 3);
    for (const auto& u : all)
      for (const auto& v : all) REQUIRE(trace_commute(u, v) == (class_key(u * v) == class_key(v * u)));
  }
}

TEST_CASE("primitive roots") {
  const auto c4 = fixtures::square();
  auto r = primitive_root(w(c4, "a b a b"));
  CHECK(r.root == w(c4, "a b"));
  CHECK(r.exponent == 2);

  r = primitive_root(w(c4, "a"));
  CHECK(r.root == w(c4, "a"));
  CHECK(r.exponent == 1);

  r = primitive_root(w(c4, "a c a c a c"));
  CHECK(r.root == w(c4, "a c"));
  CHECK(r.exponent == 3);

  CHECK_THROWS_AS(primitive_root(w(c4, "")), std::invalid_argument);

  for (const auto& g : {fixtures::square(), fixtures::line()}) {
    for (const auto& x : fixtures::words(g, 5)) {
      if (x.empty()) continue;
      const auto got = primitive_root(x);
      const auto [root, k] = oracle::primitive_root_brute_force(*g, x.letter_vector(), oracle::positive_alphabet(*g));
      REQUIRE(got.exponent == k);
      REQUIRE(trace_equal(got.root, Word(g, root)));
      REQUIRE(got.root == trace_normal_form(got.root));
      REQUIRE(trace_equal(got.root.power(got.exponent), x));
    }
  }
}

TEST_CASE("signed primitive root treats opposite signs as distinct letters") {
  const auto c4 = fixtures::square();
  const Word x = w(c4, "a c' a c'");
  const auto [root, k] = signed_primitive_root(*c4, x.letters());
  CHECK(k == 2);
  CHECK(format_letters(*c4, root) == "a c'");
  CHECK(signed_primitive_root(*c4, w(c4, "a a'").letters()).second == 1);
  CHECK(free_primitive_period(std::vector<VertexId>{0, 1, 0, 1, 0, 1}) == 2);
  CHECK(free_primitive_period(std::vector<VertexId>{0, 1, 0}) == 3);
}

TEST_CASE("maximal free commutative rank") {
  CHECK(max_free_commutative_rank(four_cycle()) == 2);
  CHECK(max_free_commutative_rank(complete_graph(4)) == 4);
  CHECK(max_free_commutative_rank(disjoint_edges_graph(3, 0)) == 1);
}

TEST_CASE("embedding into a product of free monoids") {
  const auto l3 = fixtures::line();
  const auto table = embed_into_product(l3);
  CHECK(table.rank_one_count() == 4);
  CHECK(table.rank_two_count() == 3);
  CHECK(table.target_graph().size() == 10);
  CHECK(isomorphic(complement(table.target_graph()), disjoint_edges_graph(4, 3)));

  const auto k3 = embed_into_product(share(complete_graph(3)));
  CHECK(k3.rank_one_count() == 3);
  CHECK(k3.rank_two_count() == 0);

  const auto all = fixtures::words(l3, 4);
  std::map<std::vector<std::vector<VertexId>>, oracle::Letters> seen;
  for (const auto& x : all) {
    const auto image = table.evaluate(x);
    auto [it, fresh] = seen.emplace(image, class_key(x));
    REQUIRE((fresh || it->second == class_key(x)));
  }
  // number of images equals number of monoid elements of length <= 4
  std::set<oracle::Letters> classes;
  for (const auto& x : all) classes.insert(class_key(x));
  CHECK(seen.size() == classes.size());

  // coordinatewise a morphism
  const auto small = fixtures::words(l3, 2);
  for (const auto& u : small) {
    for (const auto& v : small) {
      const auto iu = table.evaluate(u), iv = table.evaluate(v), iuv = table.evaluate(u * v);
      for (std::size_t c = 0; c < iuv.size(); ++c) {
        auto joined = iu[c];
        joined.insert(joined.end(), iv[c].begin(), iv[c].end());
        REQUIRE(joined == iuv[c]);
      }
    }
  }
}

TEST_CASE("distinct commuting elements differ in some letter count") {
  for (const auto& g : {fixtures::square(), fixtures::line()}) {
    const auto all = fixtures::words(g, 3);
    for (const auto& u : all) {
      for (const auto& v : all) {
        if (!trace_commute(u, v)) continue;
        bool counts_differ = false;
        for (VertexId x = 0; x < g->size(); ++x) counts_differ |= project_rho(u, x) != project_rho(v, x);
        if (!trace_equal(u, v)) REQUIRE(counts_differ);
        for (VertexId x = 0; x < g->size(); ++x) {
          if (!(u.content() & bit(x)) || (v.content() & bit(x))) continue;
          for (VertexId y = 0; y < g->size(); ++y)
            if (v.content() & bit(y)) REQUIRE(g->adjacent(x, y));
        }
      }
    }
  }
}
