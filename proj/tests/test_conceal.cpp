#include <doctest.h>

#include "fixtures.hpp"
#include "graphgroups/conceal.hpp"
#include "graphgroups/trace.hpp"

using namespace graphgroups;

namespace {

std::vector<Graph> eligible_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& g : isomorphism_classes(n))
      if (eligible(g).eligible) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("eligibility") {
  CHECK(eligible(disjoint_edges_graph(3, 0)).eligible);
  CHECK_FALSE(eligible(three_edge_line()).eligible);
  CHECK_FALSE(eligible(complete_graph(3)).eligible);
  CHECK_FALSE(eligible(Graph()).eligible);
  CHECK_FALSE(eligible(three_edge_line()).diagnostics.empty());

  // definition applied by hand to every small graph
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labelled_graphs(n)) {
      bool low = false, has_n2 = false, has_n3 = false;
      for (VertexId v = 0; v < n; ++v) {
        const auto d = static_cast<long>(g.degree(v));
        low |= d <= static_cast<long>(n) - 3;
        has_n2 |= d == static_cast<long>(n) - 2;
        has_n3 |= d == static_cast<long>(n) - 3;
      }
      REQUIRE(eligible(g).eligible == (low && !(has_n2 && has_n3)));
    }
  }
}

TEST_CASE("construction on three isolated vertices") {
  const Graph gamma({"e", "f", "g"}, {});
  const auto r = build_concealment(gamma);
  CHECK(r.e == "e");
  CHECK(r.f == "f");
  CHECK(r.g == "g");
  CHECK(r.omega->vertices() == std::vector<std::string>{r.e0, r.e1, "f", "g"});
  CHECK(r.omega->edge_count() == 2);
  CHECK(r.omega->adjacent(r.e0, "f"));
  CHECK(r.omega->adjacent(r.e1, "g"));
  CHECK(isomorphic(*r.omega, disjoint_edges_graph(0, 2)));

  CHECK(r.tau.at("e").to_string() == r.e0 + " " + r.e1 + " " + r.e0 + " " + r.e1);
  CHECK(r.tau.at("f").to_string() == "f");
  CHECK(verify_no_embedding(r));

  const auto report = verify_tau_injective(r, 3);
  CHECK(report.ok());
  CHECK(report.ball_size == group_ball(r.gamma, 3).size());

  const auto family = monoid_phi_witness(r);
  CHECK(family.labels() == std::vector<std::string>{"e", "f", "g"});
  const Graph cg = commutation_graph(family);
  CHECK(cg.edge_count() == 0);
  CHECK(cg == gamma);
  CHECK_FALSE(trace_commute(family.members()[0], family.members()[1]));

  CHECK_THROWS_AS(build_concealment(three_edge_line()), std::invalid_argument);
}

TEST_CASE("name collisions for the split vertex") {
  const Graph gamma({"e", "e_0", "f"}, {});
  const auto r = build_concealment(gamma);
  CHECK(r.e == "e");
  CHECK(r.e0 != "e_0");
  CHECK_FALSE(gamma.find(r.e0));
  CHECK_FALSE(gamma.find(r.e1));
  CHECK(r.omega->size() == 4);
}

TEST_CASE("structure of omega for every small eligible graph") {
  for (const Graph& gamma : eligible_graphs(6)) {
    const auto r = build_concealment(gamma);
    const VertexId e = gamma.index(r.e);
    const std::size_t deg_e = gamma.degree(e);
    REQUIRE(r.omega->size() == gamma.size() + 1);
    REQUIRE(r.omega->edge_count() == gamma.edge_count() + deg_e + 2);
    REQUIRE(r.omega->degree(r.omega->index(r.e0)) == deg_e + 1);
    REQUIRE(r.omega->degree(r.omega->index(r.e1)) == deg_e + 1);
    REQUIRE_FALSE(gamma.adjacent(r.e, r.f));
    REQUIRE_FALSE(gamma.adjacent(r.e, r.g));
    REQUIRE(gamma.degree(e) + 3 <= gamma.size());

    REQUIRE(verify_no_embedding(r));

    // the part of gamma away from e survives unchanged
    std::vector<std::string> rest;
    for (const auto& v : gamma.vertices())
      if (v != r.e) rest.push_back(v);
    REQUIRE(find_embedding(induced(gamma, rest), *r.omega));

    REQUIRE(isomorphic(commutation_graph(monoid_phi_witness(r)), gamma));
  }
}

TEST_CASE("tau is a morphism") {
  for (const Graph& gamma : eligible_graphs(5)) {
    const auto r = build_concealment(gamma);
    REQUIRE(verify_tau_injective(r, 1).relation_failures.empty());
    const Word te = Word::parse(r.gamma, r.e);
    REQUIRE(group_reduce(apply_tau(r, te * te.inverse())).is_identity());
    REQUIRE(group_reduce(apply_tau(r, te.inverse())) == group_reduce(apply_tau(r, te)).inverse());
  }
}

TEST_CASE("concealment text") {
  const auto r = build_concealment(Graph({"e", "f", "g"}, {}));
  const std::string text = format_concealment(r);
  CHECK(text.find("tau e = " + r.tau.at("e").to_string()) != std::string::npos);
  const auto graph_part = text.substr(0, text.find("tau "));
  CHECK(parse_graph(graph_part) == *r.omega);
}
