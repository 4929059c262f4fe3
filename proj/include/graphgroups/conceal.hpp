#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphgroups/commgraph.hpp"
#include "graphgroups/graph.hpp"
#include "graphgroups/raag.hpp"
#include "graphgroups/word.hpp"

namespace graphgroups {

// A graph Omega with one more vertex than Gamma, such that G(Gamma) embeds in
// G(Omega) through tau although Gamma is not an induced subgraph of Omega.
// The chosen vertex e is split into e0 and e1, which share e's neighbours;
// e0 additionally sees f and e1 sees g, and tau(e) = e0 e1 e0 e1.

struct Eligibility {
  bool eligible = false;
  /// Why the graph is or is not eligible, one line per fact.
  std::vector<std::string> diagnostics;
};

/// Some vertex has degree <= n-3, and the graph does not have both a vertex
/// of degree n-2 and one of degree n-3.
Eligibility eligible(const Graph& g);

struct ConcealmentResult {
  GraphPtr gamma;
  GraphPtr omega;
  std::string e, f, g;
  std::string e0, e1;
  /// Image of each vertex of gamma, as a positive word over omega.
  std::map<std::string, Word> tau;
};

/// Throws std::invalid_argument (with the diagnostics) for ineligible input.
ConcealmentResult build_concealment(const Graph& gamma);

/// tau extended to signed words: e' maps to e1' e0' e1' e0'.
Word apply_tau(const ConcealmentResult& r, const Word& w);

/// True iff gamma is not an induced subgraph of omega.
bool verify_no_embedding(const ConcealmentResult& r);

struct TauReport {
  std::size_t bound = 0;
  std::size_t ball_size = 0;
  /// Edges (a, b) of gamma whose images fail to commute in G(omega).
  std::vector<std::pair<std::string, std::string>> relation_failures;
  /// Distinct elements of the ball with equal images.
  std::vector<std::pair<GroupElement, GroupElement>> collisions;

  bool ok() const { return relation_failures.empty() && collisions.empty(); }
};

/// Checks that tau respects the defining relations and is injective on the
/// ball of radius max_len in G(gamma).
TauReport verify_tau_injective(const ConcealmentResult& r, std::size_t max_len);

/// Vertices of gamma other than e, plus e0 e1 e0 e1 standing in for e,
/// labelled by the gamma vertex they replace.
ElementFamily monoid_phi_witness(const ConcealmentResult& r, Mode mode = Mode::monoid);

/// Omega in graph text format followed by "tau <vertex> = <word>" lines.
std::string format_concealment(const ConcealmentResult& r);

}  // namespace graphgroups
