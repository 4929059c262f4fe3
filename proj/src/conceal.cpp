#include "graphgroups/conceal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphgroups {

Eligibility eligible(const Graph& g) {
  Eligibility out;
  const auto n = static_cast<long long>(g.size());
  std::vector<std::string> low, minus_two, minus_three;
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto d = static_cast<long long>(g.degree(v));
    if (d <= n - 3) low.push_back(g.name(v));
    if (d == n - 2) minus_two.push_back(g.name(v));
    if (d == n - 3) minus_three.push_back(g.name(v));
  }
  auto join = [](const std::vector<std::string>& names) {
    std::string s;
    for (const auto& x : names) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  const bool has_low = !low.empty();
  const bool blocked = !minus_two.empty() && !minus_three.empty();
  if (has_low) {
    out.diagnostics.push_back("vertices of degree <= |V|-3: " + join(low));
  } else {
    out.diagnostics.push_back("no vertex has degree <= |V|-3");
  }
  if (blocked) {
    out.diagnostics.push_back("has both degree |V|-2 (" + join(minus_two) + ") and degree |V|-3 (" +
                              join(minus_three) + ")");
  }
  out.eligible = has_low && !blocked;
  return out;
}

ConcealmentResult build_concealment(const Graph& gamma) {
  const Eligibility el = eligible(gamma);
  if (!el.eligible) {
    std::string msg = "graph is not eligible for concealment";
    for (const auto& d : el.diagnostics) msg += "; " + d;
    throw std::invalid_argument(msg);
  }
  const std::size_t n = gamma.size();

  // e: maximal degree among degree <= n-3, least name on ties (ids follow names).
  VertexId e = 0;
  bool have = false;
  for (VertexId v = 0; v < n; ++v) {
    if (gamma.degree(v) + 3 > n) continue;
    if (!have || gamma.degree(v) > gamma.degree(e)) {
      e = v;
      have = true;
    }
  }
  std::vector<VertexId> missing;
  for (VertexId v = 0; v < n && missing.size() < 2; ++v)
    if (!gamma.adjacent(e, v)) missing.push_back(v);
  const VertexId f = missing.at(0);
  const VertexId g = missing.at(1);

  auto fresh = [&](std::string name) {
    while (gamma.find(name)) name += "_";
    return name;
  };
  const std::string e_name = gamma.name(e);
  std::string e0 = fresh(e_name + "_0");
  std::string e1 = fresh(e_name + "_1");
  while (e1 == e0) e1 += "_";

  std::vector<std::string> names;
  for (VertexId v = 0; v < n; ++v)
    if (v != e) names.push_back(gamma.name(v));
  names.push_back(e0);
  names.push_back(e1);

  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : gamma.edges()) {
    if (a == e || b == e) {
      const std::string& other = gamma.name(a == e ? b : a);
      edges.emplace_back(e0, other);
      edges.emplace_back(e1, other);
    } else {
      edges.emplace_back(gamma.name(a), gamma.name(b));
    }
  }
  edges.emplace_back(e0, gamma.name(f));
  edges.emplace_back(e1, gamma.name(g));

  ConcealmentResult r;
  r.gamma = share(gamma);
  r.omega = share(Graph(std::move(names), edges));
  r.e = e_name;
  r.f = gamma.name(f);
  r.g = gamma.name(g);
  r.e0 = e0;
  r.e1 = e1;
  for (VertexId v = 0; v < n; ++v) {
    if (v == e) {
      r.tau.emplace(e_name, Word::of(r.omega, {e0, e1, e0, e1}));
    } else {
      r.tau.emplace(gamma.name(v), Word::of(r.omega, {gamma.name(v)}));
    }
  }
  return r;
}

Word apply_tau(const ConcealmentResult& r, const Word& w) {
  if (w.ambient_ptr() != r.gamma && !(w.ambient() == *r.gamma)) throw std::invalid_argument("ambient mismatch");
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    const Word& image = r.tau.at(r.gamma->name(l.vertex));
    const Word piece = l.inverted ? image.inverse() : image;
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(r.omega, std::move(out));
}

bool verify_no_embedding(const ConcealmentResult& r) { return !find_embedding(*r.gamma, *r.omega).has_value(); }

TauReport verify_tau_injective(const ConcealmentResult& r, std::size_t max_len) {
  TauReport report;
  report.bound = max_len;
  for (const auto& [a, b] : r.gamma->named_edges()) {
    const GroupElement ta = group_reduce(r.tau.at(a));
    const GroupElement tb = group_reduce(r.tau.at(b));
    if (!group_commute(ta, tb)) report.relation_failures.emplace_back(a, b);
  }

  const auto ball = group_ball(r.gamma, max_len);
  report.ball_size = ball.size();
  // Pairwise distinct images <=> no image seen twice.
  std::map<std::vector<Letter>, std::size_t> seen;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GroupElement image = group_reduce(apply_tau(r, ball[i].word()));
    auto [it, inserted] = seen.emplace(image.word().letter_vector(), i);
    if (!inserted) report.collisions.emplace_back(ball[it->second], ball[i]);
  }
  return report;
}

ElementFamily monoid_phi_witness(const ConcealmentResult& r, Mode mode) {
  std::vector<Word> members;
  std::vector<std::string> labels;
  for (const auto& v : r.gamma->vertices()) {
    labels.push_back(v);
    members.push_back(r.tau.at(v));
  }
  return ElementFamily(r.omega, mode, std::move(members), std::move(labels));
}

std::string format_concealment(const ConcealmentResult& r) {
  std::ostringstream out;
  out << format_graph(*r.omega);
  for (const auto& v : r.gamma->vertices()) out << "tau " << v << " = " << r.tau.at(v).to_string() << "\n";
  return out.str();
}

}  // namespace graphgroups
