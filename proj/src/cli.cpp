#include "graphgroups/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <ostream>
#include <sstream>

#include "graphgroups/commgraph.hpp"
#include "graphgroups/conceal.hpp"
#include "graphgroups/graph.hpp"
#include "graphgroups/raag.hpp"
#include "graphgroups/trace.hpp"

namespace graphgroups::cli {

namespace {

/// "std:NAME" selects a built-in graph, anything else is a file path.
Graph load_graph(const std::string& arg) {
  if (arg.rfind("std:", 0) == 0) return standard_graph(arg.substr(4));
  return read_graph_file(arg);
}

std::string names_of(const Graph& g, VertexMask m) {
  std::string s;
  for (; m; m &= m - 1) {
    if (!s.empty()) s += ' ';
    s += g.name(static_cast<VertexId>(std::countr_zero(m)));
  }
  return s;
}

int answer(std::ostream& out, bool yes) {
  out << (yes ? "true" : "false") << "\n";
  return yes ? kExitYes : kExitNo;
}

struct Options {
  std::string graph;
  std::string left, right;
  std::string pattern, host;
  std::string target, ambient;
  std::string mode = "group";
  std::size_t max_len = 1;
  std::size_t jobs = 1;
  bool strict = false;
  std::string format = "text";
  std::vector<std::string> words;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool records() const { return o_.format == "records"; }

  GraphPtr graph() { return share(load_graph(o_.graph)); }

  const std::string& word_arg(std::size_t i) const {
    if (i >= o_.words.size()) throw std::invalid_argument("expected " + std::to_string(i + 1) + " word argument(s)");
    return o_.words[i];
  }

  void need_words(std::size_t n) const {
    if (o_.words.size() != n) {
      throw std::invalid_argument("expected " + std::to_string(n) + " word argument(s), got " +
                                  std::to_string(o_.words.size()));
    }
  }

  // -- graph ---------------------------------------------------------------

  int graph_info() {
    const Graph g = load_graph(o_.graph);
    out_ << "vertices=" << g.size() << "\n";
    out_ << "edges=" << g.edge_count() << "\n";
    for (VertexId v = 0; v < g.size(); ++v) out_ << "degree " << g.name(v) << "=" << g.degree(v) << "\n";
    for (VertexMask block : co_components(g, g.all_vertices())) out_ << "co-component " << names_of(g, block) << "\n";
    out_ << "clique-number=" << clique_number(g) << "\n";
    out_ << "concealment-eligible=" << (eligible(g).eligible ? "true" : "false") << "\n";
    return kExitYes;
  }

  int graph_complement() {
    out_ << format_graph(complement(load_graph(o_.graph)));
    return kExitYes;
  }

  int graph_product() {
    const auto p = connected_product(load_graph(o_.left), load_graph(o_.right));
    out_ << format_graph(p.graph);
    for (const auto& [from, to] : p.renamed) out_ << "# renamed " << from << " -> " << to << "\n";
    return kExitYes;
  }

  int graph_embed() {
    const auto m = find_embedding(load_graph(o_.pattern), load_graph(o_.host));
    if (!m) {
      out_ << "none\n";
      return kExitNo;
    }
    for (const auto& [p, h] : *m) out_ << (records() ? "map " + p + "=" + h : p + " -> " + h) << "\n";
    return kExitYes;
  }

  // -- word (group words) ----------------------------------------------------

  int word_reduce() {
    need_words(1);
    const auto g = graph();
    out_ << group_reduce(Word::parse(g, word_arg(0))).to_string() << "\n";
    return kExitYes;
  }

  int word_equal() {
    need_words(2);
    const auto g = graph();
    return answer(out_, group_equal(Word::parse(g, word_arg(0)), Word::parse(g, word_arg(1))));
  }

  int word_commute() {
    need_words(2);
    const auto g = graph();
    return answer(out_, group_commute(GroupElement::parse(g, word_arg(0)), GroupElement::parse(g, word_arg(1))));
  }

  int word_normal_form() {
    need_words(1);
    const auto g = graph();
    const Word w = Word::parse(g, word_arg(0));
    out_ << format_letters(*g, lex_normal_form(*g, w.letters())) << "\n";
    return kExitYes;
  }

  // -- group -----------------------------------------------------------------

  int group_cyclic_reduce() {
    need_words(1);
    const auto g = graph();
    const auto d = cyclic_reduce(GroupElement::parse(g, word_arg(0)));
    out_ << "p=" << d.conjugator.to_string() << "\n";
    out_ << "h=" << d.core.to_string() << "\n";
    return kExitYes;
  }

  int group_pure_factors() {
    need_words(1);
    const auto g = graph();
    const auto f = pure_factors(GroupElement::parse(g, word_arg(0)));
    for (const auto& factor : f.factors) out_ << "factor " << factor.base.to_string() << " ^" << factor.exponent << "\n";
    return kExitYes;
  }

  int group_centralizer() {
    need_words(2);
    const auto g = graph();
    const auto r = centralizer_witness(GroupElement::parse(g, word_arg(0)), GroupElement::parse(g, word_arg(1)));
    out_ << "status=" << to_string(r.status) << " bound=" << r.exponent_bound << "\n";
    out_ << "p=" << r.decomposition.conjugator.to_string() << "\n";
    out_ << "h=" << r.decomposition.core.to_string() << "\n";
    for (std::size_t i = 0; i < r.factors.factors.size(); ++i) {
      out_ << "factor " << r.factors.factors[i].base.to_string();
      if (r.witness) out_ << " exponent=" << r.witness->exponents[i];
      out_ << "\n";
    }
    if (r.witness) out_ << "k2=" << r.witness->remainder.to_string() << "\n";
    return r.status == CentralizerStatus::found ? kExitYes : kExitNo;
  }

  // -- monoid ----------------------------------------------------------------

  int monoid_equal() {
    need_words(2);
    const auto g = graph();
    return answer(out_, trace_equal(Word::parse(g, word_arg(0)), Word::parse(g, word_arg(1))));
  }

  int monoid_commute() {
    need_words(2);
    const auto g = graph();
    const Word u = Word::parse(g, word_arg(0));
    const Word v = Word::parse(g, word_arg(1));
    const auto obstruction = commutation_obstruction(u, v);
    if (obstruction) out_ << "# projections onto {" << g->name(obstruction->first) << "," << g->name(obstruction->second)
                          << "} have no common root\n";
    return answer(out_, !obstruction);
  }

  int monoid_root() {
    need_words(1);
    const auto g = graph();
    const auto r = primitive_root(Word::parse(g, word_arg(0)));
    out_ << "root=" << r.root.to_string() << "\n";
    out_ << "exponent=" << r.exponent << "\n";
    return kExitYes;
  }

  int monoid_product_embed() {
    const auto g = graph();
    const auto table = embed_into_product(g);
    out_ << "rank-one=" << table.rank_one_count() << "\n";
    out_ << "rank-two=" << table.rank_two_count() << "\n";
    for (const auto& c : table.coordinates()) {
      if (c.kind == ProductCoordinate::Kind::rank_one) {
        out_ << "coordinate rho " << g->name(c.x) << "\n";
      } else {
        out_ << "coordinate sigma " << g->name(c.x) << " " << g->name(c.y) << "\n";
      }
    }
    for (const auto& text : o_.words) {
      const auto values = table.evaluate(Word::parse(g, text));
      out_ << "image " << Word::parse(g, text).to_string() << " =";
      for (const auto& v : values) {
        std::vector<Letter> letters;
        for (auto x : v) letters.push_back({x, false});
        out_ << " [" << (letters.empty() ? std::string("1") : format_letters(*g, letters)) << "]";
      }
      out_ << "\n";
    }
    return kExitYes;
  }

  int monoid_comm_rank() {
    out_ << max_free_commutative_rank(load_graph(o_.graph)) << "\n";
    return kExitYes;
  }

  // -- search / conceal --------------------------------------------------------

  int search_phi() {
    if (o_.max_len < 1) throw std::invalid_argument("--max-len must be at least 1");
    const auto report = phi_search(load_graph(o_.target), load_graph(o_.ambient), parse_mode(o_.mode), o_.max_len,
                                   {o_.strict, o_.jobs});
    out_ << format_report(report);
    return report.status == SearchStatus::found ? kExitYes : kExitNo;
  }

  int conceal_check() {
    const auto el = eligible(load_graph(o_.graph));
    out_ << "eligible=" << (el.eligible ? "true" : "false") << "\n";
    for (const auto& d : el.diagnostics) out_ << "# " << d << "\n";
    return el.eligible ? kExitYes : kExitNo;
  }

  int conceal_build() {
    out_ << format_concealment(build_concealment(load_graph(o_.graph)));
    return kExitYes;
  }

  int conceal_verify() {
    if (o_.max_len < 1) throw std::invalid_argument("--max-len must be at least 1");
    const auto r = build_concealment(load_graph(o_.graph));
    const bool no_embedding = verify_no_embedding(r);
    const Graph realized = commutation_graph(monoid_phi_witness(r));
    const bool phi = realized == *r.gamma;
    const auto tau = verify_tau_injective(r, o_.max_len);
    out_ << "no-embedding=" << (no_embedding ? "true" : "false") << "\n";
    out_ << "phi-witness=" << (phi ? "true" : "false") << "\n";
    out_ << "tau-relations=" << (tau.relation_failures.empty() ? "true" : "false") << "\n";
    out_ << "tau-injective=" << (tau.collisions.empty() ? "true" : "false") << " bound=" << tau.bound
         << " ball=" << tau.ball_size << "\n";
    for (const auto& [a, b] : tau.relation_failures) out_ << "relation-failure " << a << " " << b << "\n";
    for (const auto& [a, b] : tau.collisions) out_ << "collision " << a.to_string() << " | " << b.to_string() << "\n";
    return no_embedding && phi && tau.ok() ? kExitYes : kExitNo;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph monoid and graph group toolkit", "graphgroups"};
  app.require_subcommand(1);
  Options o;

  auto format_opt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  };
  auto graph_opt = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "Graph file, or std:NAME for a built-in graph")->required();
  };
  auto words_opt = [&](CLI::App* c, const char* help) { c->add_option("words", o.words, help); };

  std::vector<std::pair<CLI::App*, std::function<int(Session&)>>> handlers;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int(Session&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    format_opt(c);
    handlers.emplace_back(c, std::move(fn));
    return c;
  };

  CLI::App* graph = app.add_subcommand("graph", "Graph constructions")->require_subcommand(1);
  graph_opt(verb(graph, "info", "Degrees, co-components, clique number", &Session::graph_info));
  graph_opt(verb(graph, "complement", "Complement graph", &Session::graph_complement));
  {
    auto* c = verb(graph, "product", "Connected product", &Session::graph_product);
    c->add_option("--left", o.left)->required();
    c->add_option("--right", o.right)->required();
  }
  {
    auto* c = verb(graph, "embed", "Induced-subgraph embedding", &Session::graph_embed);
    c->add_option("--pattern", o.pattern)->required();
    c->add_option("--host", o.host)->required();
  }

  CLI::App* word = app.add_subcommand("word", "Words in the graph group")->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<int(Session&)>>>{
           {"reduce", "Canonical reduced word", &Session::word_reduce},
           {"equal", "Equality in the group", &Session::word_equal},
           {"commute", "Commutation in the group", &Session::word_commute},
           {"normal-form", "Least word under commutations only", &Session::word_normal_form}}) {
    auto* c = verb(word, name, help, fn);
    graph_opt(c);
    words_opt(c, "Words, e.g. \"a b a'\"");
  }

  CLI::App* group = app.add_subcommand("group", "Conjugacy and centralizers")->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<int(Session&)>>>{
           {"cyclic-reduce", "g = p h p^-1", &Session::group_cyclic_reduce},
           {"pure-factors", "Pure factors of a cyclically reduced element", &Session::group_pure_factors},
           {"centralizer", "Centralizer witness for k against g", &Session::group_centralizer}}) {
    auto* c = verb(group, name, help, fn);
    graph_opt(c);
    words_opt(c, "Elements");
  }

  CLI::App* monoid = app.add_subcommand("monoid", "Words in the graph monoid")->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<int(Session&)>>>{
           {"equal", "Equality via projections", &Session::monoid_equal},
           {"commute", "Commutation via pair projections", &Session::monoid_commute},
           {"root", "Primitive root and exponent", &Session::monoid_root},
           {"product-embed", "Embedding into free monoids of rank 1 and 2", &Session::monoid_product_embed},
           {"comm-rank", "Largest free commutative submonoid rank", &Session::monoid_comm_rank}}) {
    auto* c = verb(monoid, name, help, fn);
    graph_opt(c);
    words_opt(c, "Positive words");
  }

  CLI::App* search = app.add_subcommand("search", "Bounded realizability searches")->require_subcommand(1);
  {
    auto* c = verb(search, "phi", "Search for elements with the target's commutation graph", &Session::search_phi);
    c->add_option("--target", o.target)->required();
    c->add_option("--ambient", o.ambient)->required();
    c->add_option("--mode", o.mode)->check(CLI::IsMember({"monoid", "group"}));
    c->add_option("--max-len", o.max_len)->required()->check(CLI::PositiveNumber);
    c->add_flag("--strict", o.strict, "Require pairwise distinct elements");
    c->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  }

  CLI::App* conceal = app.add_subcommand("conceal", "Concealment construction")->require_subcommand(1);
  graph_opt(verb(conceal, "check", "Eligibility", &Session::conceal_check));
  graph_opt(verb(conceal, "build", "Build Omega and tau", &Session::conceal_build));
  {
    auto* c = verb(conceal, "verify", "Verify the construction on bounded balls", &Session::conceal_verify);
    graph_opt(c);
    c->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  Session session(o, out);
  try {
    for (auto& [cmd, fn] : handlers)
      if (cmd->parsed()) return fn(session);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "error: no command given\n";
  return kExitError;
}

}  // namespace graphgroups::cli
