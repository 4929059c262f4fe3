#include "graphgroups/commgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "graphgroups/raag.hpp"
#include "graphgroups/trace.hpp"

namespace graphgroups {

namespace {

using Bits = std::vector<std::uint64_t>;

struct CommutationTable {
  std::size_t size = 0;
  std::size_t blocks = 0;
  std::vector<Bits> commutes;
};

CommutationTable tabulate(const std::vector<Word>& pool, Mode mode) {
  CommutationTable t;
  t.size = pool.size();
  t.blocks = (pool.size() + 63) / 64;
  t.commutes.assign(pool.size(), Bits(t.blocks, 0));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (i == j || commute(pool[i], pool[j], mode)) {
        t.commutes[i][j / 64] |= std::uint64_t{1} << (j % 64);
        t.commutes[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return t;
}

class Backtracker {
 public:
  Backtracker(const Graph& target, const CommutationTable& table, bool strict,
              const std::atomic<std::size_t>& best_first)
      : target_(target), table_(table), strict_(strict), best_first_(best_first) {}

  /// Searches assignments whose first vertex gets candidate `first`.
  bool run(std::size_t first, std::vector<std::size_t>& assignment) {
    first_ = first;
    assignment.assign(target_.size(), 0);
    assignment[0] = first;
    ++nodes_;
    return extend(1, assignment);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  bool extend(std::size_t depth, std::vector<std::size_t>& assignment) {
    if (depth == target_.size()) return true;
    if (best_first_.load(std::memory_order_relaxed) < first_) return false;
    Bits allowed(table_.blocks, ~std::uint64_t{0});
    if (table_.size % 64) allowed.back() = (std::uint64_t{1} << (table_.size % 64)) - 1;
    for (std::size_t j = 0; j < depth; ++j) {
      const Bits& row = table_.commutes[assignment[j]];
      const bool edge = target_.adjacent(static_cast<VertexId>(depth), static_cast<VertexId>(j));
      for (std::size_t b = 0; b < table_.blocks; ++b) allowed[b] &= edge ? row[b] : ~row[b];
      if (strict_) allowed[assignment[j] / 64] &= ~(std::uint64_t{1} << (assignment[j] % 64));
    }
    for (std::size_t b = 0; b < table_.blocks; ++b) {
      for (std::uint64_t m = allowed[b]; m; m &= m - 1) {
        assignment[depth] = b * 64 + static_cast<std::size_t>(std::countr_zero(m));
        ++nodes_;
        if (extend(depth + 1, assignment)) return true;
      }
    }
    return false;
  }

  const Graph& target_;
  const CommutationTable& table_;
  bool strict_;
  const std::atomic<std::size_t>& best_first_;
  std::size_t first_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

const char* to_string(Mode m) { return m == Mode::monoid ? "monoid" : "group"; }

Mode parse_mode(std::string_view s) {
  if (s == "monoid") return Mode::monoid;
  if (s == "group") return Mode::group;
  throw std::invalid_argument("mode must be 'monoid' or 'group', got '" + std::string(s) + "'");
}

Word canonical(const Word& w, Mode mode) {
  return mode == Mode::monoid ? trace_normal_form(w) : group_reduce(w).word();
}

bool commute(const Word& u, const Word& v, Mode mode) {
  if (mode == Mode::monoid) return trace_commute(u, v);
  return group_commute(group_reduce(u), group_reduce(v));
}

ElementFamily::ElementFamily(GraphPtr ambient, Mode mode, std::vector<Word> members,
                             std::vector<std::string> labels)
    : ambient_(std::move(ambient)), mode_(mode), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 1; i <= members.size(); ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != members.size()) throw std::invalid_argument("one label per family member required");
  for (auto& m : members) {
    if (m.ambient_ptr() != ambient_ && !(m.ambient() == *ambient_)) {
      throw std::invalid_argument("family member over a different ambient graph");
    }
    if (mode_ == Mode::monoid) require_positive(m);
    members_.push_back(canonical(Word(ambient_, m.letter_vector()), mode_));
  }
}

Graph commutation_graph(const ElementFamily& f) {
  std::vector<std::pair<std::string, std::string>> edges;
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (commute(m[i], m[j], f.mode())) edges.emplace_back(f.labels()[i], f.labels()[j]);
  return Graph(f.labels(), edges);
}

std::vector<Word> candidate_pool(const GraphPtr& ambient, Mode mode, std::size_t max_len) {
  std::vector<Word> out;
  if (mode == Mode::group) {
    for (auto& e : group_ball(ambient, max_len)) out.push_back(e.word());
    return out;
  }
  std::vector<Word> layer{Word(ambient)};
  out = layer;
  for (std::size_t r = 0; r < max_len; ++r) {
    std::set<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (VertexId v = 0; v < ambient->size(); ++v) {
        std::vector<Letter> letters = w.letter_vector();
        letters.push_back({v, false});
        next.insert(lex_normal_form(*ambient, letters));
      }
    }
    layer.clear();
    for (const auto& letters : next) layer.emplace_back(ambient, letters);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

RealizationReport phi_search(const Graph& target, const Graph& ambient, Mode mode, std::size_t max_len,
                             const PhiSearchOptions& options) {
  RealizationReport report;
  report.target = target;
  report.mode = mode;
  report.bound = max_len;
  report.strict = options.strict;

  const GraphPtr shared = share(ambient);
  const std::vector<Word> pool = candidate_pool(shared, mode, max_len);
  report.candidates = pool.size();
  if (target.empty()) {
    report.status = SearchStatus::found;
    return report;
  }
  const CommutationTable table = tabulate(pool, mode);

  std::atomic<std::size_t> next_first{0};
  std::atomic<std::size_t> best_first{pool.size()};
  std::vector<std::size_t> nodes_per_first(pool.size(), 0);
  std::vector<std::size_t> best_assignment;
  std::mutex best_mutex;

  auto worker = [&] {
    std::vector<std::size_t> assignment;
    while (true) {
      const std::size_t first = next_first.fetch_add(1);
      if (first >= pool.size() || first > best_first.load()) return;
      Backtracker bt(target, table, options.strict, best_first);
      const bool hit = bt.run(first, assignment);
      nodes_per_first[first] = bt.nodes();
      if (hit) {
        std::lock_guard lock(best_mutex);
        if (first < best_first.load()) {
          best_first.store(first);
          best_assignment = assignment;
        }
        return;
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  const std::size_t last = std::min(best_first.load(), pool.size() - 1);
  for (std::size_t i = 0; i <= last; ++i) report.nodes += nodes_per_first[i];

  if (best_first.load() == pool.size()) {
    report.status = SearchStatus::exhausted;
    return report;
  }

  for (VertexId v = 0; v < target.size(); ++v) {
    for (VertexId u = 0; u < v; ++u) {
      const bool c = commute(pool[best_assignment[v]], pool[best_assignment[u]], mode);
      if (c != target.adjacent(u, v)) throw std::logic_error("phi_search produced an invalid witness");
    }
  }
  report.status = SearchStatus::found;
  for (VertexId v = 0; v < target.size(); ++v) report.witness.emplace(target.name(v), pool[best_assignment[v]]);
  return report;
}

std::string format_report(const RealizationReport& r) {
  std::ostringstream out;
  out << "status=" << (r.status == SearchStatus::found ? "found" : "exhausted") << " bound=" << r.bound
      << " mode=" << to_string(r.mode) << " strict=" << (r.strict ? 1 : 0) << "\n";
  out << "candidates=" << r.candidates << " nodes=" << r.nodes << "\n";
  if (r.status == SearchStatus::found) {
    for (const auto& v : r.target.vertices()) out << "witness " << v << "=" << r.witness.at(v).to_string() << "\n";
  }
  return out.str();
}

}  // namespace graphgroups
