#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphgroups/graph.hpp"
#include "graphgroups/word.hpp"

namespace graphgroups {

enum class Mode { monoid, group };

const char* to_string(Mode m);
/// "monoid" or "group"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view s);

/// Canonical form of w in the given mode: trace normal form for monoids,
/// canonical reduced word for groups.
Word canonical(const Word& w, Mode mode);

/// Commutation in the given mode (trace_commute or group_commute).
bool commute(const Word& u, const Word& v, Mode mode);

/// An indexed family of elements. Members are stored canonically; repeats are
/// allowed. Labels name the vertices of the commutation graph and default to
/// "1".."n".
class ElementFamily {
 public:
  ElementFamily(GraphPtr ambient, Mode mode, std::vector<Word> members,
                std::vector<std::string> labels = {});

  const Graph& ambient() const { return *ambient_; }
  Mode mode() const { return mode_; }
  const std::vector<Word>& members() const { return members_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  GraphPtr ambient_;
  Mode mode_;
  std::vector<Word> members_;
  std::vector<std::string> labels_;
};

/// Graph on the family labels with i ~ j iff members i and j commute.
Graph commutation_graph(const ElementFamily& f);

/// All distinct canonical elements of length <= max_len, ordered by length
/// then canonical word. Includes the identity.
std::vector<Word> candidate_pool(const GraphPtr& ambient, Mode mode, std::size_t max_len);

enum class SearchStatus { found, exhausted };

struct PhiSearchOptions {
  /// Require pairwise distinct elements (a subset rather than a function).
  bool strict = false;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;
};

/// Outcome of a bounded search for an assignment target vertex -> element
/// with u ~ v in the target iff the elements commute. `exhausted` is a
/// certificate only for elements of canonical length <= bound.
struct RealizationReport {
  Graph target;
  Mode mode = Mode::group;
  SearchStatus status = SearchStatus::exhausted;
  std::map<std::string, Word> witness;
  std::size_t bound = 0;
  bool strict = false;
  std::size_t candidates = 0;
  std::size_t nodes = 0;
};

RealizationReport phi_search(const Graph& target, const Graph& ambient, Mode mode, std::size_t max_len,
                             const PhiSearchOptions& options = {});

/// Line-oriented record:
///   status=<found|exhausted> bound=<N> mode=<m> strict=<0|1>
///   candidates=<n> nodes=<n>
///   witness <vertex>=<word>      (one per target vertex, found only)
std::string format_report(const RealizationReport& r);

}  // namespace graphgroups
