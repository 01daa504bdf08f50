#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aont/field.hpp"
#include "aont/matrix.hpp"

namespace aont {

enum class SearchMode {
  /// Type-q standard form, row 2 increasing in columns 3..q.
  reduced,
  /// Type-(q-1) standard form: bottom-right entry nonzero, row 2 increasing
  /// in columns 3..q-1.
  type_q_minus_1,
  /// Reduced and equal to its transpose.
  symmetric_reduced,
  /// Any s, t: every standard form (t = 2) or scaling-normalized border
  /// (other t).
  general_linear,
};

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultNodeCeiling = 10'000'000'000ULL;
/// Searches keep their state in 16-bit masks.
inline constexpr unsigned kMaxSearchOrder = 16;

struct SearchSpec {
  FieldPtr field;
  SearchMode mode = SearchMode::reduced;
  /// Dimension and strength; forced to s = q, t = 2 except for general_linear.
  int s = 0;
  int t = 2;
  /// Caps the number of stored matrices; count still reports every hit.
  std::optional<std::uint64_t> limit;
  /// Canonical element order; natural when absent.
  std::optional<ElementOrder> order;
  /// general_linear refuses to start above this estimated node count.
  std::uint64_t node_ceiling = kDefaultNodeCeiling;
};

struct SearchResult {
  std::vector<Matrix> matrices;
  std::uint64_t count = 0;
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Thrown when a search would exceed its feasibility guard.
class SearchGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Periodic progress from a running search. Called from worker threads.
struct SearchProgress {
  int shard = 0;
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
};
using ProgressFn = std::function<void(const SearchProgress&)>;

/// A replayable starting point of the search tree: a template index and the
/// values of its first slots.
struct SearchPrefix {
  int template_index = 0;
  std::vector<std::uint8_t> values;
};

/// One independent subtree set of a partitioned search.
struct SearchShard {
  SearchSpec spec;
  int index = 0;
  int count = 1;
  std::vector<SearchPrefix> prefixes;
};

/// Validates and fills in mode-dependent defaults (s, t, order).
SearchSpec normalize(SearchSpec spec);

/// Number of nodes of the unpruned enumeration tree (saturating).
std::uint64_t naive_tree_nodes(const SearchSpec& spec);
/// Number of leaves of the unpruned enumeration (saturating); this is the
/// estimate checked against node_ceiling.
std::uint64_t estimate_nodes(const SearchSpec& spec);

SearchResult run_search(const SearchSpec& spec, const ProgressFn& progress = {});

SearchResult search_reduced(const FieldPtr& field);
SearchResult search_reduced(const FieldPtr& field, const ElementOrder& order);
SearchResult search_type_q_minus_1(const FieldPtr& field);
SearchResult search_symmetric_reduced(const FieldPtr& field);
/// Throws SearchGuardError when the estimate exceeds node_ceiling.
SearchResult search_linear(const FieldPtr& field, int s, int t, std::uint64_t node_ceiling = kDefaultNodeCeiling);

/// Splits the tree at the row-2 choices (descending further until there are
/// enough subtrees) and deals the subtrees round-robin over the shards.
std::vector<SearchShard> partition_search(const SearchSpec& spec, int shards);
SearchResult run_shard(const SearchShard& shard, const ProgressFn& progress = {});
/// Multiset union of shard results, re-sorted under the spec's element order
/// and truncated to its limit.
SearchResult merge_results(std::vector<SearchResult> parts, const SearchSpec& spec);

/// Partitions into `shards` subtrees and runs them on `jobs` worker threads.
SearchResult run_search_parallel(const SearchSpec& spec, int shards, int jobs, const ProgressFn& progress = {});

}  // namespace aont
