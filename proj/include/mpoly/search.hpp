#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpoly/core.hpp"

namespace mpoly {

// Exhaustive mode enumerates every labeling whose 2n line sums agree, taking
// nothing for granted beyond the definition: the common sum is pinned by the
// first line the search completes, and the center ranges over all values.
// Pruned mode fixes the center to n+1 and the target sum to 3n+3 up front,
// forcing the second node of every diagonal pair; its correctness therefore
// rests on those two facts and is cross-checked against Exhaustive mode for
// small n.
enum class SearchMode { Exhaustive, Pruned };

struct SearchConfig {
  SearchMode mode = SearchMode::Pruned;
  bool up_to_symmetry = false;  // emit one representative per symmetry class
  std::optional<std::int64_t> solution_limit;  // truncates emission only
  bool emit_solutions = false;
  int worker_count = 1;

  // Runtime caps; configuration, not hard limits.
  int exhaustive_cap = 6;
  int pruned_odd_cap = 7;
  int pruned_even_cap = 8;
};

struct EnumerationResult {
  int n = 0;
  SearchMode mode = SearchMode::Pruned;
  bool up_to_symmetry = false;
  std::int64_t total_count = 0;    // complete magic labelings
  std::int64_t class_count = 0;    // orbits under the dihedral group
  std::int64_t nodes_explored = 0;
  // Distinct canonical forms, sorted; filled when emit_solutions is set,
  // truncated to solution_limit if one is given. When up_to_symmetry is
  // false every solution is still listed through its canonical form.
  std::vector<Labeling> solutions;
  std::chrono::duration<double> wall_time{};
};

// Counts every complete magic labeling of the n-gon. Deterministic: counts,
// exploration totals and solution lists are identical for any worker_count.
// Throws std::invalid_argument for n < 3, bad config, or a request over the
// configured cap (the message suggests Pruned mode where that helps).
EnumerationResult enumerate(int n, const SearchConfig& config);

struct NonexistenceReport {
  int n = 0;
  SearchMode mode = SearchMode::Pruned;
  std::int64_t total_count = 0;
  std::int64_t nodes_explored = 0;
  bool confirmed = false;  // total_count == 0; anything else is a red flag
};

// Runs the search for an odd n expecting zero solutions. A nonzero count
// does not throw; it comes back with confirmed == false so the caller can
// treat it as the fatal inconsistency it would be.
NonexistenceReport verify_nonexistence(int n,
                                       const SearchConfig& config = {});

const char* to_string(SearchMode mode);

}  // namespace mpoly
