#pragma once

#include <string>
#include <vector>

#include "mpoly/ratfunc.hpp"

namespace mpoly {

// Mechanized core of the odd-order nonexistence argument. Writing the odd
// order as n = 2k+1 forces center 2k+2 and common sum 6k+6, so the diagonal
// pairs sum to 4k+4 and the extreme pair is (1, 4k+3). Around the diagonal
// that carries this pair sit six unknown rim values a, b, d, e, f, g tied by
// five line equations. Whichever end of the diagonal takes which pair value,
// exact row reduction shows every solution needs e = g, which a labeling
// with distinct values cannot satisfy.
enum class SystemCase {
  VertexHoldsMin,  // the vertex end takes 1, the midpoint end 4k+3
  VertexHoldsMax,  // the vertex end takes 4k+3, the midpoint end 1
};

const char* to_string(SystemCase which);

using RfMatrix = std::vector<std::vector<RationalFunction>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct LinearSystem {
  SystemCase case_kind = SystemCase::VertexHoldsMin;
  std::vector<std::string> variables;  // a, b, d, e, f, g
  RfMatrix rows;                       // 5 x 7 augmented
};

// The five-equation system for the given pair placement.
LinearSystem build_system(SystemCase which);

struct RrefResult {
  RfMatrix matrix;
  std::vector<int> pivot_columns;
  // Pivot divisors of positive degree; their roots are the k values the
  // reduction does not cover. Empty for the systems built here.
  std::vector<Polynomial> pole_divisors;
};

// Reduced row echelon form over the rational-function field. The pivot of
// each row is the first column holding a nonzero entry. Exact; empty input
// comes back empty.
RrefResult rref(RfMatrix matrix);

struct RatRrefResult {
  RatMatrix matrix;
  std::vector<int> pivot_columns;
};

// Plain-rational Gauss-Jordan used by the numeric sweep. Deliberately a
// separate code path from the symbolic rref so each can vouch for the other.
RatRrefResult rref_rational(RatMatrix matrix);

struct CaseReport {
  SystemCase case_kind = SystemCase::VertexHoldsMin;
  bool consistent = false;        // no row reads 0 = nonzero
  bool forces_e_equals_g = false; // some row reads exactly e - g = 0
  std::vector<std::vector<std::string>> rref_rows;  // display form
  std::vector<std::string> pole_divisors;
};

struct SweepReport {
  std::int64_t max_k = 0;
  std::int64_t checked = 0;
  // k values where the numeric reduction disagreed with the symbolic one
  // evaluated at that k, or failed to force e = g. Expected empty.
  std::vector<std::int64_t> disagreements;
};

struct ProofReport {
  CaseReport vertex_min;
  CaseReport vertex_max;
  // Both placements force two distinct nodes to share a value, which the
  // permutation requirement rules out; with both cases closed the pair
  // (1, 4k+3) cannot sit on any diagonal, so no odd-order labeling works.
  bool distinctness_contradicted = false;
  SweepReport sweep;
  bool ok = false;
};

// Symbolic check of both cases plus a numeric re-reduction for
// k = 1..sweep_max (0 skips the sweep). Inconsistencies never throw; they
// surface as ok == false so callers can flag them loudly.
ProofReport check_odd_contradiction(std::int64_t sweep_max = 10000);

}  // namespace mpoly
