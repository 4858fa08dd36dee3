#include "mpoly/proofcheck.hpp"

#include <algorithm>
#include <utility>

namespace mpoly {

namespace {

constexpr int kVarCount = 6;   // a, b, d, e, f, g
constexpr int kColE = 3;
constexpr int kColG = 5;

// Rows encode d+e, f+g, a+b, b+e, a+f against their constants. The two
// cases swap which pair of constants the diagonal neighbours take.
RfMatrix system_rows(const Polynomial& diagonal_sum,
                     const Polynomial& vertex_pair_sum,
                     const Polynomial& cross_sum) {
  const RationalFunction zero(0), one(1);
  auto row = [&](int c1, int c2, const Polynomial& rhs) {
    std::vector<RationalFunction> r(kVarCount + 1, zero);
    r[static_cast<std::size_t>(c1)] = one;
    r[static_cast<std::size_t>(c2)] = one;
    r[kVarCount] = RationalFunction(rhs);
    return r;
  };
  return {
      row(2, 3, diagonal_sum),     // d + e
      row(4, 5, diagonal_sum),     // f + g
      row(0, 1, vertex_pair_sum),  // a + b
      row(1, 3, cross_sum),        // b + e
      row(0, 4, cross_sum),        // a + f
  };
}

}  // namespace

const char* to_string(SystemCase which) {
  return which == SystemCase::VertexHoldsMin ? "vertex-holds-min"
                                             : "vertex-holds-max";
}

LinearSystem build_system(SystemCase which) {
  LinearSystem system;
  system.case_kind = which;
  system.variables = {"a", "b", "d", "e", "f", "g"};

  // d,e and f,g sit on the two sides through the vertex end; a,b flank the
  // midpoint end's side; the diagonals through the e and f midpoints land on
  // b and a. Each constant is the common sum 6k+6 minus the occupied node.
  const Polynomial high = Polynomial::linear(5, 6);   // 6k+5, minus 1
  const Polynomial low = Polynomial::linear(3, 2);    // 2k+3, minus 4k+3
  const Polynomial cross = Polynomial::linear(4, 4);  // 4k+4, minus center
  if (which == SystemCase::VertexHoldsMin) {
    system.rows = system_rows(high, low, cross);
  } else {
    system.rows = system_rows(low, high, cross);
  }
  return system;
}

RrefResult rref(RfMatrix matrix) {
  RrefResult result;
  if (matrix.empty()) return result;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!matrix[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(matrix[pivot_row], matrix[found]);

    const RationalFunction pivot = matrix[pivot_row][col];
    if (pivot.numerator().degree() > 0) {
      result.pole_divisors.push_back(pivot.numerator());
    }
    for (std::size_t c = col; c < cols; ++c) {
      matrix[pivot_row][c] /= pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || matrix[r][col].is_zero()) continue;
      const RationalFunction factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        matrix[r][c] -= factor * matrix[pivot_row][c];
      }
    }
    result.pivot_columns.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  result.matrix = std::move(matrix);
  return result;
}

RatRrefResult rref_rational(RatMatrix matrix) {
  RatRrefResult result;
  if (matrix.empty()) return result;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (!matrix[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    std::swap(matrix[pivot_row], matrix[found]);

    const Rational pivot = matrix[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) {
      matrix[pivot_row][c] /= pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || matrix[r][col].is_zero()) continue;
      const Rational factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        matrix[r][c] -= factor * matrix[pivot_row][c];
      }
    }
    result.pivot_columns.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  result.matrix = std::move(matrix);
  return result;
}

namespace {

bool rf_row_is_zero(const std::vector<RationalFunction>& row,
                    std::size_t upto) {
  for (std::size_t c = 0; c < upto; ++c) {
    if (!row[c].is_zero()) return false;
  }
  return true;
}

bool system_consistent(const RfMatrix& reduced) {
  for (const auto& row : reduced) {
    if (rf_row_is_zero(row, kVarCount) && !row[kVarCount].is_zero()) {
      return false;
    }
  }
  return true;
}

// Every solution has e = g exactly when some row reads e - g = 0: a one in
// the e column, minus one in the g column, zero elsewhere including the
// constant.
bool forces_e_equals_g(const RfMatrix& reduced) {
  const RationalFunction one(1), minus_one(-1);
  for (const auto& row : reduced) {
    bool match = true;
    for (int c = 0; c <= kVarCount; ++c) {
      const RationalFunction& entry = row[static_cast<std::size_t>(c)];
      if (c == kColE) {
        match = entry == one;
      } else if (c == kColG) {
        match = entry == minus_one;
      } else {
        match = entry.is_zero();
      }
      if (!match) break;
    }
    if (match) return true;
  }
  return false;
}

CaseReport run_case(SystemCase which) {
  CaseReport report;
  report.case_kind = which;
  const LinearSystem system = build_system(which);
  const RrefResult reduced = rref(system.rows);

  report.consistent = system_consistent(reduced.matrix);
  report.forces_e_equals_g = forces_e_equals_g(reduced.matrix);
  for (const auto& row : reduced.matrix) {
    std::vector<std::string> shown;
    shown.reserve(row.size());
    for (const RationalFunction& entry : row) shown.push_back(entry.str());
    report.rref_rows.push_back(std::move(shown));
  }
  for (const Polynomial& divisor : reduced.pole_divisors) {
    report.pole_divisors.push_back(divisor.str());
  }
  return report;
}

bool rat_row_forces_e_equals_g(const RatMatrix& reduced) {
  const Rational one(1), minus_one(-1);
  for (const auto& row : reduced) {
    bool match = true;
    for (int c = 0; c <= kVarCount; ++c) {
      const Rational& entry = row[static_cast<std::size_t>(c)];
      if (c == kColE) {
        match = entry == one;
      } else if (c == kColG) {
        match = entry == minus_one;
      } else {
        match = entry.is_zero();
      }
      if (!match) break;
    }
    if (match) return true;
  }
  return false;
}

// Numeric route for one k: instantiate the system, reduce with the plain
// rational elimination, and require (a) e = g forced and (b) entry-for-entry
// agreement with the symbolic reduction evaluated at k.
bool sweep_point_agrees(const RfMatrix& symbolic_rref,
                        const LinearSystem& system, std::int64_t k) {
  const Rational at(k);
  RatMatrix numeric;
  numeric.reserve(system.rows.size());
  for (const auto& row : system.rows) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const RationalFunction& entry : row) r.push_back(entry.evaluate(at));
    numeric.push_back(std::move(r));
  }
  const RatRrefResult reduced = rref_rational(std::move(numeric));
  if (!rat_row_forces_e_equals_g(reduced.matrix)) return false;

  for (std::size_t r = 0; r < reduced.matrix.size(); ++r) {
    for (std::size_t c = 0; c < reduced.matrix[r].size(); ++c) {
      if (symbolic_rref[r][c].evaluate(at) != reduced.matrix[r][c]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ProofReport check_odd_contradiction(std::int64_t sweep_max) {
  ProofReport report;
  report.vertex_min = run_case(SystemCase::VertexHoldsMin);
  report.vertex_max = run_case(SystemCase::VertexHoldsMax);

  report.distinctness_contradicted =
      report.vertex_min.consistent && report.vertex_min.forces_e_equals_g &&
      report.vertex_max.consistent && report.vertex_max.forces_e_equals_g;

  report.sweep.max_k = sweep_max;
  if (sweep_max > 0) {
    const LinearSystem min_system = build_system(SystemCase::VertexHoldsMin);
    const LinearSystem max_system = build_system(SystemCase::VertexHoldsMax);
    const RfMatrix min_rref = rref(min_system.rows).matrix;
    const RfMatrix max_rref = rref(max_system.rows).matrix;
    for (std::int64_t k = 1; k <= sweep_max; ++k) {
      ++report.sweep.checked;
      if (!sweep_point_agrees(min_rref, min_system, k) ||
          !sweep_point_agrees(max_rref, max_system, k)) {
        report.sweep.disagreements.push_back(k);
      }
    }
  }

  report.ok = report.distinctness_contradicted &&
              report.vertex_min.pole_divisors.empty() &&
              report.vertex_max.pole_divisors.empty() &&
              report.sweep.disagreements.empty();
  return report;
}

}  // namespace mpoly
