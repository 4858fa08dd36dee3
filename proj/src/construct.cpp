#include "mpoly/construct.hpp"

#include <algorithm>
#include <set>

namespace mpoly {

namespace {

void require_even_order(int i, int n, int min_n) {
  if (n < min_n || n % 2 != 0) {
    throw std::invalid_argument("order must be even and at least " +
                                std::to_string(min_n) + ", got " +
                                std::to_string(n));
  }
  if (i < 1 || i > n / 2) {
    throw std::invalid_argument("vertex index " + std::to_string(i) +
                                " outside [1, " + std::to_string(n / 2) + "]");
  }
}

}  // namespace

std::int64_t initial_vertex_value(int i, int n) {
  require_even_order(i, n, 6);
  if (i == 1) return static_cast<std::int64_t>(n) - 1;
  if (i == 2) return 2LL * n + 1;
  if (i % 2 == 0) return static_cast<std::int64_t>(n) + i;
  return static_cast<std::int64_t>(i) - 1;
}

std::int64_t opposite_vertex_value(int i, int n) {
  return 2LL * n + 2 - initial_vertex_value(i, n);
}

std::int64_t midpoint_value(int i,
                            const std::vector<std::int64_t>& vertex_values) {
  const int n = static_cast<int>(vertex_values.size());
  if (n < 3) {
    throw std::invalid_argument("need at least 3 vertex values");
  }
  if (i < 1 || i > n) {
    throw std::invalid_argument("midpoint index " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
  }
  const std::int64_t a = vertex_values[static_cast<std::size_t>(i - 1)];
  const std::int64_t b =
      vertex_values[static_cast<std::size_t>(wrap_index(i + 1, n) - 1)];
  if (a == 0 || b == 0) {
    throw std::invalid_argument("side " + std::to_string(i) +
                                " has an unassigned endpoint");
  }
  return magic_sum(n) - a - b;
}

Labeling construct(int n) {
  if (n < 3) {
    throw std::invalid_argument("polygon order must be at least 3, got " +
                                std::to_string(n));
  }
  if (n % 2 != 0) {
    throw NonexistenceError("no magic " + std::to_string(n) +
                            "-gon exists (odd n)");
  }
  if (n == 4) {
    // The 3x3 reference square as a polygon; the general formulas collide
    // at n = 4 (v_1 and m_1 would both take 3).
    return Labeling(4, 5, {2, 6, 8, 4}, {7, 1, 3, 9});
  }

  std::vector<std::int64_t> vertices(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n / 2; ++i) {
    vertices[static_cast<std::size_t>(i - 1)] = initial_vertex_value(i, n);
    vertices[static_cast<std::size_t>(n / 2 + i - 1)] =
        opposite_vertex_value(i, n);
  }
  std::vector<std::int64_t> midpoints(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    midpoints[static_cast<std::size_t>(i - 1)] = midpoint_value(i, vertices);
  }
  return Labeling(n, center_value(n), std::move(vertices),
                  std::move(midpoints));
}

RangePartitionReport range_partition_check(int n) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument(
        "range partition check needs even order >= 8, got " +
        std::to_string(n));
  }

  const Labeling labeling = construct(n);
  const int half = n / 2;
  const std::int64_t lower_lo = 4, lower_hi = n - 2;
  const std::int64_t upper_lo = n + 4, upper_hi = 2LL * n - 2;

  RangePartitionReport report;
  report.n = n;

  auto in_lower = [&](std::int64_t v) { return v >= lower_lo && v <= lower_hi; };
  auto in_upper = [&](std::int64_t v) { return v >= upper_lo && v <= upper_hi; };

  auto record = [&](const std::string& text) {
    report.failures.push_back(text);
  };

  // Tracked values: even first-half indices 2l1 send v_{n/2+2l1} low and
  // v_{2l1} high, odd indices 2l2+1 >= 5 send v_{2l2+1} low and the opposite
  // vertex high, and midpoints split as m_{n/2+j} low / m_j high for
  // 3 <= j < n/2.
  report.lower_membership_ok = true;
  report.upper_membership_ok = true;
  auto claim = [&](std::int64_t value, bool lower, const std::string& who) {
    if (lower) {
      report.lower_group.push_back(value);
      if (!in_lower(value)) {
        report.lower_membership_ok = false;
        record(who + " holds " + std::to_string(value) +
               ", outside the lower range");
      }
    } else {
      report.upper_group.push_back(value);
      if (!in_upper(value)) {
        report.upper_membership_ok = false;
        record(who + " holds " + std::to_string(value) +
               ", outside the upper range");
      }
    }
  };

  for (int even_i = 4; even_i <= half; even_i += 2) {
    claim(labeling.vertex(half + even_i), true,
          NodeId::vertex(half + even_i).name());
    claim(labeling.vertex(even_i), false, NodeId::vertex(even_i).name());
  }
  for (int odd_i = 5; odd_i <= half; odd_i += 2) {
    claim(labeling.vertex(odd_i), true, NodeId::vertex(odd_i).name());
    claim(labeling.vertex(half + odd_i), false,
          NodeId::vertex(half + odd_i).name());
  }
  for (int j = 3; j < half; ++j) {
    const std::int64_t low_value = labeling.midpoint(half + j);
    claim(low_value, true, NodeId::midpoint(half + j).name());
    claim(labeling.midpoint(j), false, NodeId::midpoint(j).name());
    if (low_value < 7) {
      report.notes.push_back(NodeId::midpoint(half + j).name() + " holds " +
                             std::to_string(low_value) +
                             ", below the narrow window 7..n/2 yet inside "
                             "the lower range");
    }
  }

  auto distinct = [&](const std::vector<std::int64_t>& group,
                      const std::string& which) {
    std::set<std::int64_t> seen;
    bool ok = true;
    for (std::int64_t v : group) {
      if (!seen.insert(v).second) {
        ok = false;
        record("value " + std::to_string(v) + " repeats in the " + which +
               " group");
      }
    }
    if (group.size() != static_cast<std::size_t>(n - 6)) {
      ok = false;
      record(which + " group has " + std::to_string(group.size()) +
             " entries, expected " + std::to_string(n - 6));
    }
    return ok;
  };
  report.lower_distinct_ok = distinct(report.lower_group, "lower");
  report.upper_distinct_ok = distinct(report.upper_group, "upper");

  // Boundary midpoints m_{n/2} and m_n swap ranges with the parity of n/2.
  const std::int64_t mid_half = labeling.midpoint(half);
  const std::int64_t mid_last = labeling.midpoint(n);
  std::int64_t expect_half, expect_last;
  bool half_goes_low = half % 2 == 0;
  if (half_goes_low) {
    expect_half = half;
    expect_last = 3LL * n / 2 + 2;
  } else {
    expect_half = 3LL * n / 2 + 1;
    expect_last = half + 1;
  }
  report.boundary_ok = true;
  if (mid_half != expect_half || mid_last != expect_last) {
    report.boundary_ok = false;
    record("boundary midpoints hold " + std::to_string(mid_half) + ", " +
           std::to_string(mid_last) + ", expected " +
           std::to_string(expect_half) + ", " + std::to_string(expect_last));
  }
  const std::int64_t low_boundary = half_goes_low ? mid_half : mid_last;
  const std::int64_t high_boundary = half_goes_low ? mid_last : mid_half;
  if (!in_lower(low_boundary) || !in_upper(high_boundary)) {
    report.boundary_ok = false;
    record("boundary midpoints land in the wrong range");
  }

  // Together with the boundary values the two groups must tile the ranges.
  auto covers = [&](std::vector<std::int64_t> group, std::int64_t extra,
                    std::int64_t lo, std::int64_t hi,
                    const std::string& which) {
    group.push_back(extra);
    std::sort(group.begin(), group.end());
    bool ok = group.size() == static_cast<std::size_t>(hi - lo + 1);
    for (std::size_t idx = 0; ok && idx < group.size(); ++idx) {
      ok = group[idx] == lo + static_cast<std::int64_t>(idx);
    }
    if (!ok) {
      record("the " + which + " group plus its boundary value does not tile " +
             std::to_string(lo) + ".." + std::to_string(hi));
    }
    return ok;
  };
  report.cover_ok =
      covers(report.lower_group, low_boundary, lower_lo, lower_hi, "lower") &&
      covers(report.upper_group, high_boundary, upper_lo, upper_hi, "upper");

  report.complement_ok = true;
  for (int j = 1; j <= half; ++j) {
    const std::int64_t pair_sum =
        labeling.midpoint(j) + labeling.midpoint(half + j);
    if (pair_sum != 2LL * n + 2) {
      report.complement_ok = false;
      record("m" + std::to_string(j) + " + m" + std::to_string(half + j) +
             " = " + std::to_string(pair_sum) + ", expected " +
             std::to_string(2 * n + 2));
    }
  }

  report.ok = report.lower_membership_ok && report.upper_membership_ok &&
              report.lower_distinct_ok && report.upper_distinct_ok &&
              report.boundary_ok && report.cover_ok && report.complement_ok;
  return report;
}

}  // namespace mpoly
