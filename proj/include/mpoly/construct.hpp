#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpoly/core.hpp"

namespace mpoly {

// Closed-form construction of one magic n-gon for every even n.
//
// The scheme fixes the first n/2 vertex values outright, reflects them across
// the center (opposite rim nodes pair to 2n+2), and completes every midpoint
// from its side sum. n = 4 is served by a fixed reference labeling because
// the general formulas collide there.

// Value of v_i for 1 <= i <= n/2 (n even, n >= 6): v_1 = n-1, v_2 = 2n+1,
// then n+i for even i and i-1 for odd i.
std::int64_t initial_vertex_value(int i, int n);

// Value of the opposite vertex v_{n/2+i}: 2n+2 - initial_vertex_value(i, n).
std::int64_t opposite_vertex_value(int i, int n);

// Value of midpoint m_i completing side i to the magic sum:
// 3n+3 - v_i - v_{i+1}, with v_{n+1} wrapping to v_1. vertex_values holds
// v_1..v_n; an unset (zero) endpoint is an error.
std::int64_t midpoint_value(int i,
                            const std::vector<std::int64_t>& vertex_values);

// A complete magic labeling of the even n-gon, center n+1, common sum 3n+3.
// Throws NonexistenceError for odd n and std::invalid_argument for n < 3.
Labeling construct(int n);

// Residual-range audit of the construction for even n >= 8. The values not
// placed by the eleven fixed initial assignments must fill the lower range
// L = {4..n-2} and upper range U = {n+4..2n-2} exactly once each, and
// opposite midpoints must pair to 2n+2.
struct RangePartitionReport {
  int n = 0;
  bool ok = false;

  bool lower_membership_ok = false;   // tracked values land in L
  bool upper_membership_ok = false;   // tracked values land in U
  bool lower_distinct_ok = false;     // no collisions within the L group
  bool upper_distinct_ok = false;     // no collisions within the U group
  bool boundary_ok = false;           // m_{n/2}, m_n land per parity of n/2
  bool cover_ok = false;              // groups plus boundary cover L and U
  bool complement_ok = false;         // m_j + m_{n/2+j} = 2n+2

  std::vector<std::int64_t> lower_group;  // tracked values claimed for L
  std::vector<std::int64_t> upper_group;  // tracked values claimed for U
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

RangePartitionReport range_partition_check(int n);

}  // namespace mpoly
