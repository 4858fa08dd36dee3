#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpoly {

// Thrown when a requested object provably does not exist (e.g. a magic
// polygon with an odd number of sides), as opposed to a malformed request.
class NonexistenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class NodeKind { Vertex, Midpoint, Center };

// A position in the wheel layout of an n-gon: vertex i, the midpoint of the
// edge between vertex i and vertex i+1 (vertex n+1 wraps to vertex 1), or the
// central hub. Indices are 1-based throughout.
struct NodeId {
  NodeKind kind = NodeKind::Center;
  int index = 0;  // in [1, n] for Vertex/Midpoint, 0 for Center

  static constexpr NodeId center() { return {NodeKind::Center, 0}; }
  static constexpr NodeId vertex(int i) { return {NodeKind::Vertex, i}; }
  static constexpr NodeId midpoint(int i) { return {NodeKind::Midpoint, i}; }

  // Flat slot position in a labeling of order n: center first, then
  // v_1..v_n, then m_1..m_n.
  int slot(int n) const;

  std::string name() const;  // "c", "v3", "m1"

  friend bool operator==(const NodeId&, const NodeId&) = default;
  auto operator<=>(const NodeId&) const = default;
};

// Maps i to the 1-based residue in [1, n].
int wrap_index(int i, int n);

enum class LineKind { Side, Diagonal };

// An ordered triple of nodes whose values must share the common sum.
struct Line {
  std::array<NodeId, 3> nodes;
  LineKind kind = LineKind::Side;

  bool contains(NodeId node) const;
  std::string name() const;  // "side 3", "diagonal 2"

  friend bool operator==(const Line&, const Line&) = default;
};

// The forced common sum of a magic n-gon, 3n+3.
std::int64_t magic_sum(int n);

// The forced center value of a magic n-gon, n+1.
std::int64_t center_value(int n);

// All 2n lines of the n-gon, sides 1..n first, then the n diagonals.
// Every diagonal passes through the center. For even n diagonals join
// opposite vertices and opposite midpoints; for odd n each vertex is joined
// to the midpoint of the opposing edge, m_{i+(n-1)/2}.
std::vector<Line> lines(int n);

// Assignment of integer values to the 2n+1 nodes of an n-gon. Slot 0 holds
// the center, slots 1..n the vertices, slots n+1..2n the midpoints; value 0
// marks an unset slot. A complete labeling whose values form a permutation
// of {1..2n+1} is a candidate magic polygon.
//
// Label arithmetic throughout the library is 64-bit signed, which is safe
// for n up to 10^6 (values reach 2n+1, line sums 3n+3).
class Labeling {
 public:
  explicit Labeling(int n);
  Labeling(int n, std::int64_t center, std::vector<std::int64_t> vertices,
           std::vector<std::int64_t> midpoints);

  int n() const { return n_; }
  int node_count() const { return 2 * n_ + 1; }

  std::int64_t at(NodeId node) const { return slots_[node.slot(n_)]; }
  void set(NodeId node, std::int64_t value) { slots_[node.slot(n_)] = value; }

  std::int64_t center() const { return slots_[0]; }
  std::int64_t vertex(int i) const;
  std::int64_t midpoint(int i) const;

  bool is_complete() const;
  std::vector<NodeId> missing_nodes() const;

  // Serialization tuple (center, v_1..v_n, m_1..m_n); doubles as the
  // canonical comparison order.
  const std::vector<std::int64_t>& slots() const { return slots_; }
  std::vector<std::int64_t>& slots() { return slots_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend bool operator<(const Labeling& a, const Labeling& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.slots_ < b.slots_;
  }

 private:
  int n_;
  std::vector<std::int64_t> slots_;
};

struct LineSum {
  Line line;
  std::int64_t sum = 0;
};

struct VerificationReport {
  int n = 0;
  bool is_permutation = false;
  std::vector<LineSum> line_sums;          // all 2n lines, in lines(n) order
  std::optional<std::int64_t> common_sum;  // present iff all line sums equal
  bool is_magic = false;                   // permutation and all sums equal
  std::vector<LineSum> violations;  // lines whose sum differs from the mode
  std::vector<std::int64_t> duplicate_values;
  std::vector<std::int64_t> out_of_range_values;
};

// Checks the magic property of a complete labeling. Pure, O(n). Throws
// std::invalid_argument naming the missing nodes if any slot is unset.
VerificationReport verify(const Labeling& labeling);

}  // namespace mpoly
