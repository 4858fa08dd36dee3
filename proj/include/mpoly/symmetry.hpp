#pragma once

#include <vector>

#include "mpoly/core.hpp"

namespace mpoly {

// The dihedral group of order 2n acting on the wheel layout. An element is
// a rotation by t positions, optionally preceded by the base reflection that
// fixes vertex 1 (vertex i -> vertex 2-i, midpoint i -> midpoint 1-i, all
// indices 1-based mod n). Two labelings count as the same solution when one
// is the image of the other.
struct SymmetryElement {
  int rotation = 0;        // in [0, n-1]
  bool reflected = false;  // base reflection applied before the rotation

  friend bool operator==(const SymmetryElement&,
                         const SymmetryElement&) = default;
};

// All 2n elements: rotations first, then reflected elements, by rotation.
std::vector<SymmetryElement> group_elements(int n);

// Group operation a.b (b acts first) and inverses, order n arithmetic.
SymmetryElement compose(SymmetryElement a, SymmetryElement b, int n);
SymmetryElement inverse(SymmetryElement g, int n);

// Image of a single node under g.
NodeId map_node(SymmetryElement g, NodeId node, int n);

// Image labeling: values travel with their nodes. Requires a complete input.
Labeling apply(SymmetryElement g, const Labeling& labeling);

// All distinct images of the labeling, sorted; size divides 2n.
std::vector<Labeling> orbit(const Labeling& labeling);

// The lexicographically least orbit member under the slot order
// (center, v_1..v_n, m_1..m_n). Idempotent and constant on orbits.
Labeling canonical_form(const Labeling& labeling);

}  // namespace mpoly
