#include "mpoly/symmetry.hpp"

#include <algorithm>
#include <set>

namespace mpoly {

namespace {

void require_complete(const Labeling& labeling) {
  if (!labeling.is_complete()) {
    throw std::invalid_argument(
        "symmetry actions require a complete labeling");
  }
}

int normalize_rotation(int t, int n) {
  int r = t % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<SymmetryElement> group_elements(int n) {
  if (n < 3) {
    throw std::invalid_argument("polygon order must be at least 3, got " +
                                std::to_string(n));
  }
  std::vector<SymmetryElement> elements;
  elements.reserve(2 * static_cast<std::size_t>(n));
  for (int refl = 0; refl < 2; ++refl) {
    for (int t = 0; t < n; ++t) {
      elements.push_back({t, refl == 1});
    }
  }
  return elements;
}

SymmetryElement compose(SymmetryElement a, SymmetryElement b, int n) {
  // Reflection conjugates rotations: s r^t = r^{-t} s.
  int t = a.reflected ? a.rotation - b.rotation : a.rotation + b.rotation;
  return {normalize_rotation(t, n),
          static_cast<bool>(a.reflected ^ b.reflected)};
}

SymmetryElement inverse(SymmetryElement g, int n) {
  if (g.reflected) return g;
  return {normalize_rotation(-g.rotation, n), false};
}

NodeId map_node(SymmetryElement g, NodeId node, int n) {
  switch (node.kind) {
    case NodeKind::Center:
      return node;
    case NodeKind::Vertex: {
      int i = g.reflected ? g.rotation + 2 - node.index
                          : node.index + g.rotation;
      return NodeId::vertex(wrap_index(i, n));
    }
    case NodeKind::Midpoint: {
      int i = g.reflected ? g.rotation + 1 - node.index
                          : node.index + g.rotation;
      return NodeId::midpoint(wrap_index(i, n));
    }
  }
  return node;
}

Labeling apply(SymmetryElement g, const Labeling& labeling) {
  require_complete(labeling);
  const int n = labeling.n();
  Labeling image(n);
  image.set(NodeId::center(), labeling.center());
  for (int i = 1; i <= n; ++i) {
    image.set(map_node(g, NodeId::vertex(i), n), labeling.vertex(i));
    image.set(map_node(g, NodeId::midpoint(i), n), labeling.midpoint(i));
  }
  return image;
}

std::vector<Labeling> orbit(const Labeling& labeling) {
  require_complete(labeling);
  std::set<Labeling> images;
  for (SymmetryElement g : group_elements(labeling.n())) {
    images.insert(apply(g, labeling));
  }
  return {images.begin(), images.end()};
}

Labeling canonical_form(const Labeling& labeling) {
  require_complete(labeling);
  const int n = labeling.n();
  Labeling best = labeling;
  for (SymmetryElement g : group_elements(n)) {
    Labeling image = apply(g, labeling);
    if (image < best) best = std::move(image);
  }
  return best;
}

}  // namespace mpoly
