#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mpoly/construct.hpp"
#include "mpoly/core.hpp"
#include "mpoly/symmetry.hpp"

using namespace mpoly;

namespace {

Labeling random_complete_labeling(int n, std::uint32_t seed) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(2 * n + 1));
  std::iota(values.begin(), values.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(values.begin(), values.end(), rng);
  Labeling labeling(n);
  labeling.slots() = values;
  return labeling;
}

// The reference hexagon read clockwise from its right vertex instead of the
// top-left one.
Labeling hexagon_rotated_reading() {
  return Labeling(6, 7, {2, 9, 1, 12, 5, 13}, {10, 11, 8, 4, 3, 6});
}

// The reference hexagon read counterclockwise from the top-left vertex.
Labeling hexagon_mirrored_reading() {
  return Labeling(6, 7, {5, 12, 1, 9, 2, 13}, {4, 8, 11, 10, 6, 3});
}

}  // namespace

TEST_CASE("the group has 2n distinct elements and acts faithfully") {
  for (int n : {3, 4, 5, 6, 8}) {
    CAPTURE(n);
    const auto elements = group_elements(n);
    CHECK(elements.size() == 2 * static_cast<std::size_t>(n));

    // Distinct elements permute the nodes differently.
    std::set<std::vector<int>> images;
    for (SymmetryElement g : elements) {
      std::vector<int> image;
      for (int i = 1; i <= n; ++i) {
        image.push_back(map_node(g, NodeId::vertex(i), n).slot(n));
        image.push_back(map_node(g, NodeId::midpoint(i), n).slot(n));
      }
      images.insert(image);
    }
    CHECK(images.size() == elements.size());
  }
  CHECK_THROWS_AS(group_elements(2), std::invalid_argument);
}

TEST_CASE("composition and inversion stay inside the group") {
  for (int n : {3, 5, 6}) {
    const auto elements = group_elements(n);
    const SymmetryElement identity{0, false};
    for (SymmetryElement a : elements) {
      CHECK(compose(a, inverse(a, n), n) == identity);
      CHECK(compose(inverse(a, n), a, n) == identity);
      for (SymmetryElement b : elements) {
        const SymmetryElement ab = compose(a, b, n);
        CHECK(ab.rotation >= 0);
        CHECK(ab.rotation < n);
        // The composite moves nodes exactly like applying b then a.
        for (int i = 1; i <= n; ++i) {
          const NodeId node = NodeId::vertex(i);
          CHECK(map_node(ab, node, n) ==
                map_node(a, map_node(b, node, n), n));
          const NodeId mid = NodeId::midpoint(i);
          CHECK(map_node(ab, mid, n) == map_node(a, map_node(b, mid, n), n));
        }
      }
    }
  }
}

TEST_CASE("identity leaves labelings alone") {
  const Labeling hexagon = construct(6);
  CHECK(apply({0, false}, hexagon) == hexagon);
}

TEST_CASE("rotating twice by 3 on a hexagon is the identity") {
  const Labeling hexagon = construct(6);
  const SymmetryElement third{3, false};
  CHECK(apply(third, apply(third, hexagon)) == hexagon);
}

TEST_CASE("the base reflection preserves the magic property") {
  const Labeling image = apply({0, true}, construct(6));
  const auto report = verify(image);
  CHECK(report.is_magic);
  CHECK(*report.common_sum == 21);
}

TEST_CASE("every group element preserves verification results") {
  for (int n : {4, 6, 8}) {
    const Labeling magic = construct(n);
    for (SymmetryElement g : group_elements(n)) {
      const auto report = verify(apply(g, magic));
      CHECK(report.is_magic);
      CHECK(*report.common_sum == 3 * n + 3);
    }
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
      const Labeling shuffled = random_complete_labeling(n, 900 + seed);
      const bool magic_before = verify(shuffled).is_magic;
      for (SymmetryElement g :
           {SymmetryElement{1, false}, SymmetryElement{n - 1, true}}) {
        CHECK(verify(apply(g, shuffled)).is_magic == magic_before);
      }
    }
  }
}

TEST_CASE("apply refuses incomplete labelings") {
  Labeling partial(4);
  partial.set(NodeId::vertex(1), 1);
  CHECK_THROWS_AS(apply({1, false}, partial), std::invalid_argument);
  CHECK_THROWS_AS(orbit(partial), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(partial), std::invalid_argument);
}

TEST_CASE("orbit sizes divide the group order") {
  for (int n : {4, 6, 8}) {
    CAPTURE(n);
    CHECK(2 * static_cast<std::size_t>(n) % orbit(construct(n)).size() == 0);
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
      const auto members = orbit(random_complete_labeling(n, seed * 17 + 1));
      CHECK(2 * static_cast<std::size_t>(n) % members.size() == 0);
    }
  }
}

TEST_CASE("the reference square has a full orbit of 8") {
  const Labeling square(4, 5, {2, 6, 8, 4}, {7, 1, 3, 9});
  CHECK(orbit(square).size() == 8);
}

TEST_CASE("all orbit members of the octagon construction are magic") {
  for (const Labeling& member : orbit(construct(8))) {
    CHECK(verify(member).is_magic);
  }
}

TEST_CASE("canonical_form is idempotent and orbit-constant") {
  for (int n : {4, 6, 8}) {
    CAPTURE(n);
    std::vector<Labeling> samples;
    samples.push_back(construct(n));
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
      samples.push_back(random_complete_labeling(n, seed * 31 + 5));
    }
    for (const Labeling& sample : samples) {
      const Labeling canonical = canonical_form(sample);
      CHECK(canonical_form(canonical) == canonical);
      for (SymmetryElement g : group_elements(n)) {
        CHECK(canonical_form(apply(g, sample)) == canonical);
      }
      // The canonical form lives in the orbit and is its least member.
      const auto members = orbit(sample);
      CHECK(std::find(members.begin(), members.end(), canonical) !=
            members.end());
      CHECK(members.front() == canonical);
    }
  }
}

TEST_CASE("alternate readings of the hexagon share one canonical form") {
  const Labeling base = canonical_form(construct(6));
  CHECK(canonical_form(hexagon_rotated_reading()) == base);
  CHECK(canonical_form(hexagon_mirrored_reading()) == base);
  CHECK(verify(hexagon_rotated_reading()).is_magic);
  CHECK(verify(hexagon_mirrored_reading()).is_magic);
}
