#include "mpoly/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mpoly {

namespace {

void require_order(int n) {
  if (n < 3) {
    throw std::invalid_argument("polygon order must be at least 3, got " +
                                std::to_string(n));
  }
}

}  // namespace

int wrap_index(int i, int n) {
  int r = (i - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

int NodeId::slot(int n) const {
  switch (kind) {
    case NodeKind::Center:
      return 0;
    case NodeKind::Vertex:
      return index;
    case NodeKind::Midpoint:
      return n + index;
  }
  return 0;
}

std::string NodeId::name() const {
  switch (kind) {
    case NodeKind::Center:
      return "c";
    case NodeKind::Vertex:
      return "v" + std::to_string(index);
    case NodeKind::Midpoint:
      return "m" + std::to_string(index);
  }
  return "?";
}

bool Line::contains(NodeId node) const {
  return nodes[0] == node || nodes[1] == node || nodes[2] == node;
}

std::string Line::name() const {
  const char* what = kind == LineKind::Side ? "side " : "diagonal ";
  return what + std::to_string(nodes[0].index);
}

std::int64_t magic_sum(int n) {
  require_order(n);
  return 3LL * n + 3;
}

std::int64_t center_value(int n) {
  require_order(n);
  return static_cast<std::int64_t>(n) + 1;
}

std::vector<Line> lines(int n) {
  require_order(n);
  std::vector<Line> result;
  result.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    result.push_back({{NodeId::vertex(i), NodeId::midpoint(i),
                       NodeId::vertex(wrap_index(i + 1, n))},
                      LineKind::Side});
  }
  if (n % 2 == 0) {
    for (int i = 1; i <= n / 2; ++i) {
      result.push_back({{NodeId::vertex(i), NodeId::center(),
                         NodeId::vertex(i + n / 2)},
                        LineKind::Diagonal});
    }
    for (int i = 1; i <= n / 2; ++i) {
      result.push_back({{NodeId::midpoint(i), NodeId::center(),
                         NodeId::midpoint(i + n / 2)},
                        LineKind::Diagonal});
    }
  } else {
    // A vertex lines up with the midpoint of the opposing edge.
    for (int i = 1; i <= n; ++i) {
      result.push_back({{NodeId::vertex(i), NodeId::center(),
                         NodeId::midpoint(wrap_index(i + (n - 1) / 2, n))},
                        LineKind::Diagonal});
    }
  }
  return result;
}

Labeling::Labeling(int n) : n_(n) {
  require_order(n);
  slots_.assign(static_cast<std::size_t>(2 * n + 1), 0);
}

Labeling::Labeling(int n, std::int64_t center,
                   std::vector<std::int64_t> vertices,
                   std::vector<std::int64_t> midpoints)
    : Labeling(n) {
  if (vertices.size() != static_cast<std::size_t>(n) ||
      midpoints.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("labeling of order " + std::to_string(n) +
                                " needs exactly " + std::to_string(n) +
                                " vertices and midpoints");
  }
  slots_[0] = center;
  std::copy(vertices.begin(), vertices.end(), slots_.begin() + 1);
  std::copy(midpoints.begin(), midpoints.end(), slots_.begin() + 1 + n);
}

std::int64_t Labeling::vertex(int i) const {
  return slots_[NodeId::vertex(i).slot(n_)];
}

std::int64_t Labeling::midpoint(int i) const {
  return slots_[NodeId::midpoint(i).slot(n_)];
}

bool Labeling::is_complete() const {
  return std::none_of(slots_.begin(), slots_.end(),
                      [](std::int64_t v) { return v == 0; });
}

std::vector<NodeId> Labeling::missing_nodes() const {
  std::vector<NodeId> missing;
  if (slots_[0] == 0) missing.push_back(NodeId::center());
  for (int i = 1; i <= n_; ++i) {
    if (vertex(i) == 0) missing.push_back(NodeId::vertex(i));
  }
  for (int i = 1; i <= n_; ++i) {
    if (midpoint(i) == 0) missing.push_back(NodeId::midpoint(i));
  }
  return missing;
}

VerificationReport verify(const Labeling& labeling) {
  if (!labeling.is_complete()) {
    std::ostringstream msg;
    msg << "incomplete labeling, missing nodes:";
    for (NodeId node : labeling.missing_nodes()) msg << ' ' << node.name();
    throw std::invalid_argument(msg.str());
  }

  const int n = labeling.n();
  VerificationReport report;
  report.n = n;

  // Permutation check over {1..2n+1}: anything out of range disqualifies,
  // and with 2n+1 in-range entries "no duplicates" implies "all present".
  const std::int64_t max_label = 2LL * n + 1;
  std::vector<int> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (std::int64_t v : labeling.slots()) {
    if (v < 1 || v > max_label) {
      report.out_of_range_values.push_back(v);
    } else if (++seen[static_cast<std::size_t>(v)] == 2) {
      report.duplicate_values.push_back(v);
    }
  }
  std::sort(report.duplicate_values.begin(), report.duplicate_values.end());
  std::sort(report.out_of_range_values.begin(),
            report.out_of_range_values.end());
  report.is_permutation =
      report.duplicate_values.empty() && report.out_of_range_values.empty();

  for (const Line& line : lines(n)) {
    std::int64_t sum = 0;
    for (NodeId node : line.nodes) sum += labeling.at(node);
    report.line_sums.push_back({line, sum});
  }

  bool all_equal = true;
  for (const LineSum& ls : report.line_sums) {
    if (ls.sum != report.line_sums.front().sum) all_equal = false;
  }
  if (all_equal) {
    report.common_sum = report.line_sums.front().sum;
  } else {
    // Report every line off the most frequent sum (ties to the smallest).
    std::map<std::int64_t, int> frequency;
    for (const LineSum& ls : report.line_sums) ++frequency[ls.sum];
    std::int64_t reference = report.line_sums.front().sum;
    int best = 0;
    for (const auto& [sum, count] : frequency) {
      if (count > best) {
        best = count;
        reference = sum;
      }
    }
    for (const LineSum& ls : report.line_sums) {
      if (ls.sum != reference) report.violations.push_back(ls);
    }
  }

  report.is_magic = report.is_permutation && all_equal;
  return report;
}

}  // namespace mpoly
