#include "mpoly/labeling_io.hpp"

#include <sstream>

namespace mpoly {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::ostringstream os;
  os << "invalid labeling document:";
  for (const std::string& issue : issues) os << "\n  - " << issue;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

Labeling parse_labeling_document(const std::string& text) {
  std::vector<std::string> issues;

  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError({"not parseable as JSON"});
  }
  if (!doc.is_object()) {
    throw ParseError({"top level must be an object"});
  }

  auto require_int = [&](const char* key) -> std::int64_t {
    if (!doc.contains(key)) {
      issues.push_back(std::string("missing field \"") + key + "\"");
      return 0;
    }
    if (!doc[key].is_number_integer()) {
      issues.push_back(std::string("field \"") + key +
                       "\" must be an integer");
      return 0;
    }
    return doc[key].get<std::int64_t>();
  };

  const std::int64_t n_raw = require_int("n");
  if (issues.empty() && (n_raw < 3 || n_raw > 1000000)) {
    issues.push_back("field \"n\" must be in [3, 1000000], got " +
                     std::to_string(n_raw));
  }
  if (!issues.empty()) throw ParseError(std::move(issues));
  const int n = static_cast<int>(n_raw);
  const std::int64_t max_label = 2LL * n + 1;

  const std::int64_t center = require_int("center");
  auto read_array = [&](const char* key) {
    std::vector<std::int64_t> values;
    if (!doc.contains(key)) {
      issues.push_back(std::string("missing field \"") + key + "\"");
      return values;
    }
    if (!doc[key].is_array() ||
        doc[key].size() != static_cast<std::size_t>(n)) {
      issues.push_back(std::string("field \"") + key + "\" must be an array of " +
                       std::to_string(n) + " integers");
      return values;
    }
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
      const auto& entry = doc[key][i];
      if (!entry.is_number_integer()) {
        issues.push_back(std::string(key) + "[" + std::to_string(i + 1) +
                         "] must be an integer");
        values.push_back(0);
        continue;
      }
      values.push_back(entry.get<std::int64_t>());
    }
    return values;
  };

  std::vector<std::int64_t> vertices = read_array("vertices");
  std::vector<std::int64_t> midpoints = read_array("midpoints");

  auto check_range = [&](const char* key, std::int64_t value,
                         std::size_t index_1based) {
    if (value < 1 || value > max_label) {
      issues.push_back(std::string(key) + "[" + std::to_string(index_1based) +
                       "] = " + std::to_string(value) +
                       " outside [1, " + std::to_string(max_label) + "]");
    }
  };
  if (issues.empty()) {
    if (center < 1 || center > max_label) {
      issues.push_back("center = " + std::to_string(center) +
                       " outside [1, " + std::to_string(max_label) + "]");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      check_range("vertices", vertices[i], i + 1);
    }
    for (std::size_t i = 0; i < midpoints.size(); ++i) {
      check_range("midpoints", midpoints[i], i + 1);
    }
  }
  if (!issues.empty()) throw ParseError(std::move(issues));

  return Labeling(n, center, std::move(vertices), std::move(midpoints));
}

nlohmann::ordered_json labeling_to_json(const Labeling& labeling) {
  nlohmann::ordered_json doc;
  doc["n"] = labeling.n();
  doc["center"] = labeling.center();
  std::vector<std::int64_t> vertices, midpoints;
  for (int i = 1; i <= labeling.n(); ++i) {
    vertices.push_back(labeling.vertex(i));
    midpoints.push_back(labeling.midpoint(i));
  }
  doc["vertices"] = vertices;
  doc["midpoints"] = midpoints;
  return doc;
}

std::string serialize_labeling_document(const Labeling& labeling) {
  return to_output_bytes(labeling_to_json(labeling));
}

std::string to_output_bytes(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

namespace {

nlohmann::ordered_json line_sum_to_json(const LineSum& entry) {
  nlohmann::ordered_json item;
  item["line"] = entry.line.name();
  std::vector<std::string> nodes;
  for (NodeId node : entry.line.nodes) nodes.push_back(node.name());
  item["nodes"] = nodes;
  item["sum"] = entry.sum;
  return item;
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["is_permutation"] = report.is_permutation;
  doc["is_magic"] = report.is_magic;
  if (report.common_sum) {
    doc["common_sum"] = *report.common_sum;
  } else {
    doc["common_sum"] = nullptr;
  }
  doc["line_sums"] = nlohmann::ordered_json::array();
  for (const LineSum& entry : report.line_sums) {
    doc["line_sums"].push_back(line_sum_to_json(entry));
  }
  doc["violations"] = nlohmann::ordered_json::array();
  for (const LineSum& entry : report.violations) {
    doc["violations"].push_back(line_sum_to_json(entry));
  }
  doc["duplicate_values"] = report.duplicate_values;
  doc["out_of_range_values"] = report.out_of_range_values;
  return doc;
}

nlohmann::ordered_json to_json(const EnumerationResult& result) {
  nlohmann::ordered_json doc;
  doc["n"] = result.n;
  doc["mode"] = to_string(result.mode);
  doc["up_to_symmetry"] = result.up_to_symmetry;
  doc["total_count"] = result.total_count;
  doc["class_count"] = result.class_count;
  doc["nodes_explored"] = result.nodes_explored;
  if (!result.solutions.empty()) {
    doc["solutions"] = nlohmann::ordered_json::array();
    for (const Labeling& solution : result.solutions) {
      doc["solutions"].push_back(labeling_to_json(solution));
    }
  }
  return doc;
}

nlohmann::ordered_json to_json(const RangePartitionReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["ok"] = report.ok;
  nlohmann::ordered_json checks;
  checks["lower_membership"] = report.lower_membership_ok;
  checks["upper_membership"] = report.upper_membership_ok;
  checks["lower_distinct"] = report.lower_distinct_ok;
  checks["upper_distinct"] = report.upper_distinct_ok;
  checks["boundary"] = report.boundary_ok;
  checks["cover"] = report.cover_ok;
  checks["complement"] = report.complement_ok;
  doc["checks"] = checks;
  doc["lower_group"] = report.lower_group;
  doc["upper_group"] = report.upper_group;
  doc["failures"] = report.failures;
  doc["notes"] = report.notes;
  return doc;
}

namespace {

nlohmann::ordered_json case_to_json(const CaseReport& report) {
  nlohmann::ordered_json doc;
  doc["case"] = to_string(report.case_kind);
  doc["consistent"] = report.consistent;
  doc["forces_e_equals_g"] = report.forces_e_equals_g;
  doc["rref"] = report.rref_rows;
  doc["pole_divisors"] = report.pole_divisors;
  return doc;
}

}  // namespace

nlohmann::ordered_json to_json(const ProofReport& report) {
  nlohmann::ordered_json doc;
  doc["cases"] = nlohmann::ordered_json::array(
      {case_to_json(report.vertex_min), case_to_json(report.vertex_max)});
  doc["distinctness_contradicted"] = report.distinctness_contradicted;
  nlohmann::ordered_json sweep;
  sweep["max_k"] = report.sweep.max_k;
  sweep["checked"] = report.sweep.checked;
  sweep["disagreements"] = report.sweep.disagreements;
  doc["sweep"] = sweep;
  doc["ok"] = report.ok;
  return doc;
}

nlohmann::ordered_json to_json(const NonexistenceReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["mode"] = to_string(report.mode);
  doc["total_count"] = report.total_count;
  doc["nodes_explored"] = report.nodes_explored;
  doc["confirmed"] = report.confirmed;
  return doc;
}

}  // namespace mpoly
