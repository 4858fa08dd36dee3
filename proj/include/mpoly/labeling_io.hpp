#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "mpoly/construct.hpp"
#include "mpoly/core.hpp"
#include "mpoly/proofcheck.hpp"
#include "mpoly/search.hpp"

namespace mpoly {

// Document exchange and report serialization. One labeling document per
// file: {"n": ..., "center": ..., "vertices": [v_1..v_n, clockwise],
// "midpoints": [m_1..m_n]}. All emitted JSON is two-space indented, keyed in
// insertion order, UTF-8 and newline-terminated, so identical data always
// produces identical bytes.

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// Throws ParseError carrying one diagnostic per offending field.
Labeling parse_labeling_document(const std::string& text);

nlohmann::ordered_json labeling_to_json(const Labeling& labeling);
std::string serialize_labeling_document(const Labeling& labeling);

nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const EnumerationResult& result);
nlohmann::ordered_json to_json(const RangePartitionReport& report);
nlohmann::ordered_json to_json(const ProofReport& report);
nlohmann::ordered_json to_json(const NonexistenceReport& report);

// Canonical byte form of any report document.
std::string to_output_bytes(const nlohmann::ordered_json& doc);

}  // namespace mpoly
