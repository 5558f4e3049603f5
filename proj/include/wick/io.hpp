#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wick/algebra.hpp"
#include "wick/tensorops.hpp"

namespace wick {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor+                      juxtaposition multiplies
///   factor := scalar | atom | '(' expr ')'
///   atom   := 'a' INT ['*']                '*' is the involution
///   scalar := RAT | RAT? 'i'
///   RAT    := INT ['/' INT]
/// Throws ParseError (with offset) on bad syntax and IndexError for an
/// index outside 1..d.
Polynomial parse_expression(std::string_view text, int d);

/// Canonical text that parse_expression reads back to the same polynomial.
std::string format_polynomial(const Polynomial& p);
std::string format_scalar(const Scalar& s);

nlohmann::json relations_to_json(const RelationSystem& rs);
/// Non-hermitian tensors are accepted; a message is appended to warnings.
RelationSystem relations_from_json(const nlohmann::json& j, std::vector<std::string>* warnings = nullptr);
RelationSystem load_relations(const std::string& path, std::vector<std::string>* warnings = nullptr);
void save_relations(const RelationSystem& rs, const std::string& path);

/// Exact scalar as {"re": "p/q", "im": "p/q"}.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

struct CheckRecord {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string command;
  std::string relations_name;
  int relations_d = 0;
  std::map<std::string, std::string> relations_params;
  std::vector<CheckRecord> checks;
  double timing_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
void save_report(const Report& r, const std::string& path);
Report load_report(const std::string& path);

/// Check records for library results.
CheckRecord positivity_record(const PositivityReport& rep);

}  // namespace wick
