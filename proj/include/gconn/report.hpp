#pragma once

#include "gconn/galois.hpp"

#include <string>

namespace gconn {

// Current machine-output schema revision.
inline constexpr int kReportSchemaVersion = 1;

struct Report {
  SimpleType group_of;          // the ambient group G
  GaloisVerdict verdict;
  std::optional<JordanForm> jordan; // filled when a formal type was analysed
};

Report build_report(const ConnectionSpec& spec, const GaloisOptions& opt = {});

std::string render_human(const Report& rep);
// Deterministic single JSON object; see README for the schema.
std::string render_machine(const Report& rep);

// Re-parse a machine report; used for round-trip checks. Throws on schema
// mismatch.
struct ParsedReport {
  std::string group;      // type token or "undetermined"
  std::string realisation;
  bool connected = false;
  bool rigid = false;
  Rational slope;
  int dim_h = -1;
  int theta_order = -1;
  std::vector<std::string> notes;
};
ParsedReport parse_machine_report(const std::string& json_text);

std::string realisation_name(const SubgroupType& s);

} // namespace gconn
