#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace divides::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "A..B" with A <= B; ParseError otherwise.
Range parse_range(std::string_view text);

struct VerificationReport {
  std::string suite;
  Range range;
  std::vector<nlohmann::json> records;  // each carries a boolean "pass"
  std::int64_t failed() const;
  bool pass() const { return failed() == 0; }
  nlohmann::json to_json() const;
};

// Suites: tables, coefficient, genus, oracle. ParseError for other names.
VerificationReport cmd_verify(std::string_view suite, Range range);
Range default_range(std::string_view suite);

// The remaining commands write to `out` and return an exit code.
// emit is "json" or "svg".
int cmd_family(std::string_view spec, std::string_view emit, std::ostream& out);
// `region_json` is the text of a Region JSON document.
int cmd_trace(std::string_view region_json, std::string_view emit, std::ostream& out);
// `source` is a family string or Region JSON text (anything starting with '{').
int cmd_braid(std::string_view source, std::ostream& out);
// emit is "csv" or "json".
int cmd_census(int max_n, int max_dim, std::string_view emit, std::ostream& out);

}  // namespace divides::cli
