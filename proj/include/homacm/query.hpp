#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace homacm {

enum class OutputFormat { Text, Json, Csv };

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> v{"datum",           "acm",       "ulrich",
                                          "cohomology",      "enumerate-acm", "enumerate-ulrich",
                                          "verify-closed-form", "line-bundle", "sufficient",
                                          "universal-weights", "rank"};
  return v;
}

struct QuerySpec {
  std::string command;
  std::string type_token;  // "B3"
  std::vector<int> I;
  std::vector<int> polarization;  // filled with 1s when omitted
  std::vector<int> weight;        // empty for commands that take none
  std::optional<std::pair<long, long>> twists;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::uint64_t> cap;
  bool tight = false;
  std::optional<int> block;
  std::optional<std::uint64_t> seed;

  bool operator==(const QuerySpec&) const = default;
};

/// Exit status of a rejected command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates tokens (without the program name). Throws UsageError.
QuerySpec parse_spec(const std::vector<std::string>& args);

nlohmann::ordered_json to_json(const QuerySpec& q);
QuerySpec spec_from_json(const nlohmann::ordered_json& j);

/// Runs a validated query; returns the process exit code (0 ok, 2 invalid input, 3 cap exceeded).
int run(const QuerySpec& q, std::ostream& out, std::ostream& err);

/// parse_spec + run with diagnostics on err.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homacm
