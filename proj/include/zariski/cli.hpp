#pragma once

// JSON file formats and the `zariski` command-line front end.
//
// Exit codes: 0 success / property holds, 1 mathematical obstruction or
// failed property, 2 malformed input.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zariski/decomp.hpp"
#include "zariski/oracle.hpp"

namespace zariski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitObstruction = 1;
inline constexpr int kExitInput = 2;

struct ConfigFile {
  surface::ConfigPtr config;
  std::vector<std::pair<std::string, surface::QDivisor>> divisors;
  std::vector<std::pair<std::string, surface::Cycle>> cycles;

  const surface::QDivisor* divisor(std::string_view name) const;
  const surface::Cycle* cycle(std::string_view name) const;
};

bool operator==(const ConfigFile& a, const ConfigFile& b);

struct ResultFile {
  std::string config_hash;
  std::string divisor_name;
  std::optional<std::string> cycle_name;
  decomp::Decomposition decomposition;
  oracle::VerificationReport verification;
};

/// Throws Error(Parse) or Error(InvalidConfiguration) naming the field.
ConfigFile parse_config(std::string_view text);
std::string serialize_config(const ConfigFile& file);

/// Hash of the curve names and intersection matrix only.
std::string config_hash(const surface::CurveConfiguration& config);

/// Names in the result are resolved against `config`.
ResultFile parse_result(std::string_view text, const ConfigFile& config);
std::string serialize_result(const ResultFile& result);

/// Runs the CLI; args[0] is the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zariski::cli
