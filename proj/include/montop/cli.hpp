#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "montop/error.hpp"

namespace montop::cli {

inline constexpr const char* kSchema = "montop-report/1";
inline constexpr const char* kVersion = "0.1.0";

enum class Format { text, json };

/// One parsed command line. Options a subcommand does not use are ignored.
struct Invocation {
  std::string command;
  /// Presentation file or builtin name.
  std::string target;
  /// Subcommand positionals after the target (tk/sn operation and operands,
  /// tensor M-set files, group words for points).
  std::vector<std::string> args;
  Format format = Format::text;

  std::optional<std::size_t> pair_len, wit_len, trunc, search, bound;
  std::optional<std::string> subset, character, point, matrix, mset, primes, y;
  std::optional<std::size_t> ideals;
  std::optional<std::uint64_t> divisors;
  unsigned k = 0, l = 0;
  bool validate = false;
  /// Generator guard; taken from MONOID_TOPOS_MAX_GENERATORS when set.
  std::optional<std::size_t> max_generators;
};

/// Structured document plus its human-readable rendering.
struct Report {
  nlohmann::json doc;
  std::string text;
};

struct Outcome {
  /// 0 success, 1 input error, 2 guard exceeded.
  int exit_code = 0;
  Report report;
};

Outcome run(const Invocation& inv);

/// The document serialized with sorted keys and two-space indent.
std::string to_json(const Report& r);
std::string render(const Report& r, Format f);

/// Parses argv with the documented subcommands; reads the generator guard
/// from the environment. Returns nullopt after printing help.
std::optional<Invocation> parse_command_line(int argc, const char* const* argv);

/// Entry point of the executable.
int main_entry(int argc, const char* const* argv);

}  // namespace montop::cli
