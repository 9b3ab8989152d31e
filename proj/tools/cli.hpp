#ifndef PDT_TOOLS_CLI_HPP
#define PDT_TOOLS_CLI_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdt/error.hpp"
#include "pdt/serialize.hpp"

namespace pdt::cli {

/// {"kind": ..., "payload": ..., "bounds": {...}?}
struct InputDocument {
  std::string kind;
  Json payload;
  std::optional<Bounds> bounds;
  std::string digest;  // SHA-256 of the raw text
};

/// Throws SchemaError; JSON syntax errors report line and column.
InputDocument parse_input(const std::string& text);

struct RunOptions {
  std::optional<int> bounds_deg;
  std::optional<long> bounds_box;
  /// From PDT_DEFAULT_BOUNDS; below the document and the flags.
  std::optional<Bounds> env_bounds;
};

/// "deg,box", e.g. "2,12".
std::optional<Bounds> parse_bounds_spec(const std::string& spec);

struct VerdictCounts {
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;

  void add(const Verdict& v);
};

struct ResultDocument {
  std::string command;
  std::string input_digest;
  Json result;
  VerdictCounts counts;
  double wall_time_ms = 0;

  /// 0, or 2 when any verdict is Unknown.
  int exit_code() const { return counts.unknown > 0 ? 2 : 0; }
  Json to_json(bool with_time = true) const;
};

const std::vector<std::string>& commands();

/// Throws UnknownCommand, SchemaError and the library's errors.
ResultDocument run(const std::string& command, const InputDocument& input, const RunOptions& options);

/// Exit code for a library error: 2 for UnresolvedFaces, 1 otherwise.
int exit_code_for(const Error& e);

std::string render_text(const ResultDocument& doc);

std::string sha256_hex(const std::string& data);

}  // namespace pdt::cli

#endif  // PDT_TOOLS_CLI_HPP
