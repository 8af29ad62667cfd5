#pragma once

// Batch front end: reads documents, dispatches one library operation per
// verb, and reports the outcome as JSON.

#include "steinberg/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace steinberg::cli {

inline constexpr const char* tool_name = "steinberg";
inline constexpr const char* tool_version = "0.1.0";

const std::vector<std::string>& verbs();

struct Command {
  std::string verb;
  // Document paths; which ones a verb needs is checked by run().
  std::string input, partition, pset1, pset2, elements, cylinders;
  // Leavitt path algebra expressions.
  std::string lhs, rhs, expr;
  std::size_t degree = 4;
  std::string ring = "rat";
  std::uint64_t seed = 0;
};

enum class Status { pass, fail, rejected };

struct Report {
  std::string verb;
  Status status = Status::pass;
  std::string input_digest;
  Json details = Json::object();

  int exit_code() const { return status == Status::pass ? 0 : status == Status::fail ? 1 : 2; }
  Json to_json() const;
  /// Short human-readable rendering: a status line, then one line per detail.
  std::string to_text() const;
};

std::string status_name(Status s);

/// Never throws for bad input: parse errors and failed hypotheses come back
/// as rejected reports with an "error" detail.
Report run(const Command& command);

/// Parses argv, runs, prints the report to `out` (JSON with --json) and
/// returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
