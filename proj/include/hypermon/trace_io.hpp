#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hypermon/semantics.hpp"

namespace hypermon {

// Trace files: one step per line, written as comma-separated proposition
// names; `{}` is the empty step; `#` starts a comment; blank lines are
// skipped. A file without steps is the empty trace.

/// Throws ParseError with the 1-based line and column of the problem.
Trace parse_trace(std::string_view text, std::string name);

/// Canonical form: propositions sorted, no spaces, one newline per step.
std::string print_trace(const Trace& t);

/// Trace named after the file stem. Throws Error on I/O failure, ParseError.
Trace read_trace_file(const std::filesystem::path& path);
void write_trace_file(const std::filesystem::path& path, const Trace& t);

/// Files are kept in the given order; a directory contributes its `.trace`
/// files in lexicographic name order. Throws Error for missing paths.
std::vector<std::filesystem::path> expand_trace_paths(const std::vector<std::filesystem::path>& paths);

}  // namespace hypermon
