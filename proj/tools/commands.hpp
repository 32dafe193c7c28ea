#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfkit/io.hpp"

namespace hopfkit::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Invocation {
    std::string command;
    std::vector<std::string> inputs;  // "builtin:..." or file paths
    io::json options = io::json::object();
};

// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 inconsistency trap.
enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kTrap = 3 };

// Builds the report for verify, invariants, classify-map, f-frobenius and nat.
// ParseError and std::invalid_argument propagate (usage errors, no report).
io::json run_command(const Invocation& inv);
int exit_code(const io::json& report);

// Key over the canonicalized inputs (file references inlined, builtin
// descriptors canonicalized), command, options and version.
std::string cache_key(const Invocation& inv);

std::string render(const io::json& report, const std::string& format);

// `builtin` output: the standard spec document of the generated object.
io::json builtin_document(const std::string& name, const std::vector<std::string>& params);

}  // namespace hopfkit::cli
