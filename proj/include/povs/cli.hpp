#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "povs/formula.hpp"

namespace povs {

enum class OutputFormat { Text, Json };

struct CommandRequest {
    std::string command;
    TheoryMode theory = TheoryMode::POVS;
    int model_dim = 3;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::uint64_t> seed;
    int count = 100;
    std::optional<unsigned> precision;
    bool verbose = false;
    std::string input;
    std::optional<std::string> var; // decompose / measure / small / code-set / generic
    std::optional<std::string> x, y; // code-fn
    std::vector<std::string> assign; // NAME=VALUE
};

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Exit codes: 0 success, 2 input (parse, sort, mode), 3 precondition,
// 4 internal invariant.
CommandResult run(const CommandRequest& req);

// Parses a full argument vector (without the program name) and runs it.
// The formula is read from `in` when no positional formula is given.
CommandResult run_cli(const std::vector<std::string>& args, std::istream& in);

} // namespace povs
