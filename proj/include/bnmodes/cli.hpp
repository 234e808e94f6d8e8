#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bnmodes::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kUsage = 2 };

struct CommandRequest {
    std::string subcommand;  // table | step | graph | attractors | reach | compare | check
    std::string model_path;
    std::vector<std::string> modes;
    std::string from;
    std::string to;
    std::string format = "text";
    std::vector<std::string> phi;
    bool no_loops = false;
    bool fail_on_no = false;
    std::uint64_t seed = 1;
};

// Splits a --modes value on commas outside braces, gluing bare numbers back
// onto the preceding mode ("seq:3,1,2,async" -> {"seq:3,1,2", "async"}).
std::vector<std::string> split_modes(const std::string& text);

// Runs a parsed request; throws bnmodes::Error on bad input.
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

// Full entry point: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bnmodes::cli
