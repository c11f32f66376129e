#pragma once

// Small popen wrapper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace shelfplan::testing {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// runs a shell command, capturing stdout (plus stderr when merge_stderr)
inline CommandResult run_command(const std::string& command, bool merge_stderr = false) {
    const std::string full = command + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + full);

    CommandResult result;
    std::array<char, 4096> chunk{};
    std::size_t got = 0;
    while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
        result.output.append(chunk.data(), got);

    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string cli_path() {
#ifdef SHELFPLAN_CLI_PATH
    return SHELFPLAN_CLI_PATH;
#else
    return "./shelfplan";
#endif
}

}  // namespace shelfplan::testing
