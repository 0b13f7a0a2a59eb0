#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace pendrng::testing {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command and captures stdout. stderr is discarded unless the
// command redirects it.
inline CommandResult run_command(const std::string& command)
{
    CommandResult r;
    const bool redirects = command.find("2>") != std::string::npos;
    FILE* pipe = ::popen((redirects ? command : command + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string cli(const std::string& args)
{
    return std::string("'") + PENDRNG_CLI_PATH + "' " + args;
}

} // namespace pendrng::testing
