#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

// Exit-code contract shared by the CLI and the acceptance suite.
enum ExitCode {
    exit_ok = 0,
    exit_mismatch = 2,
    exit_resource = 3,
    exit_inconclusive = 4,
    exit_usage = 64,
};

// A computation would exceed a configured budget (terms, digits, nodes, ...).
class resource_limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generated data contradicts a structural property it was expected to satisfy.
class structure_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace seqlab
