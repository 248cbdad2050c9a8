#pragma once

#include <stdexcept>
#include <string>

namespace ising {

// Input text could not be parsed (bad token, bad line, bad header).
class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

// Structurally valid input that violates a contract (range, self-loop,
// duplicate edge, count mismatch, bad spin vector, ...).
class domain_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration (parameters, flags, coefficient rule).
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Problem too large for the requested operation (oracle enumeration guard).
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ising
