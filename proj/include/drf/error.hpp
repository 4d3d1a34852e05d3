#pragma once

#include <stdexcept>
#include <string>

namespace drf {

// Error categories surfaced by the library.  The CLI maps budget_exceeded
// to exit code 3 and everything else to exit code 2.
enum class errc {
    not_prime_power,
    division_by_zero,
    regime_violation,
    infeasible,
    too_many,
    budget_exceeded,
    alphabet_too_small,
    epsilon_infeasible,
    degree_mismatch,
    insufficient_alphabet,
    domain_error,
    overflow,
    invalid_parameter,
    parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace drf
