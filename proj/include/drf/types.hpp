#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drf/error.hpp"

namespace drf {

// Exact small rational, used for distances delta, densities eps and the
// CFF alphabet multiplier.  Kept as given (not reduced); comparisons
// cross-multiply so normalization is never needed.
struct Frac {
    long long num = 0;
    long long den = 1;

    double value() const { return double(num) / double(den); }
    bool operator==(const Frac&) const = default;
};

Frac parse_frac(const std::string& text); // "A/B" or "A"
std::string to_string(const Frac& f);

// a/b <= c/d for positive denominators
inline bool frac_le(long long a, long long b, long long c, long long d) {
    return static_cast<__int128>(a) * d <= static_cast<__int128>(c) * b;
}
inline bool frac_lt(long long a, long long b, long long c, long long d) {
    return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

// Dense row-major matrix of element indices / symbols.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Matrix&) const = default;
};

// Verification work meter.  Verifiers charge one unit per constraint/row
// check and halt with budget_exceeded instead of sampling.
struct ConstraintBudget {
    unsigned long long max_checks = 10'000'000ULL;
    unsigned long long used = 0;

    explicit ConstraintBudget(unsigned long long cap = 10'000'000ULL) : max_checks(cap) {}

    void charge(unsigned long long k = 1) {
        used += k;
        if (used > max_checks)
            fail(errc::budget_exceeded,
                 "verification budget of " + std::to_string(max_checks) + " checks exhausted");
    }
};

// Outcome of an exhaustive property check.  On failure `witness` holds the
// lexicographically smallest violating constraint (0-based indices).
struct Verdict {
    bool ok = true;
    std::string witness;
    unsigned long long checks = 0;
};

} // namespace drf
