#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drf/error.hpp"

namespace drf {

// Arithmetic for F_q, q = p^e.  Elements are integer indices in [0, q)
// encoding the coefficient vector base p, constant coefficient least
// significant.  Index 0 is the additive identity, index 1 the
// multiplicative identity.
//
// For e > 1 the field is F_p[x]/(modulus) where modulus is the
// lexicographically smallest monic irreducible polynomial of degree e
// (candidate tuples compared from the highest coefficient down to the
// constant one).  Multiplication goes through log/antilog tables built
// once at construction; the table builder itself uses schoolbook
// polynomial multiplication with reduction.
//
// A FieldSpec is immutable after field_make and safe to share across
// threads; all operations are pure.
class FieldSpec {
public:
    uint32_t p = 0;
    int e = 0;
    uint32_t q = 0;
    std::vector<uint32_t> modulus; // e+1 coefficients, constant first; empty when e == 1

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // division_by_zero for a == 0
    uint32_t pow(uint32_t a, unsigned long long n) const;

    // Schoolbook multiplication (no tables); the reference path the table
    // builder and the unit tests rely on.
    uint32_t mul_slow(uint32_t a, uint32_t b) const;

    bool operator==(const FieldSpec& o) const {
        return p == o.p && e == o.e && q == o.q && modulus == o.modulus;
    }

private:
    friend FieldSpec field_make(uint64_t q);
    std::vector<uint32_t> log_, exp_; // built for q <= 2^16
};

// Builds the FieldSpec for F_q.  Throws not_prime_power when q is not a
// prime power, invalid_parameter when q > 2^20.
FieldSpec field_make(uint64_t q);

// (p, e) with q = p^e, p prime — or nullopt.  Deterministic trial division.
std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t q);

uint64_t prev_prime_power(uint64_t q); // largest prime power <= q
uint64_t next_prime_power(uint64_t q); // smallest prime power >= q

} // namespace drf
