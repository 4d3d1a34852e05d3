#include "drf/field.hpp"

#include <algorithm>
#include <string>

namespace drf {

namespace {

constexpr uint64_t kMaxFieldOrder = 1ULL << 20;
constexpr uint32_t kMaxTableOrder = 1u << 16;

using Poly = std::vector<uint32_t>; // coefficients over F_p, constant first

// remainder of a mod b over F_p; b need not be monic
Poly poly_rem(Poly a, const Poly& b, uint32_t p) {
    const int db = static_cast<int>(b.size()) - 1;
    uint32_t lead = b[db];
    // inverse of the leading coefficient mod p by Fermat
    uint64_t li = 1, base = lead, ex = p - 2;
    while (ex) {
        if (ex & 1) li = li * base % p;
        base = base * base % p;
        ex >>= 1;
    }
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        uint64_t f = a[i] * li % p;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = f * b[j] % p;
            a[i - db + j] = static_cast<uint32_t>((a[i - db + j] + p - sub) % p);
        }
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool is_zero_poly(const Poly& a) { return a.size() == 1 && a[0] == 0; }

// trial division by every monic polynomial of degree 1..e/2
bool is_irreducible(const Poly& f, uint32_t p) {
    const int e = static_cast<int>(f.size()) - 1;
    for (int dg = 1; 2 * dg <= e; ++dg) {
        uint64_t count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(dg + 1, 0);
            uint64_t t = idx;
            for (int i = 0; i < dg; ++i) {
                g[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (is_zero_poly(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

std::vector<uint32_t> index_to_digits(uint32_t idx, uint32_t p, int e) {
    std::vector<uint32_t> d(e, 0);
    for (int i = 0; i < e; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

uint32_t digits_to_index(const std::vector<uint32_t>& d, uint32_t p) {
    uint64_t idx = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
    return static_cast<uint32_t>(idx);
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t q) {
    if (q < 2) return std::nullopt;
    uint64_t p = q;
    for (uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    uint64_t rest = q;
    int e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
}

uint64_t prev_prime_power(uint64_t q) {
    for (uint64_t x = q; x >= 2; --x)
        if (is_prime_power(x)) return x;
    fail(errc::invalid_parameter, "prev_prime_power(): no prime power <= " + std::to_string(q));
}

uint64_t next_prime_power(uint64_t q) {
    for (uint64_t x = std::max<uint64_t>(q, 2);; ++x)
        if (is_prime_power(x)) return x;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (e == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    uint32_t r = 0, mul = 1;
    for (int i = 0; i < e; ++i) {
        r += (a % p + b % p) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (e == 1) return (p - a) % p;
    if (p == 2) return a;
    uint32_t r = 0, mul = 1;
    for (int i = 0; i < e; ++i) {
        r += (p - a % p) % p * mul;
        a /= p;
        mul *= p;
    }
    return r;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
    if (e == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    auto da = index_to_digits(a, p, e);
    auto db = index_to_digits(b, p, e);
    std::vector<uint32_t> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p);
    }
    // reduce by the monic modulus
    for (int i = 2 * e - 2; i >= e; --i) {
        uint32_t c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j < e; ++j) {
            uint64_t sub = static_cast<uint64_t>(c) * modulus[j] % p;
            prod[i - e + j] = static_cast<uint32_t>((prod[i - e + j] + p - sub) % p);
        }
        prod[i] = 0;
    }
    prod.resize(e);
    return digits_to_index(prod, p);
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty())
        return exp_[(static_cast<uint64_t>(log_[a]) + log_[b]) % (q - 1)];
    return mul_slow(a, b);
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inv(0) in GF(" + std::to_string(q) + ")");
    if (!exp_.empty()) return exp_[(q - 1 - log_[a]) % (q - 1)];
    return pow(a, q - 2);
}

uint32_t FieldSpec::pow(uint32_t a, unsigned long long n) const {
    uint32_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FieldSpec field_make(uint64_t q) {
    if (q > kMaxFieldOrder)
        fail(errc::invalid_parameter, "field_make(): q > 2^20 unsupported");
    auto pe = is_prime_power(q);
    if (!pe)
        fail(errc::not_prime_power, "field_make(): " + std::to_string(q) + " is not a prime power");

    FieldSpec f;
    f.p = static_cast<uint32_t>(pe->first);
    f.e = pe->second;
    f.q = static_cast<uint32_t>(q);

    if (f.e > 1) {
        // scan monic degree-e candidates; the low-coefficient tuple is read
        // most-significant-first so the first hit is the lexicographically
        // smallest modulus
        uint64_t count = 1;
        for (int i = 0; i < f.e; ++i) count *= f.p;
        bool found = false;
        for (uint64_t idx = 0; idx < count && !found; ++idx) {
            Poly cand(f.e + 1, 0);
            uint64_t t = idx;
            for (int i = 0; i < f.e; ++i) { // digits from constant upward
                cand[f.e - 1 - i] = static_cast<uint32_t>(t % f.p);
                t /= f.p;
            }
            cand[f.e] = 1;
            if (is_irreducible(cand, f.p)) {
                f.modulus.assign(cand.begin(), cand.end());
                found = true;
            }
        }
        if (!found)
            fail(errc::invalid_parameter, "field_make(): no irreducible modulus found"); // unreachable
    }

    if (q <= kMaxTableOrder && q > 2) {
        // smallest generator of the multiplicative group
        auto facs = prime_factors(q - 1);
        uint32_t gen = 0;
        for (uint32_t g = 2; g < q && gen == 0; ++g) {
            bool ok = true;
            for (uint64_t fac : facs) {
                // g^((q-1)/fac) via slow square-and-multiply
                uint32_t r = 1, base = g;
                uint64_t ex = (q - 1) / fac;
                while (ex) {
                    if (ex & 1) r = f.mul_slow(r, base);
                    base = f.mul_slow(base, base);
                    ex >>= 1;
                }
                if (r == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) gen = g;
        }
        f.exp_.resize(q - 1);
        f.log_.assign(q, 0);
        uint32_t cur = 1;
        for (uint32_t i = 0; i + 1 < q; ++i) {
            f.exp_[i] = cur;
            f.log_[cur] = i;
            cur = f.mul_slow(cur, gen);
        }
    } else if (q == 2) {
        f.exp_ = {1};
        f.log_ = {0, 0};
    }
    return f;
}

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime_power: return "NotPrimePower";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::regime_violation: return "RegimeViolation";
    case errc::infeasible: return "Infeasible";
    case errc::too_many: return "TooMany";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::alphabet_too_small: return "AlphabetTooSmall";
    case errc::epsilon_infeasible: return "EpsilonInfeasible";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::insufficient_alphabet: return "InsufficientAlphabet";
    case errc::domain_error: return "DomainError";
    case errc::overflow: return "Overflow";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::parse_error: return "ParseError";
    }
    return "Error";
}

} // namespace drf
