#pragma once

// Integer utilities: factorization, lcm, 2-adic valuation, Legendre symbol,
// multiplicative order. All moduli are unsigned 64-bit; products go through a
// 128-bit intermediate.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pisano {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

inline constexpr u64 kMaxFactorInput = (u64{1} << 63) - 1;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, primes strictly increasing. Empty for 1.
struct Factorization {
    std::vector<PrimePower> factors;

    u64 value() const;
    bool operator==(const Factorization&) const = default;
};

constexpr u64 mulmod(u64 x, u64 y, u64 m) {
    return static_cast<u64>(static_cast<u128>(x) * y % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Canonical representative of a signed value in [0, m).
constexpr u64 reduce(i64 x, u64 m) {
    if (x >= 0) return static_cast<u64>(x) % m;
    // -(x+1) avoids overflow at INT64_MIN
    const u64 r = (static_cast<u64>(-(x + 1)) % m + 1) % m;
    return r == 0 ? 0 : m - r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial division to 10^6, then Pollard-rho. Requires 1 <= n <= 2^63 - 1.
Factorization factorize(u64 n);

/// Throws std::range_error if the result does not fit in 64 bits.
u64 lcm_list(std::span<const u64> xs);
u64 checked_lcm(u64 a, u64 b);

/// Largest x with 2^x | n. Requires n >= 1.
unsigned nu2(u64 n);

/// Legendre symbol (a/p) for an odd prime p. Throws std::domain_error otherwise.
int legendre(i64 a, u64 p);

u64 totient(u64 n);

/// Least t >= 1 with a^t = 1 (mod m), by descending through the prime
/// factors of the group exponent phi(m). Throws std::domain_error when
/// gcd(a, m) != 1 or m < 2.
u64 mult_order(i64 a, u64 m);

/// Same result by repeated multiplication; O(order) steps.
u64 mult_order_naive(i64 a, u64 m);

/// All divisors of n in ascending order.
std::vector<u64> divisors(const Factorization& f);

}  // namespace pisano
