#include "pisano/arith.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pisano {

namespace {

constexpr u64 kTrialBound = 1'000'000;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's variant of Pollard-rho. Returns a nontrivial factor of composite n.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0 || n > kMaxFactorInput)
        throw std::domain_error("factorize: input out of range");
    Factorization f;
    for (u64 p = 2; p <= kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (n == 1) return f;
    std::map<u64, unsigned> rest;
    split(n, rest);
    for (const auto& [p, e] : rest) f.factors.push_back({p, e});
    return f;
}

u64 checked_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::domain_error("lcm: zero argument");
    const u64 q = a / std::gcd(a, b);
    if (q > std::numeric_limits<u64>::max() / b) throw std::range_error("lcm: overflow");
    return q * b;
}

u64 lcm_list(std::span<const u64> xs) {
    u64 acc = 1;
    for (u64 x : xs) acc = checked_lcm(acc, x);
    return acc;
}

unsigned nu2(u64 n) {
    if (n == 0) throw std::domain_error("nu2: zero has no 2-adic valuation");
    return static_cast<unsigned>(std::countr_zero(n));
}

int legendre(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: modulus must be an odd prime");
    const u64 r = reduce(a, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 totient(u64 n) {
    u64 phi = n;
    for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
    return phi;
}

u64 mult_order(i64 a, u64 m) {
    if (m < 2) throw std::domain_error("mult_order: modulus must be at least 2");
    const u64 r = reduce(a, m);
    if (std::gcd(r, m) != 1) throw std::domain_error("mult_order: base not coprime to modulus");
    u64 order = totient(m);
    for (const auto& [q, e] : factorize(order).factors) {
        for (unsigned i = 0; i < e && order % q == 0; ++i) {
            if (powmod(r, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

u64 mult_order_naive(i64 a, u64 m) {
    if (m < 2) throw std::domain_error("mult_order: modulus must be at least 2");
    const u64 r = reduce(a, m);
    if (std::gcd(r, m) != 1) throw std::domain_error("mult_order: base not coprime to modulus");
    u64 x = r, t = 1;
    while (x != 1) {
        x = mulmod(x, r, m);
        ++t;
    }
    return t;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t n = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pisano
