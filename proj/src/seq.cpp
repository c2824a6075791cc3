#include "pisano/seq.hpp"

#include <stdexcept>

namespace pisano {

namespace {

void require_modulus(u64 m) {
    if (m == 0) throw std::domain_error("modulus must be positive");
}

u64 addmod(u64 x, u64 y, u64 m) {
    const u64 s = x + y;
    return (s >= m || s < x) ? s - m : s;
}

}  // namespace

std::string to_string(const RecurrenceParams& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

Mat2 mul(const Mat2& x, const Mat2& y, u64 m) {
    return {
        addmod(mulmod(x.a00, y.a00, m), mulmod(x.a01, y.a10, m), m),
        addmod(mulmod(x.a00, y.a01, m), mulmod(x.a01, y.a11, m), m),
        addmod(mulmod(x.a10, y.a00, m), mulmod(x.a11, y.a10, m), m),
        addmod(mulmod(x.a10, y.a01, m), mulmod(x.a11, y.a11, m), m),
    };
}

Mat2 companion_power(const RecurrenceParams& p, u64 n, u64 m) {
    require_modulus(m);
    Mat2 base{reduce(p.a, m), reduce(p.b, m), 1 % m, 0};
    Mat2 result{1 % m, 0, 0, 1 % m};
    while (n != 0) {
        if (n & 1) result = mul(result, base, m);
        base = mul(base, base, m);
        n >>= 1;
    }
    return result;
}

Mat2 matrix_power(i64 k, u64 n, u64 m) {
    return companion_power(RecurrenceParams::k_fibonacci(k), n, m);
}

u64 term_mod(const RecurrenceParams& p, u64 n, u64 m) {
    return companion_power(p, n, m).a10;
}

u64 term_mod_iterative(const RecurrenceParams& p, u64 n, u64 m) {
    require_modulus(m);
    const u64 a = reduce(p.a, m), b = reduce(p.b, m);
    u64 u = 0, v = 1 % m;
    for (u64 i = 0; i < n; ++i) {
        const u64 next = addmod(mulmod(a, v, m), mulmod(b, u, m), m);
        u = v;
        v = next;
    }
    return u;
}

u64 lucas_term_mod(const RecurrenceParams& p, u64 n, u64 m) {
    if (!p.is_k_fibonacci()) throw std::domain_error("lucas_term_mod: requires b = 1");
    require_modulus(m);
    // (L_{n+1}, L_n) = U^n (L_1, L_0)
    const Mat2 u = companion_power(p, n, m);
    return addmod(mulmod(u.a10, reduce(p.a, m), m), mulmod(u.a11, 2 % m, m), m);
}

ReducedParams::ReducedParams(const RecurrenceParams& p, u64 modulus)
    : a(0), b(0), m(modulus) {
    require_modulus(m);
    if (m > kMaxWalkModulus) throw std::range_error("modulus exceeds 2^31 - 1");
    a = reduce(p.a, m);
    b = reduce(p.b, m);
}

PairState step(const RecurrenceParams& p, PairState s, u64 m) {
    return ReducedParams(p, m).step(s);
}

}  // namespace pisano
