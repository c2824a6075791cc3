#pragma once

// Recurrence engine for F_0 = 0, F_1 = 1, F_n = a F_{n-1} + b F_{n-2} modulo m.

#include <cstdint>
#include <string>

#include "pisano/arith.hpp"

namespace pisano {

/// Coefficients of the recurrence, kept in signed form. Reduction into
/// [0, m) happens at each use site.
struct RecurrenceParams {
    i64 a = 1;
    i64 b = 1;

    static constexpr RecurrenceParams k_fibonacci(i64 k) { return {k, 1}; }
    constexpr bool is_k_fibonacci() const { return b == 1; }

    bool operator==(const RecurrenceParams&) const = default;
    auto operator<=>(const RecurrenceParams&) const = default;
};

std::string to_string(const RecurrenceParams& p);

/// Two consecutive terms (F_n, F_{n+1}), both in [0, m).
struct PairState {
    u64 u = 0;
    u64 v = 1;

    bool operator==(const PairState&) const = default;
};

/// 2x2 matrix of residues, row-major.
struct Mat2 {
    u64 a00 = 1, a01 = 0, a10 = 0, a11 = 1;

    bool operator==(const Mat2&) const = default;
    static constexpr Mat2 identity() { return {}; }
};

Mat2 mul(const Mat2& x, const Mat2& y, u64 m);

/// Companion matrix [[a, b], [1, 0]] raised to n, modulo m.
/// Its power is [[F_{n+1}, b F_n], [F_n, b F_{n-1}]].
Mat2 companion_power(const RecurrenceParams& p, u64 n, u64 m);

/// U(K)^n = [[F_{K,n+1}, F_{K,n}], [F_{K,n}, F_{K,n-1}]] mod m. n = 0 gives I.
Mat2 matrix_power(i64 k, u64 n, u64 m);

/// F_n mod m. Uses square-and-multiply on the companion matrix.
u64 term_mod(const RecurrenceParams& p, u64 n, u64 m);

/// F_n mod m by stepping the recurrence n times.
u64 term_mod_iterative(const RecurrenceParams& p, u64 n, u64 m);

/// K-Lucas term L_{K,n} mod m (L_0 = 2, L_1 = K). Requires b = 1.
u64 lucas_term_mod(const RecurrenceParams& p, u64 n, u64 m);

/// Coefficients reduced into [0, m), ready for the hot stepping loop.
struct ReducedParams {
    u64 a;
    u64 b;
    u64 m;

    ReducedParams(const RecurrenceParams& p, u64 modulus);

    PairState step(PairState s) const { return {s.v, (a * s.v + b * s.u) % m}; }
};

/// (u, v) -> (v, a v + b u) mod m. Requires m <= 2^31 - 1.
PairState step(const RecurrenceParams& p, PairState s, u64 m);

inline constexpr u64 kMaxWalkModulus = (u64{1} << 31) - 1;

}  // namespace pisano
