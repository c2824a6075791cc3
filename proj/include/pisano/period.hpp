#pragma once

// Period, rank, order and residue of a recurrence modulo m.
//
// Two independent routes compute the same profile:
//  * profile_oracle walks pair states from (0, 1) until the cycle closes.
//  * profile_fast factors m, finds the rank of each prime from a known
//    multiple of it, lifts to prime powers, and combines with lcm.
// The rest of the library treats the oracle as ground truth.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "pisano/arith.hpp"
#include "pisano/seq.hpp"

namespace pisano {

struct PisanoProfile {
    u64 period = 1;
    std::optional<u64> rank = 1;     // absent only for a zero-free cycle
    u64 order = 1;                   // zeros per period; 0 for a zero-free cycle
    std::optional<u64> residue = 0;  // absent unless purely periodic
    u64 preperiod = 0;

    bool purely_periodic() const { return preperiod == 0; }
    bool operator==(const PisanoProfile&) const = default;
};

/// Profile for m = 1: period 1, rank 1, order 1, residue 0.
PisanoProfile unit_modulus_profile();

/// Brute-force cycle walk. Any (a, b), 1 <= m <= 2^31 - 1.
PisanoProfile profile_oracle(const RecurrenceParams& p, u64 m);

/// Rank of apparition of a prime, found by descending from p - (D/p)
/// (or p when p | D) where D = K^2 + 4.
u64 rank_of_prime(i64 k, u64 p);

/// Memo of per-prime-power (rank, period) pairs. Not thread-safe; keep one
/// per worker.
class ProfileCache {
public:
    std::pair<u64, u64> prime_power(i64 k, u64 p, unsigned e);

private:
    std::map<std::tuple<i64, u64, unsigned>, std::pair<u64, u64>> entries_;
};

/// Factor-lift-combine route. Requires b = 1, m >= 1.
PisanoProfile profile_fast(const RecurrenceParams& p, u64 m, ProfileCache* cache = nullptr);

/// Closed form for modulus 2^x, 1 <= x <= 62.
PisanoProfile powers_of_two_profile(i64 k, unsigned x);

/// F_{K, rank + 1} mod m. Requires m >= 2.
u64 residue_of(const RecurrenceParams& p, u64 m);

/// pi_K(p) == pi_K(p^2). p must be prime with p^2 <= 2^31 - 1.
bool is_wall_sun_sun(i64 k, u64 p);

/// Checks F_{pi - n} == (-1)^{n+1} F_n (mod m) for 0 <= n <= pi.
bool negative_index_check(const RecurrenceParams& p, u64 m, u64 n);

}  // namespace pisano
