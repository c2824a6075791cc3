#pragma once

// Verification and census harness. Every sweep returns a SweepReport that
// records the exact window it scanned; a pass is a statement about that
// window only.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pisano/arith.hpp"
#include "pisano/classify.hpp"
#include "pisano/report.hpp"
#include "pisano/seq.hpp"

namespace pisano {

// ---- degenerate recurrences and general (a, b) -------------------------

/// The eight pairs whose sequences are trivially cyclic or linear:
/// (a, -1) for a in {-2, -1, 0, 1, 2}, and (0, 1), (1, 0), (-1, 0).
bool is_degenerate(const RecurrenceParams& p);

/// Closed-form order of a degenerate recurrence modulo m >= 2.
/// Throws std::domain_error for a non-degenerate pair.
OrderClass degenerate_case_table(const RecurrenceParams& p, u64 m);

inline constexpr u64 kMaxCensusModulus = 20'000;

/// Distinct orders over 2 <= m <= m_max, each with first witness and count.
SweepReport order_census(const RecurrenceParams& p, u64 m_max, unsigned jobs = 0);

/// Compares "order 0" with "gcd(m, a) > 1 or gcd(m, b) > 1" for each m.
SweepReport order_zero_observation(const RecurrenceParams& p, u64 m_max, unsigned jobs = 0);

/// lcm table for b = -1: omega(lcm) = 1 iff both orders are 1, else 2.
/// Scans 3 <= |a| <= a_max and 2 <= m <= n <= m_max.
SweepReport verify_negativemult(i64 a_max, u64 m_max, unsigned jobs = 0);

enum class FiniteOrdersCase { i, ii, iii, iv, v };

/// Accepts "i".."v"; throws std::invalid_argument otherwise.
FiniteOrdersCase parse_finite_orders_case(std::string_view s);
std::string to_string(FiniteOrdersCase c);

struct FiniteOrdersBounds {
    i64 a_max = 5;
    u64 m_max = 500;
};

/// Checks one clause of the conjectured range of omega_(a,b)(m).
SweepReport verify_finite_orders_conjecture(FiniteOrdersCase c, FiniteOrdersBounds bounds, unsigned jobs = 0);

/// Even-K clauses over 4 <= m <= m_max, including multiples of 4. The census
/// tabulates the orders seen where 4 | m, 4 | period and 2 | rank.
SweepReport verify_even_k_exceptions(i64 k_max, u64 m_max, unsigned jobs = 0);

// ---- classic-Fibonacci theorems ----------------------------------------

/// p | F_{p - (5/p)} for odd primes p <= p_max.
SweepReport williams_check(u64 p_max);

inline constexpr u64 kMaxCarmichaelIndex = 90;

/// Indices n in [1, n_max] where F_n has no primitive prime divisor.
std::vector<u64> carmichael_exceptions(u64 n_max);

/// Primitive divisors exist exactly for n not in {1, 2, 6, 12}.
SweepReport carmichael_check(u64 n_max);

/// Primes p <= p_max with pi_K(p) == pi_K(p^2).
std::vector<u64> wall_sun_sun_primes(i64 k, u64 p_max);

// ---- K-Fibonacci suites ------------------------------------------------

/// classify_by_factors against walked orders. Odd K: 1 <= m <= m_max;
/// even K: odd m only.
SweepReport verify_main_theorem(std::span<const i64> ks, u64 m_max, unsigned jobs = 0);

/// omega_lcm_table contains the actual omega(lcm[m, n]) for
/// 2 <= m <= n <= max and 1 <= K <= k_max.
SweepReport verify_lcm_tables(u64 max, i64 k_max, unsigned jobs = 0);

/// Recurrence identities and period structure over K in [1, k_max] and
/// moduli up to m_max (smaller caps apply to the per-index checks).
SweepReport verify_identities(u64 m_max, i64 k_max, unsigned jobs = 0);

/// rank_order_correspondence for odd primes p <= p_max, 1 <= K <= k_max.
SweepReport verify_wyler(u64 p_max, i64 k_max);

/// powers_of_two_profile against the walk for 1 <= K <= k_max, 1 <= x <= x_max.
SweepReport verify_powers_of_two(i64 k_max, unsigned x_max);

/// profile_fast against profile_oracle for 1 <= K <= k_max, 1 <= m <= m_max.
SweepReport verify_oracle_equivalence(u64 m_max, i64 k_max, unsigned jobs = 0);

}  // namespace pisano
