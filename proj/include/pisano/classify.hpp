#pragma once

// Order of a modulus from its prime factors, the omega(lcm[m, n]) tables,
// the rank <-> order correspondence for odd primes, and the OEIS splits.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pisano/arith.hpp"
#include "pisano/report.hpp"

namespace pisano {

/// Zero count of a period. 1, 2, 4 for b = 1; 0 encodes a zero-free cycle;
/// anything else only arises for general (a, b).
struct OrderClass {
    u64 value = 1;

    bool is_other() const { return value != 0 && value != 1 && value != 2 && value != 4; }
    bool operator==(const OrderClass&) const = default;
    auto operator<=>(const OrderClass&) const = default;
};

std::string to_string(OrderClass c);

/// Set-valued table cell, sorted ascending.
struct OrderSet {
    std::vector<u64> values;

    OrderSet() = default;
    OrderSet(std::initializer_list<u64> v);

    bool contains(u64 v) const;
    bool single_valued() const { return values.size() == 1; }
    bool operator==(const OrderSet&) const = default;
};

std::string to_string(const OrderSet& s);

/// Raised for inputs outside the range a classification theorem covers.
class UnsupportedCase : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Order of m for the K-Fibonacci sequence without walking the sequence
/// mod m: each odd prime is placed by its rank mod 4, powers of two by their
/// fixed pattern, and the pieces are folded with the lcm table.
/// Even K is supported for odd m only.
OrderClass classify_by_factors(u64 m, i64 k);

/// Table cell for omega(lcm[m, n]) given omega(m), omega(n).
/// `even_k_table` selects the set-valued table used for even K when m or n
/// is even.
OrderSet lcm_table_cell(u64 omega_m, u64 omega_n, bool m_is_two, bool n_is_two, bool even_k_table);

/// Predicted omega_K(lcm[m, n]) from the orders of m and n.
OrderSet omega_lcm_table(i64 k, u64 m, u64 n);

struct RankOrder {
    u64 rank_mod4 = 0;
    OrderClass order;
    bool consistent = false;  // 4 <-> rank odd, 2 <-> 0 mod 4, 1 <-> 2 mod 4
};

/// Rank mod 4 and order of an odd prime, both from the cycle walk.
RankOrder rank_order_correspondence(u64 p, i64 k);

enum class OeisId { A053029, A053030, A053031 };

/// Throws std::invalid_argument for anything but the three ids.
OeisId parse_oeis_id(std::string_view id);
std::string to_string(OeisId id);
u64 order_of(OeisId id);

inline constexpr u64 kMaxOeisBound = 1'000'000;

/// All m <= max with omega(m) = 4, 2, 1 (classic Fibonacci), ascending.
std::vector<u64> oeis_sequence(OeisId id, u64 max);

/// Classic-Fibonacci orders for 1..max by the factor route (index 0 unused).
std::vector<u64> orders_by_factors(u64 max);

/// Checks the factor-closure characterizations of order-4 and order-1
/// moduli against walked orders for every m <= max.
SweepReport verify_oeis_conjectures(u64 max, unsigned jobs = 0);

}  // namespace pisano
