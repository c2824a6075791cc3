#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pisano/period.hpp"

using namespace pisano;

namespace {

// Reference profile: record every state in a map until one repeats, then
// read period, preperiod and the zeros of the cycle straight off the list.
PisanoProfile reference_profile(i64 a, i64 b, u64 m) {
    if (m == 1) return {1, 1, 1, 0, 0};
    const u64 ar = reduce(a, m), br = reduce(b, m);
    std::map<std::pair<u64, u64>, u64> seen;
    std::vector<u64> terms;
    u64 x = 0, y = 1;
    while (!seen.contains({x, y})) {
        seen[{x, y}] = terms.size();
        terms.push_back(x);
        const u64 z = (ar * y + br * x) % m;
        x = y;
        y = z;
    }
    const u64 start = seen[{x, y}];
    PisanoProfile r;
    r.preperiod = start;
    r.period = terms.size() - start;
    r.order = 0;
    r.rank.reset();
    r.residue.reset();
    // zeros of the cycle, indexed from 1 upward when purely periodic
    for (u64 i = start; i < terms.size(); ++i)
        if (terms[i] == 0) ++r.order;
    for (u64 i = 1; i <= terms.size() + r.period; ++i) {
        const u64 t = i < terms.size() ? terms[i] : terms[start + (i - start) % r.period];
        if (t == 0) {
            r.rank = i;
            break;
        }
    }
    if (r.order == 0) r.rank.reset();
    if (start == 0 && r.rank) {
        const u64 j = *r.rank + 1;
        r.residue = j < terms.size() ? terms[j] : terms[j % r.period];
    }
    return r;
}

}  // namespace

TEST_CASE("oracle examples") {
    CHECK(profile_oracle({1, 1}, 10).period == 60);
    const PisanoProfile five = profile_oracle({1, 1}, 5);
    CHECK(five == PisanoProfile{20, 5, 4, 3, 0});
    const PisanoProfile line = profile_oracle({2, -1}, 7);
    CHECK(line.order == 1);
    CHECK(line.period == 7);
    CHECK(profile_oracle({1, 1}, 1) == unit_modulus_profile());
    CHECK(unit_modulus_profile() == PisanoProfile{1, 1, 1, 0, 0});
    const PisanoProfile p34 = profile_oracle({3, 4}, 8);
    CHECK(p34.order <= 2);
    CHECK(p34 == reference_profile(3, 4, 8));
}

TEST_CASE("oracle matches the map-based reference for general (a, b)") {
    for (i64 a = -6; a <= 6; ++a)
        for (i64 b = -6; b <= 6; ++b)
            for (u64 m = 1; m <= 60; ++m) {
                INFO("a=" << a << " b=" << b << " m=" << m);
                REQUIRE(profile_oracle({a, b}, m) == reference_profile(a, b, m));
            }
}

TEST_CASE("profile invariants") {
    for (i64 a = -5; a <= 5; ++a)
        for (i64 b = -5; b <= 5; ++b)
            for (u64 m = 2; m <= 120; ++m) {
                const RecurrenceParams p{a, b};
                const PisanoProfile r = profile_oracle(p, m);
                INFO(to_string(p) << " m=" << m);
                if (r.purely_periodic() && r.order >= 1) {
                    REQUIRE(r.period == *r.rank * r.order);
                    REQUIRE(std::gcd(*r.residue, m) == 1);
                    // zeros of one period sit exactly at multiples of the rank
                    for (u64 n = 1; n <= r.period; ++n)
                        REQUIRE((term_mod(p, n, m) == 0) == (n % *r.rank == 0));
                }
                if (r.order == 0) {
                    REQUIRE_FALSE(r.rank.has_value());
                    REQUIRE_FALSE(r.residue.has_value());
                }
                if (b == 1) {
                    REQUIRE(r.preperiod == 0);
                    REQUIRE((r.order == 1 || r.order == 2 || r.order == 4));
                }
            }
}

TEST_CASE("fast route examples") {
    CHECK(profile_fast({1, 1}, 10).period == 60);
    CHECK(profile_fast({1, 1}, 2).period == 3);
    for (i64 k = 1; k <= 19; k += 2) {
        const PisanoProfile r = profile_fast(RecurrenceParams::k_fibonacci(k), 16);
        CHECK(r.period == 24);
        CHECK(*r.rank == 12);
        CHECK(r.order == 2);
    }
    CHECK(profile_fast({1, 1}, 1000) == profile_oracle({1, 1}, 1000));
    CHECK_THROWS_AS(profile_fast({1, 2}, 10), std::domain_error);
}

TEST_CASE("fast route equals the oracle") {
    ProfileCache cache;
    for (i64 k = -3; k <= 8; ++k) {
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        for (u64 m = 1; m <= 1500; ++m) {
            INFO("K=" << k << " m=" << m);
            REQUIRE(profile_fast(p, m, &cache) == profile_oracle(p, m));
        }
    }
    // prime powers and large prime factors
    for (u64 m : {u64{3} * 3 * 3 * 3 * 3 * 3 * 3, u64{7} * 7 * 7 * 7, u64{2} << 14, u64{99991}, u64{65537} * 2})
        for (i64 k = 1; k <= 4; ++k)
            REQUIRE(profile_fast(RecurrenceParams::k_fibonacci(k), m) ==
                    profile_oracle(RecurrenceParams::k_fibonacci(k), m));
}

TEST_CASE("rank of a prime") {
    CHECK(rank_of_prime(1, 2) == 3);
    CHECK(rank_of_prime(1, 5) == 5);
    CHECK(rank_of_prime(1, 7) == 8);
    CHECK(rank_of_prime(1, 19) == 18);
    CHECK(rank_of_prime(2, 2) == 2);
    for (i64 k = 1; k <= 6; ++k)
        for (u64 p : {3, 5, 7, 11, 13, 17, 29, 101, 997})
            REQUIRE(rank_of_prime(k, p) == *profile_oracle(RecurrenceParams::k_fibonacci(k), p).rank);
}

TEST_CASE("powers of two: closed form") {
    CHECK(powers_of_two_profile(2, 4).period == 16);
    CHECK(powers_of_two_profile(8, 3).period == 2);
    CHECK(powers_of_two_profile(4, 3).period == 4);
    const PisanoProfile seven = powers_of_two_profile(7, 3);
    CHECK(seven.period == 12);
    CHECK(*seven.rank == 6);
    CHECK(seven.order == 2);
    for (i64 k = 1; k <= 40; ++k)
        for (unsigned x = 1; x <= 14; ++x) {
            INFO("K=" << k << " x=" << x);
            REQUIRE(powers_of_two_profile(k, x) == profile_oracle(RecurrenceParams::k_fibonacci(k), u64{1} << x));
        }
}

TEST_CASE("residue") {
    CHECK(residue_of({1, 1}, 5) == 3);
    CHECK(residue_of({1, 1}, 2) == 1);
    CHECK(residue_of({1, 1}, 4) == 1);
    for (i64 k = 1; k <= 8; ++k)
        for (u64 m = 2; m <= 400; ++m) {
            const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
            const u64 beta = residue_of(p, m);
            REQUIRE(mult_order_naive(static_cast<i64>(beta), m) == profile_oracle(p, m).order);
        }
}

TEST_CASE("Wall-Sun-Sun") {
    CHECK_FALSE(is_wall_sun_sun(1, 2));
    // compare the periods directly for K = 2
    for (u64 p : {2, 3, 5, 7, 11, 13, 29, 31}) {
        const RecurrenceParams pell{2, 1};
        const bool expected = profile_oracle(pell, p).period == profile_oracle(pell, p * p).period;
        CHECK(is_wall_sun_sun(2, p) == expected);
    }
    CHECK(is_wall_sun_sun(2, 13) == (profile_oracle({2, 1}, 13).period == profile_oracle({2, 1}, 169).period));
    CHECK_THROWS_AS(is_wall_sun_sun(1, 46349), std::range_error);
    CHECK_THROWS_AS(is_wall_sun_sun(1, 15), std::domain_error);
}

TEST_CASE("negative index symmetry") {
    for (u64 n = 0; n <= 60; ++n) CHECK(negative_index_check({1, 1}, 10, n));
    CHECK(term_mod({1, 1}, 53, 10) == term_mod({1, 1}, 7, 10));
    for (u64 n = 0; n <= profile_oracle({3, 1}, 7).period; ++n) CHECK(negative_index_check({3, 1}, 7, n));
}

TEST_CASE("period is even above 2 and divides along divisors") {
    for (i64 k = 1; k <= 5; ++k) {
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        std::vector<PisanoProfile> prof(601);
        for (u64 m = 1; m <= 600; ++m) prof[m] = profile_oracle(p, m);
        for (u64 m = 3; m <= 600; ++m) REQUIRE(prof[m].period % 2 == 0);
        for (u64 m = 1; m <= 600; ++m)
            for (u64 n = 2 * m; n <= 600; n += m) {
                REQUIRE(*prof[n].rank % *prof[m].rank == 0);
                REQUIRE(prof[n].period % prof[m].period == 0);
            }
    }
}
