#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pisano/arith.hpp"

using namespace pisano;

namespace {

bool naive_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorize small values") {
    CHECK(factorize(144) == Factorization{{{2, 4}, {3, 2}}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(610) == Factorization{{{2, 1}, {5, 1}, {61, 1}}});
    CHECK(factorize(2) == Factorization{{{2, 1}}});
}

TEST_CASE("factorize round-trips every n up to 10^6") {
    for (u64 n = 1; n <= 1'000'000; ++n) {
        const Factorization f = factorize(n);
        u64 prev = 0;
        for (const auto& [p, e] : f.factors) {
            REQUIRE(p > prev);
            REQUIRE(e >= 1);
            prev = p;
        }
        REQUIRE(f.value() == n);
    }
}

TEST_CASE("factorize beyond trial division") {
    const u64 p = 1'000'003, q = 998'244'353;
    CHECK(factorize(p * q) == Factorization{{{p, 1}, {q, 1}}});
    CHECK(factorize(kMaxFactorInput).value() == kMaxFactorInput);
    const u64 big_prime = 9'223'372'036'854'775'783ULL;  // largest prime below 2^63
    CHECK(is_prime(big_prime));
    CHECK(factorize(big_prime) == Factorization{{{big_prime, 1}}});
    const u64 sq = u64{4'294'967'291} * 2'147'483'647;
    for (const auto& [prime, e] : factorize(sq).factors) CHECK(is_prime(prime));
    CHECK(factorize(sq).value() == sq);
}

TEST_CASE("is_prime agrees with trial division") {
    for (u64 n = 0; n <= 20'000; ++n) REQUIRE(is_prime(n) == naive_prime(n));
    CHECK_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3'825'123'056'546'413'051ULL));
}

TEST_CASE("lcm_list") {
    const std::vector<u64> a{6, 20};
    CHECK(lcm_list(a) == 60);
    const std::vector<u64> single{17};
    CHECK(lcm_list(single) == 17);
    const std::vector<u64> b{3, 8};
    CHECK(lcm_list(b) == 24);
    CHECK(lcm_list({}) == 1);
    const std::vector<u64> huge{u64{1} << 63, 3};
    CHECK_THROWS_AS(lcm_list(huge), std::range_error);
}

TEST_CASE("lcm times gcd is the product") {
    for (u64 a = 1; a <= 1000; ++a)
        for (u64 b = 1; b <= 1000; ++b) REQUIRE(checked_lcm(a, b) * std::gcd(a, b) == a * b);
}

TEST_CASE("nu2") {
    CHECK(nu2(8) == 3);
    CHECK(nu2(12) == 2);
    CHECK(nu2(std::gcd(u64{8}, u64{4})) == 2);
    CHECK(nu2(1) == 0);
    for (unsigned x = 0; x <= 40; ++x)
        for (u64 odd : {1, 3, 5, 77, 1001}) REQUIRE(nu2((u64{1} << x) * odd) == x);
}

TEST_CASE("legendre") {
    CHECK(legendre(5, 11) == 1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(5, 13) == -1);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK_THROWS_AS(legendre(3, 2), std::domain_error);
    CHECK_THROWS_AS(legendre(3, 15), std::domain_error);
}

TEST_CASE("legendre matches Euler's criterion") {
    for (u64 p = 3; p <= 1000; p += 2) {
        if (!naive_prime(p)) continue;
        for (u64 a = 1; a < p; ++a) {
            const u64 e = powmod(a, (p - 1) / 2, p);
            const int expected = e == 1 ? 1 : -1;
            REQUIRE(e == (expected == 1 ? 1 : p - 1));
            REQUIRE(legendre(static_cast<i64>(a), p) == expected);
        }
    }
}

TEST_CASE("mult_order") {
    for (u64 m = 3; m <= 50; ++m) CHECK(mult_order(-1, m) == 2);
    CHECK(mult_order(1, 9) == 1);
    CHECK(mult_order(3, 10) == 4);
    CHECK(mult_order(-1, 2) == 1);
    CHECK_THROWS_AS(mult_order(4, 10), std::domain_error);
    CHECK_THROWS_AS(mult_order(2, 1), std::domain_error);
}

TEST_CASE("mult_order: both routes agree and divide the totient") {
    for (u64 m = 2; m <= 500; ++m) {
        u64 phi = 0;
        for (u64 r = 1; r <= m; ++r) phi += std::gcd(r, m) == 1;
        REQUIRE(totient(m) == phi);
        for (i64 a = -7; a < static_cast<i64>(m); ++a) {
            if (std::gcd(reduce(a, m), m) != 1) continue;
            const u64 w = mult_order(a, m);
            REQUIRE(w == mult_order_naive(a, m));
            REQUIRE(phi % w == 0);
        }
    }
}

TEST_CASE("reduce maps signed values into [0, m)") {
    CHECK(reduce(-1, 7) == 6);
    CHECK(reduce(-14, 7) == 0);
    CHECK(reduce(15, 7) == 1);
    CHECK(reduce(INT64_MIN, 3) == 1);  // -2^63 = -3 * 3074457345618258603 + 1
}

TEST_CASE("divisors") {
    CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factorize(1)) == std::vector<u64>{1});
}
