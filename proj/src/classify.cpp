#include "pisano/classify.hpp"

#include <algorithm>
#include <sstream>

#include "parallel.hpp"
#include "pisano/period.hpp"
#include "pisano/seq.hpp"

namespace pisano {

namespace {

u64 odd_prime_class(u64 rank) {
    switch (rank % 4) {
        case 0: return 2;
        case 2: return 1;
        default: return 4;
    }
}

// Odd K only; even K never reaches here with p = 2.
u64 power_of_two_class(unsigned e) { return e <= 2 ? 1 : 2; }

struct Piece {
    u64 modulus;
    u64 order;
};

// Folds pairwise-coprime prime-power pieces with the single-valued table.
u64 fold_pieces(const std::vector<Piece>& pieces) {
    u64 acc_mod = 1, acc = 1;
    for (const auto& [q, c] : pieces) {
        if (acc_mod == 1) {
            acc = c;
        } else {
            acc = lcm_table_cell(acc, c, acc_mod == 2, q == 2, false).values.front();
        }
        acc_mod *= q;
    }
    return acc;
}

std::vector<u64> divisors_of(u64 n) { return divisors(factorize(n)); }

std::string inputs_for(u64 m) { return "m=" + std::to_string(m); }

}  // namespace

std::string to_string(OrderClass c) { return std::to_string(c.value); }

OrderSet::OrderSet(std::initializer_list<u64> v) : values(v) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

bool OrderSet::contains(u64 v) const { return std::binary_search(values.begin(), values.end(), v); }

std::string to_string(const OrderSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.values[i]);
    }
    return out + "}";
}

OrderClass classify_by_factors(u64 m, i64 k) {
    if (m == 0) throw std::domain_error("classify_by_factors: modulus must be positive");
    const bool even_k = k % 2 == 0;
    if (even_k && m % 2 == 0)
        throw UnsupportedCase("classify_by_factors: even K is classified for odd moduli only");
    if (m == 1) return {1};
    std::vector<Piece> pieces;
    for (const auto& [p, e] : factorize(m).factors) {
        const u64 q = Factorization{{{p, e}}}.value();
        if (p == 2)
            pieces.push_back({q, power_of_two_class(e)});
        else
            pieces.push_back({q, odd_prime_class(rank_of_prime(k, p))});
    }
    return {fold_pieces(pieces)};
}

OrderSet lcm_table_cell(u64 wm, u64 wn, bool m_is_two, bool n_is_two, bool even_k_table) {
    if (wm == wn) return {wm};
    if (even_k_table) {
        if (wm == 1 || wn == 1) return {1, 2};
        return {2};
    }
    if (wm == 2 || wn == 2) return {2};
    // one side is 1, the other 4
    if (wm == 1) return {m_is_two ? u64{4} : u64{2}};
    return {n_is_two ? u64{4} : u64{2}};
}

OrderSet omega_lcm_table(i64 k, u64 m, u64 n) {
    if (m == 0 || n == 0) throw std::domain_error("omega_lcm_table: arguments must be positive");
    const RecurrenceParams params = RecurrenceParams::k_fibonacci(k);
    const u64 wm = profile_fast(params, m).order;
    const u64 wn = profile_fast(params, n).order;
    if (m == 1) return {wn};
    if (n == 1) return {wm};
    const bool even_table = k % 2 == 0 && (m % 2 == 0 || n % 2 == 0);
    return lcm_table_cell(wm, wn, m == 2, n == 2, even_table);
}

RankOrder rank_order_correspondence(u64 p, i64 k) {
    if (p == 2) throw std::domain_error("rank_order_correspondence: p must be an odd prime");
    if (!is_prime(p)) throw std::domain_error("rank_order_correspondence: p must be prime");
    const PisanoProfile prof = profile_oracle(RecurrenceParams::k_fibonacci(k), p);
    RankOrder out;
    out.rank_mod4 = *prof.rank % 4;
    out.order = {prof.order};
    out.consistent = odd_prime_class(*prof.rank) == prof.order;
    return out;
}

OeisId parse_oeis_id(std::string_view id) {
    if (id == "A053029") return OeisId::A053029;
    if (id == "A053030") return OeisId::A053030;
    if (id == "A053031") return OeisId::A053031;
    throw std::invalid_argument("unknown OEIS id: " + std::string(id));
}

std::string to_string(OeisId id) {
    switch (id) {
        case OeisId::A053029: return "A053029";
        case OeisId::A053030: return "A053030";
        case OeisId::A053031: return "A053031";
    }
    return "unknown";
}

u64 order_of(OeisId id) {
    switch (id) {
        case OeisId::A053029: return 4;
        case OeisId::A053030: return 2;
        case OeisId::A053031: return 1;
    }
    return 0;
}

std::vector<u64> orders_by_factors(u64 max) {
    std::vector<u64> spf(max + 1, 0);
    for (u64 i = 2; i <= max; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= max; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    std::vector<u64> prime_class(max + 1, 0);
    std::vector<u64> orders(max + 1, 0);
    if (max >= 1) orders[1] = 1;
    std::vector<Piece> pieces;
    for (u64 m = 2; m <= max; ++m) {
        pieces.clear();
        u64 rest = m;
        while (rest > 1) {
            const u64 p = spf[rest];
            u64 q = 1;
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                q *= p;
                ++e;
            }
            if (p == 2) {
                pieces.push_back({q, power_of_two_class(e)});
            } else {
                if (prime_class[p] == 0) prime_class[p] = odd_prime_class(rank_of_prime(1, p));
                pieces.push_back({q, prime_class[p]});
            }
        }
        orders[m] = fold_pieces(pieces);
    }
    return orders;
}

std::vector<u64> oeis_sequence(OeisId id, u64 max) {
    if (max > kMaxOeisBound) throw std::domain_error("oeis_sequence: max exceeds 10^6");
    const u64 want = order_of(id);
    const auto orders = orders_by_factors(max);
    std::vector<u64> out;
    for (u64 m = 1; m <= max; ++m)
        if (orders[m] == want) out.push_back(m);
    return out;
}

SweepReport verify_oeis_conjectures(u64 max, unsigned jobs) {
    SweepReport report("oeis-conjectures", 1, max);
    report.param("k", 1);
    if (max < 1) return report;
    const RecurrenceParams fib{1, 1};
    const auto walked = detail::parallel_map(1, max, jobs, [&](u64 m) { return profile_oracle(fib, m).order; });
    auto order = [&](u64 m) { return walked[m - 1]; };

    auto all_have = [&](u64 n, u64 w, bool proper_only) {
        for (u64 d : divisors_of(n)) {
            if (d == 1 || (proper_only && d == n)) continue;
            if (order(d) != w) return false;
        }
        return true;
    };

    for (u64 m = 1; m <= max; ++m) {
        const u64 w = order(m);
        const unsigned j = nu2(m);
        const u64 n = m >> j;
        const bool odd_composite = j == 0 && n > 1 && !is_prime(n);
        auto fail = [&](const std::string& rule, const std::string& expected) {
            report.fail({inputs_for(m) + " rule=" + rule, expected, std::to_string(w), m});
        };

        if (w != 1 && w != 2 && w != 4) fail("order-range", "{1,2,4}");

        // order 4: odd composite with order-4 proper factors, or twice an odd number > 1 whose factors are all order 4
        if (odd_composite && all_have(n, 4, true) && w != 4) fail("four-sufficient", "4");
        if (j == 1 && n > 1 && all_have(n, 4, false) && w != 4) fail("four-sufficient-double", "4");
        if (w == 4 && !(j <= 1 && n > 1 && all_have(n, 4, false))) fail("four-necessary", "odd part with order-4 factors, j<=1");

        // order 1: same shape with up to four times
        if (odd_composite && all_have(n, 1, true) && w != 1) fail("one-sufficient", "1");
        if ((j == 1 || j == 2) && all_have(n, 1, false) && w != 1) fail("one-sufficient-multiple", "1");
        if (w == 1 && !(j <= 2 && all_have(n, 1, false))) fail("one-necessary", "odd part with order-1 factors, j<=2");
    }
    return report;
}

}  // namespace pisano
