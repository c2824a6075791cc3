#include "pisano/lab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "pisano/period.hpp"

namespace pisano {

namespace {

std::string pair_inputs(const RecurrenceParams& p, u64 m) {
    return to_string(p) + " m=" + std::to_string(m);
}

std::vector<u64> walked_orders(const RecurrenceParams& p, u64 lo, u64 hi, unsigned jobs) {
    return detail::parallel_map(lo, hi, jobs, [&](u64 m) { return profile_oracle(p, m).order; });
}

// Scans one parameter pair over [lo, hi] and reports orders outside `allowed`.
void check_range(SweepReport& report, const RecurrenceParams& p, u64 lo, u64 hi, const OrderSet& allowed,
                 unsigned jobs) {
    if (hi < lo) return;
    const auto orders = walked_orders(p, lo, hi, jobs);
    for (u64 m = lo; m <= hi; ++m) {
        const u64 w = orders[m - lo];
        if (!allowed.contains(w)) report.fail({pair_inputs(p, m), to_string(allowed), std::to_string(w), m});
    }
}

}  // namespace

bool is_degenerate(const RecurrenceParams& p) {
    if (p.b == -1) return p.a >= -2 && p.a <= 2;
    return p == RecurrenceParams{0, 1} || p == RecurrenceParams{1, 0} || p == RecurrenceParams{-1, 0};
}

OrderClass degenerate_case_table(const RecurrenceParams& p, u64 m) {
    if (!is_degenerate(p)) throw std::domain_error("degenerate_case_table: " + to_string(p) + " is not degenerate");
    if (m < 2) throw std::domain_error("degenerate_case_table: modulus must be at least 2");
    if (p.b == -1) {
        switch (p.a) {
            case 1:   // 0, 1, 1, 0, -1, -1
            case 0:   // 0, 1, 0, -1
                return {m == 2 ? u64{1} : u64{2}};
            case -1:  // 0, 1, -1
            case 2:   // 0, 1, 2, 3, ...
                return {1};
            case -2:  // F_n = (-1)^{n+1} n returns to (0, 1) at n = m only for even m
                return {m % 2 == 0 ? u64{1} : u64{2}};
        }
    }
    if (p.a == 0) return {1};  // 0, 1, 0, 1
    // (1, 0): 0, 1, 1, 1, ...   (-1, 0): 0, 1, -1, 1, -1, ...
    return {0};
}

SweepReport order_census(const RecurrenceParams& p, u64 m_max, unsigned jobs) {
    if (m_max > kMaxCensusModulus) throw std::domain_error("order_census: m_max exceeds 20000");
    SweepReport report("order-census", 2, m_max);
    report.param("a", p.a).param("b", p.b);
    if (m_max >= 2) {
        const auto orders = walked_orders(p, 2, m_max, jobs);
        for (u64 m = 2; m <= m_max; ++m) report.observe(orders[m - 2], m);
    }
    report.mark_census();
    return report;
}

SweepReport order_zero_observation(const RecurrenceParams& p, u64 m_max, unsigned jobs) {
    SweepReport report("order-zero-iff-shared-factor", 2, m_max);
    report.param("a", p.a).param("b", p.b);
    if (m_max < 2) return report;
    const auto orders = walked_orders(p, 2, m_max, jobs);
    const u64 abs_a = static_cast<u64>(p.a < 0 ? -p.a : p.a);
    const u64 abs_b = static_cast<u64>(p.b < 0 ? -p.b : p.b);
    for (u64 m = 2; m <= m_max; ++m) {
        const bool shared = std::gcd(m, abs_a) > 1 || std::gcd(m, abs_b) > 1;
        const bool zero = orders[m - 2] == 0;
        if (shared != zero)
            report.fail({pair_inputs(p, m), shared ? "order 0" : "order > 0", std::to_string(orders[m - 2]), m});
    }
    return report;
}

SweepReport verify_negativemult(i64 a_max, u64 m_max, unsigned jobs) {
    SweepReport report("negativemult", 2, m_max);
    report.param("a_max", a_max).param("b", -1);
    std::vector<i64> as;
    for (i64 a = 3; a <= a_max; ++a) {
        as.push_back(-a);
        as.push_back(a);
    }
    std::sort(as.begin(), as.end());
    if (m_max < 2) return report;
    for (i64 a : as) {
        const RecurrenceParams p{a, -1};
        std::vector<u64> needed;
        for (u64 m = 2; m <= m_max; ++m)
            for (u64 n = m; n <= m_max; ++n) needed.push_back(std::lcm(m, n));
        std::sort(needed.begin(), needed.end());
        needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
        const auto orders = detail::parallel_map(0, needed.size() - 1, jobs,
                                                 [&](u64 i) { return profile_oracle(p, needed[i]).order; });
        std::unordered_map<u64, u64> order;
        for (std::size_t i = 0; i < needed.size(); ++i) order.emplace(needed[i], orders[i]);

        for (u64 m = 2; m <= m_max; ++m) {
            const u64 wm = order.at(m);
            if (wm != 1 && wm != 2) {
                report.fail({pair_inputs(p, m), "{1,2}", std::to_string(wm), m});
                continue;
            }
            for (u64 n = m; n <= m_max; ++n) {
                const u64 wn = order.at(n);
                if (wn != 1 && wn != 2) continue;  // reported when m reaches n
                const u64 want = (wm == 1 && wn == 1) ? 1 : 2;
                const u64 got = order.at(std::lcm(m, n));
                if (got != want)
                    report.fail({to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                                 std::to_string(want), std::to_string(got), m});
            }
        }
    }
    return report;
}

FiniteOrdersCase parse_finite_orders_case(std::string_view s) {
    if (s == "i") return FiniteOrdersCase::i;
    if (s == "ii") return FiniteOrdersCase::ii;
    if (s == "iii") return FiniteOrdersCase::iii;
    if (s == "iv") return FiniteOrdersCase::iv;
    if (s == "v") return FiniteOrdersCase::v;
    throw std::invalid_argument("unknown finite-orders case: " + std::string(s));
}

std::string to_string(FiniteOrdersCase c) {
    switch (c) {
        case FiniteOrdersCase::i: return "i";
        case FiniteOrdersCase::ii: return "ii";
        case FiniteOrdersCase::iii: return "iii";
        case FiniteOrdersCase::iv: return "iv";
        case FiniteOrdersCase::v: return "v";
    }
    return "unknown";
}

SweepReport verify_finite_orders_conjecture(FiniteOrdersCase c, FiniteOrdersBounds bounds, unsigned jobs) {
    SweepReport report("finite-orders-" + to_string(c), 2, bounds.m_max);
    report.param("a_max", bounds.a_max);
    const u64 m_max = bounds.m_max;
    const std::vector<RecurrenceParams> single{{0, 1}, {1, 0}, {-1, -1}, {2, -1}, {-2, -1}};
    const std::vector<RecurrenceParams> split{{-1, 0}, {1, -1}, {0, -1}};

    switch (c) {
        case FiniteOrdersCase::i:
            for (const auto& p : single) check_range(report, p, 2, m_max, {1}, jobs);
            if (m_max >= 2)
                for (const auto& p : split) check_range(report, p, 2, 2, {1}, jobs);
            break;
        case FiniteOrdersCase::ii:
            for (const auto& p : split) check_range(report, p, 3, m_max, {2}, jobs);
            break;
        case FiniteOrdersCase::iii:
            for (i64 a = -bounds.a_max; a <= bounds.a_max; ++a)
                if (a != 0) check_range(report, {a, 1}, 2, m_max, {1, 2, 4}, jobs);
            break;
        case FiniteOrdersCase::iv:
            for (i64 a = -bounds.a_max; a <= bounds.a_max; ++a)
                if (a < -2 || a > 2) check_range(report, {a, -1}, 2, m_max, {1, 2}, jobs);
            break;
        case FiniteOrdersCase::v:
            // |a| - |b| = 1 with b != +-1, |a| <= a_max
            for (i64 abs_b = 0; abs_b + 1 <= bounds.a_max; ++abs_b) {
                if (abs_b == 1) continue;
                for (i64 sa : {-1, 1})
                    for (i64 sb : {-1, 1}) {
                        if (abs_b == 0 && sb == -1) continue;
                        check_range(report, {sa * (abs_b + 1), sb * abs_b}, 2, m_max, {0, 1, 2}, jobs);
                    }
            }
            break;
    }
    return report;
}

SweepReport verify_even_k_exceptions(i64 k_max, u64 m_max, unsigned jobs) {
    SweepReport report("even-k-exceptions", 4, m_max);
    report.param("k_max", k_max);
    for (i64 k = 2; k <= k_max; k += 2) {
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        if (m_max < 4) break;
        const auto profiles = detail::parallel_map(4, m_max, jobs, [&](u64 m) { return profile_oracle(p, m); });
        for (u64 m = 4; m <= m_max; ++m) {
            const PisanoProfile& prof = profiles[m - 4];
            const u64 w = prof.order, rank = *prof.rank, period = prof.period;
            const std::string in = "K=" + std::to_string(k) + " m=" + std::to_string(m);
            const bool rank_pm1 = rank % 2 == 1;
            if ((w == 4) != rank_pm1)
                report.fail({in + " clause=four-iff-rank-odd", "order 4 iff rank = +-1 mod 4",
                             "order " + std::to_string(w) + ", rank " + std::to_string(rank), m});
            if (w == 2 && !(period % 4 == 0 && rank % 2 == 0))
                report.fail({in + " clause=two-implies", "4 | period and 2 | rank",
                             "period " + std::to_string(period) + ", rank " + std::to_string(rank), m});
            if (period % 4 != 0 && w != 1)
                report.fail({in + " clause=period-implies-one", "1", std::to_string(w), m});
            if (m % 4 == 0 && period % 4 == 0 && rank % 2 == 0) report.observe(w, m);
        }
    }
    // The converse of the second clause fails for the Pell sequence at m = 8.
    if (k_max >= 2 && m_max >= 8) {
        const PisanoProfile pell8 = profile_oracle({2, 1}, 8);
        if (!(pell8.order == 1 && pell8.period == 8 && pell8.rank == u64{8}))
            report.fail({"K=2 m=8 witness", "order 1, period = rank = 8",
                         "order " + std::to_string(pell8.order) + ", period " + std::to_string(pell8.period), 8});
    }
    return report;
}

SweepReport williams_check(u64 p_max) {
    SweepReport report("williams", 3, p_max);
    report.param("k", 1);
    const RecurrenceParams fib{1, 1};
    for (u64 p = 3; p <= p_max; p += 2) {
        if (!is_prime(p)) continue;
        const int symbol = legendre(5, p);
        const u64 index = symbol >= 0 ? p - static_cast<u64>(symbol) : p + 1;
        const u64 r = term_mod(fib, index, p);
        if (r != 0)
            report.fail({"p=" + std::to_string(p) + " index=" + std::to_string(index), "0", std::to_string(r), p});
    }
    return report;
}

std::vector<u64> carmichael_exceptions(u64 n_max) {
    if (n_max > kMaxCarmichaelIndex) throw std::domain_error("carmichael: n_max exceeds 90");
    const RecurrenceParams fib{1, 1};
    std::vector<u64> out;
    u64 prev = 0, cur = 1;  // F_{n-1}, F_n
    for (u64 n = 1; n <= n_max; ++n) {
        if (n > 1) {
            const u64 next = prev + cur;
            prev = cur;
            cur = next;
        }
        bool primitive = false;
        if (cur > 1) {
            for (const auto& [p, e] : factorize(cur).factors) {
                bool earlier = false;
                for (u64 k = 1; k < n && !earlier; ++k) earlier = term_mod(fib, k, p) == 0;
                if (!earlier) {
                    primitive = true;
                    break;
                }
            }
        }
        if (!primitive) out.push_back(n);
    }
    return out;
}

SweepReport carmichael_check(u64 n_max) {
    SweepReport report("carmichael", 1, n_max);
    report.param("k", 1);
    const std::vector<u64> known{1, 2, 6, 12};
    const auto found = carmichael_exceptions(n_max);
    for (u64 n = 1; n <= n_max; ++n) {
        const bool expected_missing = std::find(known.begin(), known.end(), n) != known.end();
        const bool missing = std::find(found.begin(), found.end(), n) != found.end();
        if (expected_missing != missing)
            report.fail({"n=" + std::to_string(n), expected_missing ? "no primitive divisor" : "primitive divisor",
                         missing ? "none" : "found", n});
    }
    return report;
}

std::vector<u64> wall_sun_sun_primes(i64 k, u64 p_max) {
    if (p_max > 46340) throw std::range_error("wall_sun_sun_primes: p_max^2 exceeds 2^31 - 1");
    std::vector<u64> out;
    for (u64 p = 2; p <= p_max; ++p)
        if (is_prime(p) && is_wall_sun_sun(k, p)) out.push_back(p);
    return out;
}

}  // namespace pisano
