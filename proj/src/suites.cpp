#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "pisano/lab.hpp"
#include "pisano/period.hpp"

namespace pisano {

namespace {

std::string km(i64 k, u64 m) { return "K=" + std::to_string(k) + " m=" + std::to_string(m); }

std::string describe(const PisanoProfile& p) {
    auto opt = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string("-"); };
    return "period=" + std::to_string(p.period) + " rank=" + opt(p.rank) + " order=" + std::to_string(p.order) +
           " residue=" + opt(p.residue) + " preperiod=" + std::to_string(p.preperiod);
}

std::vector<PisanoProfile> oracle_profiles(i64 k, u64 m_max, unsigned jobs) {
    const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
    return detail::parallel_map(1, m_max, jobs, [&](u64 m) { return profile_oracle(p, m); });
}

}  // namespace

SweepReport verify_main_theorem(std::span<const i64> ks, u64 m_max, unsigned jobs) {
    SweepReport report("main-theorem", 1, m_max);
    for (i64 k : ks) report.param("k", k);
    for (i64 k : ks) {
        const bool even_k = k % 2 == 0;
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        const auto results = detail::parallel_map(1, m_max, jobs, [&](u64 m) -> std::pair<u64, u64> {
            if (even_k && m % 2 == 0) return {0, 0};
            return {classify_by_factors(m, k).value, profile_oracle(p, m).order};
        });
        for (u64 m = 1; m <= m_max; ++m) {
            const auto [predicted, walked] = results[m - 1];
            if (predicted != walked)
                report.fail({km(k, m), std::to_string(walked), std::to_string(predicted), m});
        }
    }
    return report;
}

SweepReport verify_lcm_tables(u64 max, i64 k_max, unsigned jobs) {
    SweepReport report("lcm-tables", 2, max);
    report.param("k_max", k_max);
    const auto per_k = detail::parallel_map(1, static_cast<u64>(std::max<i64>(k_max, 0)), jobs, [&](u64 ku) {
        const i64 k = static_cast<i64>(ku);
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        std::vector<Counterexample> bad;
        if (max < 2) return bad;
        const auto prof = oracle_profiles(k, max, 1);
        ProfileCache cache;
        for (u64 m = 2; m <= max; ++m) {
            for (u64 n = m; n <= max; ++n) {
                const bool even_table = k % 2 == 0 && (m % 2 == 0 || n % 2 == 0);
                const OrderSet predicted =
                    lcm_table_cell(prof[m - 1].order, prof[n - 1].order, m == 2, n == 2, even_table);
                const u64 actual = profile_fast(p, std::lcm(m, n), &cache).order;
                if (!predicted.contains(actual))
                    bad.push_back({"K=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                                   to_string(predicted), std::to_string(actual), m});
            }
        }
        return bad;
    });
    for (const auto& bad : per_k)
        for (const auto& c : bad) report.fail(c);
    return report;
}

SweepReport verify_identities(u64 m_max, i64 k_max, unsigned jobs) {
    SweepReport report("identities", 1, m_max);
    report.param("k_max", k_max);
    constexpr u64 kIdentityModulus = 1'000'000;
    constexpr u64 kIndexMax = 200;
    const u64 small_max = std::min<u64>(m_max, 300);
    const u64 criterion_max = std::min<u64>(m_max, 500);
    const u64 divisibility_max = std::min<u64>(m_max, 2000);

    for (i64 k = 1; k <= k_max; ++k) {
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        const u64 big = kIdentityModulus;
        auto tag = [&](const char* name, const std::string& rest) { return std::string("identity=") + name + " " + rest; };
        const std::string kk = "K=" + std::to_string(k) + " ";

        for (u64 n = 1; n <= kIndexMax; ++n) {
            const u64 f_prev = term_mod(p, n - 1, big), f = term_mod(p, n, big), f_next = term_mod(p, n + 1, big);
            const u64 lhs = (mulmod(f, f, big) + big - mulmod(f_next, f_prev, big)) % big;
            const u64 rhs = n % 2 == 1 ? 1 : big - 1;
            if (lhs != rhs)
                report.fail({tag("log-fibonacci", kk + "n=" + std::to_string(n)), std::to_string(rhs), std::to_string(lhs), n});
            const u64 lucas = lucas_term_mod(p, n, big);
            if (lucas != (f_next + f_prev) % big)
                report.fail({tag("lucas-sum", kk + "n=" + std::to_string(n)), std::to_string((f_next + f_prev) % big),
                             std::to_string(lucas), n});
            const u64 doubled = term_mod(p, 2 * n, big);
            if (doubled != mulmod(f, lucas, big))
                report.fail({tag("doubling", kk + "n=" + std::to_string(n)), std::to_string(mulmod(f, lucas, big)),
                             std::to_string(doubled), n});
        }

        const auto prof = oracle_profiles(k, m_max, jobs);
        for (u64 m = 1; m <= m_max; ++m) {
            const PisanoProfile& pr = prof[m - 1];
            const u64 rank = *pr.rank, period = pr.period, w = pr.order;
            if (pr.preperiod != 0 || !(w == 1 || w == 2 || w == 4))
                report.fail({tag("order-range", km(k, m)), "purely periodic, order in {1,2,4}", describe(pr), m});
            if (period != rank * w)
                report.fail({tag("period-product", km(k, m)), std::to_string(rank * w), std::to_string(period), m});
            if (m > 2 && period % 2 != 0)
                report.fail({tag("period-even", km(k, m)), "even", std::to_string(period), m});
            // rests on the period being even, so same scope
            if (m > 2 && rank % 2 == 1 && w % 2 != 0)
                report.fail({tag("odd-rank-even-order", km(k, m)), "even order", std::to_string(w), m});
            if (m >= 2) {
                const u64 beta = *pr.residue;
                if (std::gcd(beta, m) != 1) {
                    report.fail({tag("residue-coprime", km(k, m)), "gcd 1", std::to_string(beta), m});
                } else if (mult_order(static_cast<i64>(beta), m) != w) {
                    report.fail({tag("residue-order", km(k, m)), std::to_string(w),
                                 std::to_string(mult_order(static_cast<i64>(beta), m)), m});
                }
            }
            if (m >= 2 && m <= small_max) {
                // F_{pi - n} = (-1)^{n+1} F_n
                for (u64 n = 0; n <= period; ++n) {
                    const u64 fn = term_mod(p, n, m);
                    const u64 expected = n % 2 == 1 ? fn : (m - fn) % m;
                    if (term_mod(p, period - n, m) != expected) {
                        report.fail({tag("negative-index", km(k, m) + " n=" + std::to_string(n)), "holds", "fails", m});
                        break;
                    }
                }
                const u64 beta = *pr.residue;
                for (u64 n = rank; n <= rank + 2 * period; ++n) {
                    const u64 lhs = term_mod(p, n, m);
                    const u64 rhs = mulmod(beta, term_mod(p, n - rank, m), m);
                    if (lhs != rhs) {
                        report.fail({tag("residue-stepping", km(k, m) + " n=" + std::to_string(n)),
                                     std::to_string(rhs), std::to_string(lhs), m});
                        break;
                    }
                }
            }
            if (m >= 2 && m <= criterion_max) {
                for (u64 n = 1; n <= 3 * period; ++n) {
                    const bool zero = term_mod(p, n, m) == 0;
                    if (zero != (n % rank == 0)) {
                        report.fail({tag("rank-criterion", km(k, m) + " n=" + std::to_string(n)),
                                     n % rank == 0 ? "zero" : "nonzero", zero ? "zero" : "nonzero", m});
                        break;
                    }
                }
            }
        }
        for (u64 m = 1; m <= divisibility_max; ++m) {
            for (u64 n = 2 * m; n <= divisibility_max; n += m) {
                const PisanoProfile &a = prof[m - 1], &b = prof[n - 1];
                if (*b.rank % *a.rank != 0 || b.period % a.period != 0)
                    report.fail({tag("divisibility", kk + "m=" + std::to_string(m) + " n=" + std::to_string(n)),
                                 "rank and period divide", describe(a) + " vs " + describe(b), m});
            }
        }

        for (u64 q = 3; q <= 200; q += 2) {
            if (!is_prime(q)) continue;
            const u64 base = profile_fast(p, q).order;
            u64 pe = q;
            for (unsigned e = 2; e <= 3; ++e) {
                pe *= q;
                const u64 w = profile_fast(p, pe).order;
                if (w != base)
                    report.fail({tag("prime-power-order", kk + "p=" + std::to_string(q) + " e=" + std::to_string(e)),
                                 std::to_string(base), std::to_string(w), q});
            }
        }
    }

    // omega | 2 ord_m(-b) for general (a, b) with gcd(b, m) = 1
    const u64 general_max = std::min<u64>(m_max, 500);
    for (i64 a = -5; a <= 5; ++a) {
        for (i64 b = -5; b <= 5; ++b) {
            const RecurrenceParams p{a, b};
            const auto orders = detail::parallel_map(2, std::max<u64>(general_max, 2), jobs, [&](u64 m) -> u64 {
                if (m > general_max || std::gcd(reduce(b, m), m) != 1) return 0;
                return profile_oracle(p, m).order;
            });
            for (u64 m = 2; m <= general_max; ++m) {
                if (std::gcd(reduce(b, m), m) != 1) continue;
                const u64 bound = 2 * mult_order(-b, m);
                const u64 w = orders[m - 2];
                if (w == 0 || bound % w != 0)
                    report.fail({"identity=ab-order " + to_string(p) + " m=" + std::to_string(m),
                                 "divides " + std::to_string(bound), std::to_string(w), m});
            }
        }
    }
    return report;
}

SweepReport verify_wyler(u64 p_max, i64 k_max) {
    SweepReport report("wyler", 3, p_max);
    report.param("k_max", k_max);
    for (i64 k = 1; k <= k_max; ++k) {
        for (u64 p = 3; p <= p_max; p += 2) {
            if (!is_prime(p)) continue;
            const RankOrder ro = rank_order_correspondence(p, k);
            if (!ro.consistent)
                report.fail({"K=" + std::to_string(k) + " p=" + std::to_string(p),
                             "order matching rank mod 4",
                             "rank mod 4 = " + std::to_string(ro.rank_mod4) + ", order " + to_string(ro.order), p});
        }
    }
    return report;
}

SweepReport verify_powers_of_two(i64 k_max, unsigned x_max) {
    if (x_max > 24) throw std::domain_error("verify_powers_of_two: x_max exceeds 24");
    SweepReport report("powers-of-two", 2, u64{1} << x_max);
    report.param("k_max", k_max).param("x_max", x_max);
    for (i64 k = 1; k <= k_max; ++k) {
        for (unsigned x = 1; x <= x_max; ++x) {
            const PisanoProfile closed = powers_of_two_profile(k, x);
            const PisanoProfile walked = profile_oracle(RecurrenceParams::k_fibonacci(k), u64{1} << x);
            if (!(closed == walked))
                report.fail({"K=" + std::to_string(k) + " x=" + std::to_string(x), describe(walked), describe(closed),
                             u64{1} << x});
        }
    }
    return report;
}

SweepReport verify_oracle_equivalence(u64 m_max, i64 k_max, unsigned jobs) {
    SweepReport report("oracle-equivalence", 1, m_max);
    report.param("k_max", k_max);
    for (i64 k = 1; k <= k_max; ++k) {
        const RecurrenceParams p = RecurrenceParams::k_fibonacci(k);
        const auto pairs = detail::parallel_map(1, m_max, jobs, [&](u64 m) {
            return std::make_pair(profile_oracle(p, m), profile_fast(p, m));
        });
        for (u64 m = 1; m <= m_max; ++m) {
            const auto& [walked, fast] = pairs[m - 1];
            if (!(walked == fast)) report.fail({km(k, m), describe(walked), describe(fast), m});
        }
    }
    return report;
}

}  // namespace pisano
