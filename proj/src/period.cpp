#include "pisano/period.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pisano {

namespace {

void require_k_fibonacci(const RecurrenceParams& p, const char* what) {
    if (!p.is_k_fibonacci()) throw std::domain_error(std::string(what) + ": requires b = 1");
}

u64 walk_limit(u64 m) { return m * m + m; }

PisanoProfile walk_purely_periodic(const ReducedParams& rp) {
    const u64 limit = walk_limit(rp.m);
    PisanoProfile out;
    out.rank.reset();
    out.order = 0;
    PairState s{0, 1};
    u64 n = 0;
    do {
        if (s.u == 0) {
            ++out.order;
            if (n > 0 && !out.rank) {
                out.rank = n;
                out.residue = s.v;
            }
        }
        s = rp.step(s);
        if (++n > limit) throw std::logic_error("profile_oracle: walk exceeded m^2 + m steps");
    } while (!(s.u == 0 && s.v == 1));
    out.period = n;
    if (!out.rank) {
        // only zero in the block is F_0, so the next one is F_period
        out.rank = n;
        out.residue = 1;
    }
    return out;
}

// Brent's cycle detection; exact pair comparison throughout.
PisanoProfile walk_eventually_periodic(const ReducedParams& rp) {
    const u64 limit = walk_limit(rp.m);
    const PairState start{0, 1};

    u64 power = 1, lambda = 1;
    PairState tortoise = start, hare = rp.step(start);
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = rp.step(hare);
        if (++lambda > limit) throw std::logic_error("profile_oracle: cycle longer than m^2 + m");
    }

    tortoise = hare = start;
    for (u64 i = 0; i < lambda; ++i) hare = rp.step(hare);
    u64 mu = 0;
    while (!(tortoise == hare)) {
        tortoise = rp.step(tortoise);
        hare = rp.step(hare);
        if (++mu > limit) throw std::logic_error("profile_oracle: preperiod longer than m^2 + m");
    }

    PisanoProfile out;
    out.period = lambda;
    out.preperiod = mu;
    out.order = 0;
    out.rank.reset();
    out.residue.reset();

    std::optional<u64> first_zero;
    std::optional<u64> next_after_zero;
    PairState s = start;
    for (u64 n = 0; n < mu + lambda; ++n) {
        if (s.u == 0) {
            if (n >= mu) ++out.order;
            if (n > 0 && !first_zero) {
                first_zero = n;
                next_after_zero = s.v;
            }
        }
        s = rp.step(s);
    }
    if (out.order > 0) {
        // s is now the state at index mu + lambda, i.e. the cycle entry again
        if (!first_zero) {
            first_zero = mu + lambda;
            next_after_zero = s.v;
        }
        out.rank = first_zero;
        if (mu == 0) out.residue = next_after_zero;
    }
    return out;
}

std::pair<u64, u64> prime_rank_period(i64 k, u64 p) {
    const RecurrenceParams params = RecurrenceParams::k_fibonacci(k);
    const u64 rank = rank_of_prime(k, p);
    const u64 beta = term_mod(params, rank + 1, p);
    const u64 omega = p == 2 ? 1 : mult_order(static_cast<i64>(beta), p);
    return {rank, rank * omega};
}

std::pair<u64, u64> lift_prime_power(i64 k, u64 p, unsigned e) {
    auto [rank, period] = prime_rank_period(k, p);
    const RecurrenceParams params = RecurrenceParams::k_fibonacci(k);
    u64 q = p;
    for (unsigned level = 2; level <= e; ++level) {
        q *= p;
        if (term_mod(params, rank, q) != 0) rank *= p;
        if (!(matrix_power(k, period, q) == Mat2::identity())) period *= p;
    }
    return {rank, period};
}

}  // namespace

PisanoProfile unit_modulus_profile() { return PisanoProfile{1, 1, 1, 0, 0}; }

PisanoProfile profile_oracle(const RecurrenceParams& p, u64 m) {
    if (m == 0) throw std::domain_error("profile_oracle: modulus must be positive");
    if (m == 1) return unit_modulus_profile();
    const ReducedParams rp(p, m);
    if (std::gcd(rp.b, m) == 1) return walk_purely_periodic(rp);
    return walk_eventually_periodic(rp);
}

u64 rank_of_prime(i64 k, u64 p) {
    if (!is_prime(p)) throw std::domain_error("rank_of_prime: modulus must be prime");
    const RecurrenceParams params = RecurrenceParams::k_fibonacci(k);
    if (p == 2) {
        for (u64 n = 1;; ++n)
            if (term_mod(params, n, 2) == 0) return n;
    }
    const u64 kr = reduce(k, p);
    const u64 disc = (mulmod(kr, kr, p) + 4 % p) % p;
    const u64 multiple = disc == 0 ? p : p - legendre(static_cast<i64>(disc), p);
    u64 rank = multiple;
    for (const auto& [q, e] : factorize(multiple).factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (term_mod(params, rank / q, p) != 0) break;
            rank /= q;
        }
    }
    return rank;
}

std::pair<u64, u64> ProfileCache::prime_power(i64 k, u64 p, unsigned e) {
    const u64 pe = Factorization{{{p, e}}}.value();
    const auto key = std::make_tuple(static_cast<i64>(reduce(k, pe)), p, e);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    const auto value = lift_prime_power(std::get<0>(key), p, e);
    entries_.emplace(key, value);
    return value;
}

PisanoProfile profile_fast(const RecurrenceParams& p, u64 m, ProfileCache* cache) {
    require_k_fibonacci(p, "profile_fast");
    if (m == 0) throw std::domain_error("profile_fast: modulus must be positive");
    if (m == 1) return unit_modulus_profile();
    u64 rank = 1, period = 1;
    for (const auto& [prime, e] : factorize(m).factors) {
        const auto [r, t] = cache ? cache->prime_power(p.a, prime, e) : lift_prime_power(p.a, prime, e);
        rank = checked_lcm(rank, r);
        period = checked_lcm(period, t);
    }
    if (period % rank != 0) throw std::logic_error("profile_fast: rank does not divide period");
    PisanoProfile out;
    out.period = period;
    out.rank = rank;
    out.order = period / rank;
    out.residue = term_mod(p, rank + 1, m);
    out.preperiod = 0;
    return out;
}

PisanoProfile powers_of_two_profile(i64 k, unsigned x) {
    if (x == 0 || x > 62) throw std::domain_error("powers_of_two_profile: exponent must be in [1, 62]");
    const u64 modulus = u64{1} << x;
    PisanoProfile out;
    if (k % 2 == 0) {
        const u64 gcd = std::gcd(modulus, static_cast<u64>(k < 0 ? -k : k));
        const u64 value = u64{1} << (x + 1 - nu2(gcd));
        out.period = value;
        out.rank = value;
        out.order = 1;
    } else {
        // 3, 6, 12, 24, ... for the period; the rank stalls once at 2^3
        out.period = 3 * (u64{1} << (x - 1));
        out.order = x <= 2 ? 1 : 2;
        out.rank = out.period / out.order;
    }
    out.residue = term_mod(RecurrenceParams::k_fibonacci(k), *out.rank + 1, modulus);
    return out;
}

u64 residue_of(const RecurrenceParams& p, u64 m) {
    require_k_fibonacci(p, "residue_of");
    if (m < 2) throw std::domain_error("residue_of: modulus must be at least 2");
    return *profile_fast(p, m).residue;
}

bool is_wall_sun_sun(i64 k, u64 p) {
    if (!is_prime(p)) throw std::domain_error("is_wall_sun_sun: argument must be prime");
    if (p > kMaxWalkModulus / p) throw std::range_error("is_wall_sun_sun: p^2 exceeds 2^31 - 1");
    const u64 period = prime_rank_period(k, p).second;
    return matrix_power(k, period, p * p) == Mat2::identity();
}

bool negative_index_check(const RecurrenceParams& p, u64 m, u64 n) {
    require_k_fibonacci(p, "negative_index_check");
    const u64 period = profile_fast(p, m).period;
    if (n > period) throw std::domain_error("negative_index_check: n exceeds the period");
    const u64 lhs = term_mod(p, period - n, m);
    const u64 fn = term_mod(p, n, m);
    const u64 rhs = (n % 2 == 1) ? fn : (m - fn) % m;
    return lhs == rhs;
}

}  // namespace pisano
