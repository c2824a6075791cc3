#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pisano/classify.hpp"
#include "pisano/lab.hpp"
#include "pisano/period.hpp"

namespace pisano::cli {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kSuites{
    "oeis-conjectures", "main-theorem", "lcm-tables", "identities", "wyler", "powers-of-two",
    "negativemult",     "finite-orders", "even-k-exceptions", "williams", "carmichael",
};

struct SuiteDefaults {
    u64 max;
    i64 kmax;
};

const std::map<std::string, SuiteDefaults> kDefaults{
    {"oeis-conjectures", {2000, 1}}, {"main-theorem", {2000, 5}}, {"lcm-tables", {100, 8}},
    {"identities", {1000, 8}},       {"wyler", {2000, 8}},        {"powers-of-two", {12, 16}},
    {"negativemult", {60, 5}},       {"finite-orders", {500, 5}}, {"even-k-exceptions", {1000, 8}},
    {"williams", {1000, 1}},         {"carmichael", {90, 1}},
};

unsigned resolve_jobs(unsigned flag) {
    if (flag != 0) return flag;
    if (const char* env = std::getenv("PISANO_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 0;
}

std::string opt_text(const std::optional<u64>& v) { return v ? std::to_string(*v) : "-"; }

ordered_json opt_json(const std::optional<u64>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

void emit_profile(std::ostream& out, const std::string& fmt, const RecurrenceParams& p, u64 m,
                  const PisanoProfile& prof) {
    if (fmt == "json") {
        ordered_json j;
        j["a"] = p.a;
        j["b"] = p.b;
        j["modulus"] = m;
        j["period"] = prof.period;
        j["rank"] = opt_json(prof.rank);
        j["order"] = prof.order;
        j["residue"] = opt_json(prof.residue);
        j["preperiod"] = prof.preperiod;
        out << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        auto field = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); };
        out << "a,b,modulus,period,rank,order,residue,preperiod\n"
            << p.a << "," << p.b << "," << m << "," << prof.period << "," << field(prof.rank) << "," << prof.order
            << "," << field(prof.residue) << "," << prof.preperiod << "\n";
    } else {
        out << "period=" << prof.period << " rank=" << opt_text(prof.rank) << " order=" << prof.order
            << " residue=" << opt_text(prof.residue) << " preperiod=" << prof.preperiod << "\n";
    }
}

void emit_report(std::ostream& out, const std::string& fmt, const SweepReport& r) {
    if (fmt == "json")
        out << to_json(r) << "\n";
    else if (fmt == "csv")
        out << to_csv(r);
    else
        out << to_plain(r);
}

SweepReport run_suite(const std::string& suite, u64 max, i64 kmax, const std::string& fo_case, unsigned jobs) {
    if (suite == "oeis-conjectures") return verify_oeis_conjectures(max, jobs);
    if (suite == "main-theorem") {
        std::vector<i64> ks;
        for (i64 k = 1; k <= kmax; ++k) ks.push_back(k);
        return verify_main_theorem(ks, max, jobs);
    }
    if (suite == "lcm-tables") return verify_lcm_tables(max, kmax, jobs);
    if (suite == "identities") return verify_identities(max, kmax, jobs);
    if (suite == "wyler") return verify_wyler(max, kmax);
    if (suite == "powers-of-two") return verify_powers_of_two(kmax, static_cast<unsigned>(max));
    if (suite == "negativemult") return verify_negativemult(kmax, max, jobs);
    if (suite == "finite-orders") {
        const FiniteOrdersBounds bounds{kmax, max};
        if (!fo_case.empty()) return verify_finite_orders_conjecture(parse_finite_orders_case(fo_case), bounds, jobs);
        SweepReport all("finite-orders", 2, max);
        all.param("a_max", kmax);
        for (auto c : {FiniteOrdersCase::i, FiniteOrdersCase::ii, FiniteOrdersCase::iii, FiniteOrdersCase::iv,
                       FiniteOrdersCase::v}) {
            SweepReport part = verify_finite_orders_conjecture(c, bounds, jobs);
            part.claim = all.claim;
            for (auto& ce : part.counterexamples) ce.inputs = "case=" + to_string(c) + " " + ce.inputs;
            all = merge(all, part);
        }
        return all;
    }
    if (suite == "even-k-exceptions") return verify_even_k_exceptions(kmax, max, jobs);
    if (suite == "williams") return williams_check(max);
    if (suite == "carmichael") return carmichael_check(max);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pisano periods, ranks, orders and residues of (a,b)-Fibonacci sequences modulo m"};
    app.require_subcommand(1);
    unsigned jobs_flag = 0;
    app.add_option("--jobs", jobs_flag, "Worker threads for sweeps (default: PISANO_JOBS or all cores)");

    // profile
    auto* profile = app.add_subcommand("profile", "Period, rank, order, residue and preperiod of one modulus");
    std::optional<i64> a_opt, b_opt, k_opt;
    u64 modulus = 0;
    std::string profile_fmt = "plain";
    auto* pa = profile->add_option("--a", a_opt, "Coefficient of F_{n-1}");
    auto* pb = profile->add_option("--b", b_opt, "Coefficient of F_{n-2}");
    auto* pk = profile->add_option("--k", k_opt, "K-Fibonacci parameter (b = 1)");
    pa->needs(pb);
    pb->needs(pa);
    pk->excludes(pa)->excludes(pb);
    profile->add_option("--mod", modulus, "Modulus m >= 1")->required()->check(CLI::PositiveNumber);
    profile->add_option("--format", profile_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    // oeis
    auto* oeis = app.add_subcommand("oeis", "Emit A053029 / A053030 / A053031 up to a bound");
    std::string oeis_id;
    u64 oeis_max = 0;
    std::string oeis_fmt = "plain";
    oeis->add_option("--id", oeis_id)->required()->check(CLI::IsMember({"A053029", "A053030", "A053031"}));
    oeis->add_option("--max", oeis_max)->required()->check(CLI::Range(u64{1}, kMaxOeisBound));
    oeis->add_option("--format", oeis_fmt)->check(CLI::IsMember({"bfile", "plain", "json", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 1 on any counterexample");
    std::string suite, fo_case, verify_fmt = "plain";
    std::optional<u64> verify_max;
    std::optional<i64> verify_kmax;
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(kSuites));
    verify->add_option("--max", verify_max, "Upper bound of the scanned window");
    verify->add_option("--kmax", verify_kmax, "Largest K (or |a|) scanned");
    verify->add_option("--case", fo_case, "finite-orders clause: i, ii, iii, iv or v")
        ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v"}));
    verify->add_option("--format", verify_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    // census
    auto* census = app.add_subcommand("census", "Distinct orders over 2 <= m <= max with first witnesses");
    i64 census_a = 0, census_b = 0;
    u64 census_max = 0;
    std::string census_fmt = "plain";
    census->add_option("--a", census_a)->required();
    census->add_option("--b", census_b)->required();
    census->add_option("--max", census_max)->required()->check(CLI::Range(u64{2}, kMaxCensusModulus));
    census->add_option("--format", census_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    // wss
    auto* wss = app.add_subcommand("wss", "List K-Wall-Sun-Sun primes p <= pmax");
    i64 wss_k = 1;
    u64 wss_pmax = 0;
    std::string wss_fmt = "plain";
    wss->add_option("--k", wss_k)->required();
    wss->add_option("--pmax", wss_pmax)->required();
    wss->add_option("--format", wss_fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const unsigned jobs = resolve_jobs(jobs_flag);
    try {
        if (*profile) {
            if (!k_opt && !a_opt) {
                err << "error: give either --k or both --a and --b\n" << profile->help();
                return kExitUsage;
            }
            if (k_opt) {
                const RecurrenceParams p = RecurrenceParams::k_fibonacci(*k_opt);
                emit_profile(out, profile_fmt, p, modulus, profile_fast(p, modulus));
            } else {
                const RecurrenceParams p{*a_opt, *b_opt};
                emit_profile(out, profile_fmt, p, modulus, profile_oracle(p, modulus));
            }
            return kExitPass;
        }

        if (*oeis) {
            const OeisId id = parse_oeis_id(oeis_id);
            const auto terms = oeis_sequence(id, oeis_max);
            if (oeis_fmt == "bfile") {
                for (std::size_t i = 0; i < terms.size(); ++i) out << (i + 1) << " " << terms[i] << "\n";
            } else if (oeis_fmt == "json") {
                ordered_json j;
                j["id"] = to_string(id);
                j["max"] = oeis_max;
                j["terms"] = terms;
                out << j.dump(2) << "\n";
            } else if (oeis_fmt == "csv") {
                out << "n,a(n)\n";
                for (std::size_t i = 0; i < terms.size(); ++i) out << (i + 1) << "," << terms[i] << "\n";
            } else {
                for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i];
                out << "\n";
            }
            return kExitPass;
        }

        if (*verify) {
            const SuiteDefaults d = kDefaults.at(suite);
            const u64 max = verify_max.value_or(d.max);
            const i64 kmax = verify_kmax.value_or(d.kmax);
            if (!fo_case.empty() && suite != "finite-orders") {
                err << "error: --case applies to the finite-orders suite only\n";
                return kExitUsage;
            }
            err << "running " << suite << " (max=" << max << ", kmax=" << kmax << ")\n";
            const SweepReport r = run_suite(suite, max, kmax, fo_case, jobs);
            emit_report(out, verify_fmt, r);
            err << suite << ": " << to_string(r.status) << ", " << r.counterexamples.size() << " counterexample(s)\n";
            return r.passed() ? kExitPass : kExitCounterexample;
        }

        if (*census) {
            err << "census of " << to_string(RecurrenceParams{census_a, census_b}) << " up to " << census_max << "\n";
            const SweepReport r = order_census({census_a, census_b}, census_max, jobs);
            emit_report(out, census_fmt, r);
            return kExitPass;
        }

        if (*wss) {
            const auto primes = wall_sun_sun_primes(wss_k, wss_pmax);
            if (wss_fmt == "json") {
                ordered_json j;
                j["k"] = wss_k;
                j["pmax"] = wss_pmax;
                j["primes"] = primes;
                out << j.dump(2) << "\n";
            } else if (wss_fmt == "csv") {
                out << "p\n";
                for (u64 p : primes) out << p << "\n";
            } else {
                for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? " " : "") << primes[i];
                out << "\n";
            }
            return kExitPass;
        }
    } catch (const std::logic_error& e) {
        // domain_error and invalid_argument: inputs outside a supported range
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace pisano::cli
