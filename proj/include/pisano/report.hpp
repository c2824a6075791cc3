#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pisano/arith.hpp"

namespace pisano {

enum class SweepStatus { pass, fail, census };

std::string to_string(SweepStatus s);

struct Counterexample {
    std::string inputs;
    std::string expected;
    std::string actual;
    u64 sort_key = 0;  // primary scan index; orders merged reports, not serialized

    bool operator==(const Counterexample&) const = default;
};

struct CensusEntry {
    u64 first = 0;
    u64 count = 0;

    bool operator==(const CensusEntry&) const = default;
};

/// Result of a verification or census run over an explicit window.
/// status == fail exactly when counterexamples is nonempty.
struct SweepReport {
    std::string claim;
    std::vector<std::pair<std::string, i64>> params;
    u64 lo = 0;
    u64 hi = 0;
    SweepStatus status = SweepStatus::pass;
    std::vector<Counterexample> counterexamples;
    std::map<u64, CensusEntry> census;

    SweepReport() = default;
    SweepReport(std::string claim_id, u64 range_lo, u64 range_hi);

    SweepReport& param(std::string key, i64 value);
    void fail(Counterexample c);
    /// Records one observation of `value` at scan index `witness`.
    void observe(u64 value, u64 witness);
    void mark_census();

    bool passed() const { return status != SweepStatus::fail; }
    bool operator==(const SweepReport&) const = default;
};

/// Combines partial reports of the same claim. The result does not depend
/// on argument order.
SweepReport merge(const SweepReport& x, const SweepReport& y);

std::string to_json(const SweepReport& r, int indent = 2);
std::string to_csv(const SweepReport& r);
std::string to_plain(const SweepReport& r);

}  // namespace pisano
