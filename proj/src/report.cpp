#include "pisano/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pisano {

namespace {

bool counterexample_less(const Counterexample& x, const Counterexample& y) {
    return std::tie(x.sort_key, x.inputs, x.expected, x.actual) <
           std::tie(y.sort_key, y.inputs, y.expected, y.actual);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_string(SweepStatus s) {
    switch (s) {
        case SweepStatus::pass: return "pass";
        case SweepStatus::fail: return "fail";
        case SweepStatus::census: return "census";
    }
    return "unknown";
}

SweepReport::SweepReport(std::string claim_id, u64 range_lo, u64 range_hi)
    : claim(std::move(claim_id)), lo(range_lo), hi(range_hi) {}

SweepReport& SweepReport::param(std::string key, i64 value) {
    params.emplace_back(std::move(key), value);
    return *this;
}

void SweepReport::fail(Counterexample c) {
    counterexamples.push_back(std::move(c));
    status = SweepStatus::fail;
}

void SweepReport::observe(u64 value, u64 witness) {
    auto [it, inserted] = census.try_emplace(value, CensusEntry{witness, 0});
    if (!inserted) it->second.first = std::min(it->second.first, witness);
    ++it->second.count;
}

void SweepReport::mark_census() {
    if (status != SweepStatus::fail) status = SweepStatus::census;
}

SweepReport merge(const SweepReport& x, const SweepReport& y) {
    if (x.claim != y.claim) throw std::invalid_argument("merge: reports for different claims");
    SweepReport out = x;
    out.lo = std::min(x.lo, y.lo);
    out.hi = std::max(x.hi, y.hi);
    for (const auto& p : y.params) {
        if (std::find(out.params.begin(), out.params.end(), p) == out.params.end()) out.params.push_back(p);
    }
    std::sort(out.params.begin(), out.params.end());
    out.counterexamples.insert(out.counterexamples.end(), y.counterexamples.begin(), y.counterexamples.end());
    std::sort(out.counterexamples.begin(), out.counterexamples.end(), counterexample_less);
    for (const auto& [value, entry] : y.census) {
        auto [it, inserted] = out.census.try_emplace(value, entry);
        if (!inserted) {
            it->second.first = std::min(it->second.first, entry.first);
            it->second.count += entry.count;
        }
    }
    if (!out.counterexamples.empty())
        out.status = SweepStatus::fail;
    else if (x.status == SweepStatus::census || y.status == SweepStatus::census)
        out.status = SweepStatus::census;
    else
        out.status = SweepStatus::pass;
    return out;
}

std::string to_json(const SweepReport& r, int indent) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["range"] = {{"lo", r.lo}, {"hi", r.hi}};
    j["status"] = to_string(r.status);
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back({{"inputs", c.inputs}, {"expected", c.expected}, {"actual", c.actual}});
    j["census"] = nlohmann::ordered_json::object();
    for (const auto& [value, e] : r.census)
        j["census"][std::to_string(value)] = {{"first", e.first}, {"count", e.count}};
    return j.dump(indent);
}

// Long format: one record per datum, so every JSON field has exactly one row.
std::string to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "section,key,value,extra\n";
    out << "claim,," << csv_field(r.claim) << ",\n";
    for (const auto& [k, v] : r.params) out << "param," << csv_field(k) << "," << v << ",\n";
    out << "range,lo," << r.lo << ",\n";
    out << "range,hi," << r.hi << ",\n";
    out << "status,," << to_string(r.status) << ",\n";
    for (const auto& c : r.counterexamples)
        out << "counterexample," << csv_field(c.inputs) << "," << csv_field(c.expected) << ","
            << csv_field(c.actual) << "\n";
    for (const auto& [value, e] : r.census)
        out << "census," << value << "," << e.first << "," << e.count << "\n";
    return out.str();
}

std::string to_plain(const SweepReport& r) {
    std::ostringstream out;
    out << r.claim << ": " << to_string(r.status) << " [" << r.lo << ", " << r.hi << "]";
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& c : r.counterexamples)
        out << "  counterexample " << c.inputs << ": expected " << c.expected << ", got " << c.actual << "\n";
    if (!r.census.empty()) {
        out << "  distinct=" << r.census.size() << "\n";
        for (const auto& [value, e] : r.census)
            out << "  " << value << " first=" << e.first << " count=" << e.count << "\n";
    }
    return out.str();
}

}  // namespace pisano
