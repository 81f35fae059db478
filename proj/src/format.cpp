// format.cpp

#include "goldbach/format.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

namespace goldbach {
namespace {

using ordered_json = nlohmann::ordered_json;

// insertion-ordered keys + fixed indent keep equal inputs byte-identical
std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* bool_word(bool b) { return b ? "true" : "false"; }

ordered_json pair_array(const std::vector<GoldbachPair>& pairs) {
    ordered_json arr = ordered_json::array();
    for (const GoldbachPair& pr : pairs) arr.push_back({pr.p, pr.q});
    return arr;
}

} // namespace

std::string format_solution_set(const SolutionSet& s, OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json j;
        j["m"] = s.m;
        j["w"] = s.pairs.size();
        j["pairs"] = pair_array(s.pairs);
        return dump(j);
    }
    std::string out = "m,p,q\n";
    for (const GoldbachPair& pr : s.pairs)
        out += std::to_string(s.m) + ',' + std::to_string(pr.p) + ',' +
               std::to_string(pr.q) + '\n';
    return out;
}

std::string format_comet(const CometSeries& c, OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const CometRow& row : c.rows) {
            ordered_json j;
            j["m"] = row.m;
            j["w"] = row.w;
            arr.push_back(std::move(j));
        }
        return dump(arr);
    }
    std::string out = "m,w\n";
    for (const CometRow& row : c.rows)
        out += std::to_string(row.m) + ',' + std::to_string(row.w) + '\n';
    return out;
}

std::string format_champions(const std::vector<ChampionRecord>& recs, OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const ChampionRecord& r : recs) {
            ordered_json j;
            j["m"] = r.m;
            j["w"] = r.w;
            j["prior_record"] = r.prior_record;
            arr.push_back(std::move(j));
        }
        return dump(arr);
    }
    std::string out = "m,w,prior_record\n";
    for (const ChampionRecord& r : recs)
        out += std::to_string(r.m) + ',' + std::to_string(r.w) + ',' +
               std::to_string(r.prior_record) + '\n';
    return out;
}

std::string format_aps(const std::vector<PrimeAp>& aps, OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json arr = ordered_json::array();
        for (const PrimeAp& ap : aps) {
            ordered_json j;
            j["first"] = ap.first;
            j["diff"] = ap.diff;
            j["length"] = ap.length;
            arr.push_back(std::move(j));
        }
        return dump(arr);
    }
    std::string out = "first,diff,length\n";
    for (const PrimeAp& ap : aps)
        out += std::to_string(ap.first) + ',' + std::to_string(ap.diff) + ',' +
               std::to_string(ap.length) + '\n';
    return out;
}

std::string format_ap_partition(const ApPartition& part,
                                const std::optional<MembershipReport>& membership,
                                OutputFormat f) {
    const char* parity = part.odd_length ? "odd" : "even";
    if (f == OutputFormat::json) {
        ordered_json j;
        j["m"] = part.m;
        j["t"] = part.t;
        j["parity"] = parity;
        j["ap_pairs"] = pair_array(part.ap_pairs);
        if (membership) {
            ordered_json mj;
            mj["all_terms_in_solution_set"] = membership->all_terms_in_solution_set;
            mj["missing_terms"] = membership->missing_terms;
            mj["ap_pair_count"] = membership->ap_pair_count;
            mj["total_partitions"] = membership->total_partitions;
            mj["count_bound_holds"] = membership->count_bound_holds;
            j["membership"] = std::move(mj);
        }
        return dump(j);
    }
    std::string out;
    const std::string head = std::to_string(part.m) + ',' + std::to_string(part.t) +
                             ',' + parity + ',';
    if (membership) {
        out = "m,t,parity,p,q,in_solution_set,total_partitions,count_bound_holds\n";
        const auto& missing = membership->missing_terms;
        for (const GoldbachPair& pr : part.ap_pairs) {
            // a term and its partner are in or out together
            const bool in = std::find(missing.begin(), missing.end(), pr.p) == missing.end();
            out += head + std::to_string(pr.p) + ',' + std::to_string(pr.q) + ',' +
                   bool_word(in) + ',' + std::to_string(membership->total_partitions) +
                   ',' + bool_word(membership->count_bound_holds) + '\n';
        }
    } else {
        out = "m,t,parity,p,q\n";
        for (const GoldbachPair& pr : part.ap_pairs)
            out += head + std::to_string(pr.p) + ',' + std::to_string(pr.q) + '\n';
    }
    return out;
}

std::string format_reconstruction(uint64_t m, const DifferenceProfile& profile,
                                  const ReconstructedAp& ap, OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json j;
        j["m"] = m;
        ordered_json pj;
        pj["primes"] = profile.primes;
        pj["diffs"] = profile.diffs;
        pj["g"] = profile.g;
        pj["coeffs"] = profile.coeffs;
        pj["palindromic"] = profile.palindromic;
        j["profile"] = std::move(pj);
        ordered_json aj;
        aj["first"] = ap.first;
        aj["diff"] = ap.diff;
        aj["span_length"] = ap.span_length;
        ordered_json cov = ordered_json::array();
        for (const ApCoverage& c : ap.coverage) {
            ordered_json cj;
            cj["prime"] = c.prime;
            cj["index"] = c.index;
            cov.push_back(std::move(cj));
        }
        aj["coverage"] = std::move(cov);
        aj["consecutive_case"] = ap.consecutive_case;
        aj["trivial_covering"] = ap.trivial_covering;
        j["ap"] = std::move(aj);
        return dump(j);
    }
    std::string out = "m,first,diff,span_length,consecutive_case,trivial_covering,prime,index\n";
    const std::string head = std::to_string(m) + ',' + std::to_string(ap.first) + ',' +
                             std::to_string(ap.diff) + ',' +
                             std::to_string(ap.span_length) + ',' +
                             bool_word(ap.consecutive_case) + ',' +
                             bool_word(ap.trivial_covering) + ',';
    for (const ApCoverage& c : ap.coverage)
        out += head + std::to_string(c.prime) + ',' + std::to_string(c.index) + '\n';
    return out;
}

std::string format_class_count(int64_t a, uint64_t d, uint64_t max, uint64_t count,
                               OutputFormat f) {
    if (f == OutputFormat::json) {
        ordered_json j;
        j["a"] = a;
        j["d"] = d;
        j["max"] = max;
        j["count"] = count;
        return dump(j);
    }
    return "a,d,max,count\n" + std::to_string(a) + ',' + std::to_string(d) + ',' +
           std::to_string(max) + ',' + std::to_string(count) + '\n';
}

std::string format_error(const std::string& error_class, const std::string& message) {
    ordered_json j;
    j["error"] = error_class;
    j["message"] = message;
    return j.dump() + "\n";
}

} // namespace goldbach
