// acceptance.cpp
// End-to-end gate over the shipped behaviors. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails. Timed
// criteria carry their wall-clock budget in the check itself.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "goldbach/correspondence.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/prime_ap.hpp"
#include "goldbach/sieve.hpp"

#include "oracle.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string format_seconds(double secs) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(1) << secs << "s";
    return ss.str();
}

struct ChampionRow {
    uint64_t m;
    uint64_t w;
};

// Running record targets and counts up to 100000, frozen from an
// independent trial-division scan.
const ChampionRow champion_fixture[] = {
    {4, 1},        {10, 2},       {22, 3},       {34, 4},       {48, 5},
    {60, 6},       {78, 7},       {84, 8},       {90, 9},       {114, 10},
    {120, 12},     {168, 13},     {180, 14},     {210, 19},     {300, 21},
    {330, 24},     {390, 27},     {420, 30},     {510, 32},     {630, 41},
    {780, 44},     {840, 51},     {990, 52},     {1050, 57},    {1140, 58},
    {1260, 68},    {1470, 73},    {1650, 76},    {1680, 83},    {1890, 91},
    {2100, 97},    {2310, 114},   {2730, 128},   {3150, 138},   {3570, 154},
    {3990, 163},   {4200, 165},   {4410, 171},   {4620, 190},   {5250, 198},
    {5460, 218},   {6090, 222},   {6510, 241},   {6930, 268},   {7980, 274},
    {8190, 292},   {9030, 303},   {9240, 329},   {10290, 330},  {10710, 340},
    {10920, 362},  {11550, 393},  {13020, 394},  {13650, 433},  {13860, 446},
    {15330, 447},  {15540, 466},  {15960, 477},  {16170, 517},  {17850, 530},
    {18480, 571},  {20790, 615},  {21840, 635},  {23100, 671},  {24570, 690},
    {25410, 719},  {27300, 738},  {27720, 768},  {30030, 905},  {34650, 908},
    {35490, 936},  {36960, 980},  {39270, 1079}, {43680, 1083}, {43890, 1172},
    {46410, 1205}, {50820, 1243}, {51870, 1324}, {53130, 1339}, {57330, 1368},
    {60060, 1564}, {66990, 1610}, {71610, 1683}, {76230, 1692}, {78540, 1876},
    {84630, 1886}, {85470, 1936}, {87780, 2042}, {90090, 2135}, {99330, 2168},
};

std::vector<std::pair<uint64_t, uint64_t>> as_pairs(const goldbach::SolutionSet& s) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (const auto& pr : s.pairs) out.emplace_back(pr.p, pr.q);
    return out;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&failures](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << std::endl;
        if (!ok) ++failures;
    };
    auto criterion = [&report](const std::string& name, auto&& body) {
        try {
            std::string detail;
            const bool ok = body(detail);
            report(name, ok, detail);
        } catch (const std::exception& e) {
            report(name, false, std::string("exception: ") + e.what());
        }
    };

    const goldbach::PrimeSieve sieve(1'000'000);
    std::vector<goldbach::PrimeAp> bulk_aps; // lengths 3..6, shared across criteria

    criterion("solution set of 104", [&](std::string& detail) {
        const auto s = goldbach::solution_set(sieve, 104);
        const std::vector<std::pair<uint64_t, uint64_t>> expect{
            {3, 101}, {7, 97}, {31, 73}, {37, 67}, {43, 61}};
        if (as_pairs(s) != expect) {
            detail = "pair list differs";
            return false;
        }
        for (const auto& pr : s.pairs)
            if (pr.p + pr.q != 104) {
                detail = "pair sum broke";
                return false;
            }
        const auto prof = goldbach::difference_profile(sieve, 104);
        detail = "w = 5";
        return goldbach::partition_count(sieve, 104) == 5 && prof.palindromic;
    });

    criterion("solution set of 58", [&](std::string& detail) {
        const auto s = goldbach::solution_set(sieve, 58);
        const std::vector<std::pair<uint64_t, uint64_t>> expect{
            {5, 53}, {11, 47}, {17, 41}, {29, 29}};
        detail = "w = 4";
        return as_pairs(s) == expect && goldbach::partition_count(sieve, 58) == 4;
    });

    criterion("curated band reconstruction for 70", [&](std::string& detail) {
        const auto full = goldbach::difference_profile(sieve, 70);
        if (full.g != 2 || !full.palindromic ||
            full.primes != std::vector<uint64_t>{3, 11, 17, 23, 29, 41, 47, 53, 59, 67}) {
            detail = "full profile differs";
            return false;
        }
        const auto keep = [](uint64_t p) { return 11 <= p && p <= 59; };
        const auto prof = goldbach::difference_profile(sieve, 70, keep);
        const auto ap = goldbach::reconstruct_ap(sieve, 70, keep);
        const std::vector<uint64_t> indices{1, 2, 3, 4, 6, 7, 8, 9};
        bool ok = prof.g == 6 && prof.palindromic && ap.first == 11 && ap.diff == 6 &&
                  ap.span_length == 9 && !ap.trivial_covering &&
                  ap.coverage.size() == indices.size();
        for (size_t i = 0; ok && i < indices.size(); ++i)
            ok = ap.coverage[i].index == indices[i];
        detail = ok ? "band [11, 59] rebuilds step 6 over 9 slots" : "banded rebuild differs";
        return ok;
    });

    criterion("curated residue reconstruction for 126", [&](std::string& detail) {
        if (goldbach::partition_count(sieve, 126) != 10) {
            detail = "w(126) differs";
            return false;
        }
        const auto full = goldbach::reconstruct_ap(sieve, 126);
        if (!full.trivial_covering || full.diff != 2) {
            detail = "full covering should be the trivial one";
            return false;
        }
        const auto keep = [](uint64_t p) { return p % 10 == 3; };
        const auto prof = goldbach::difference_profile(sieve, 126, keep);
        const auto ap = goldbach::reconstruct_ap(sieve, 126, keep);
        const std::vector<uint64_t> indices{1, 2, 4, 5, 7, 8, 10, 11};
        bool ok = prof.primes ==
                      std::vector<uint64_t>{13, 23, 43, 53, 73, 83, 103, 113} &&
                  prof.g == 10 && prof.palindromic && ap.first == 13 && ap.diff == 10 &&
                  ap.span_length == 11 && !ap.trivial_covering &&
                  ap.coverage.size() == indices.size();
        for (size_t i = 0; ok && i < indices.size(); ++i)
            ok = ap.coverage[i].index == indices[i];
        detail = ok ? "residue subset rebuilds step 10 over 11 slots" : "curated rebuild differs";
        return ok;
    });

    criterion("comet sweep to 1000000 stays positive", [&](std::string& detail) {
        const auto t0 = clock_type::now();
        const auto series = goldbach::comet(sieve, 1'000'000, 1);
        const double secs = seconds_since(t0);
        detail = std::to_string(series.rows.size()) + " rows in " + format_seconds(secs);
        if (series.rows.size() != (1'000'000 - 4) / 2 + 1) return false;
        for (const auto& row : series.rows)
            if (row.w < 1) {
                detail += ", zero at m = " + std::to_string(row.m);
                return false;
            }
        if (secs >= 60.0) {
            detail += ", over the 60s budget";
            return false;
        }
        return true;
    });

    criterion("folded progressions land in solution sets (lengths 3..6)",
              [&](std::string& detail) {
        uint64_t folded = 0;
        for (uint64_t k = 3; k <= 6; ++k) {
            const auto aps = goldbach::find_prime_aps(sieve, k, 500, 500);
            if (aps.empty()) {
                detail = "no progressions of length " + std::to_string(k);
                return false;
            }
            for (const auto& ap : aps) {
                const auto part = goldbach::ap_to_even(ap);
                if (part.t != (k + 1) / 2 || part.ap_pairs.size() != part.t) {
                    detail = "pair count differs from half the length";
                    return false;
                }
                for (const auto& pr : part.ap_pairs)
                    if (pr.p + pr.q != part.m) {
                        detail = "pair sum broke";
                        return false;
                    }
                const auto membership = goldbach::verify_membership(sieve, ap);
                if (!membership.all_terms_in_solution_set || !membership.count_bound_holds) {
                    detail = "membership failed for first " + std::to_string(ap.first) +
                             " diff " + std::to_string(ap.diff) + " length " +
                             std::to_string(k);
                    return false;
                }
                ++folded;
            }
            bulk_aps.insert(bulk_aps.end(), aps.begin(), aps.end());
        }
        detail = std::to_string(folded) + " progressions folded and verified";
        return true;
    });

    criterion("exhaustive length-3 fold up to 1000/1000", [&](std::string& detail) {
        const auto aps = goldbach::find_prime_aps(sieve, 3, 1'000, 1'000);
        const auto reference = oracle::find_aps(3, 1'000, 1'000);
        if (aps.size() != reference.size() || aps.size() != 4'549) {
            detail = "found " + std::to_string(aps.size()) + ", reference " +
                     std::to_string(reference.size());
            return false;
        }
        for (size_t i = 0; i < aps.size(); ++i)
            if (aps[i].first != reference[i].first || aps[i].diff != reference[i].second) {
                detail = "list diverges at entry " + std::to_string(i);
                return false;
            }
        for (const auto& ap : aps) {
            const uint64_t middle = goldbach::term(ap, 2);
            const auto part = goldbach::ap_to_even(ap);
            if (part.m != 2 * middle || part.ap_pairs.size() != 2 ||
                !(part.ap_pairs[1] == goldbach::GoldbachPair{middle, middle})) {
                detail = "middle term should double into the target";
                return false;
            }
            const auto membership = goldbach::verify_membership(sieve, ap);
            if (!membership.all_terms_in_solution_set || !membership.count_bound_holds) {
                detail = "membership failed at first " + std::to_string(ap.first);
                return false;
            }
        }
        detail = "4549 progressions, all folds verified";
        return true;
    });

    criterion("palindromic profiles and covering progressions to 10000",
              [&](std::string& detail) {
        const auto t0 = clock_type::now();
        uint64_t rebuilt = 0;
        for (uint64_t m = 6; m <= 10'000; m += 2) {
            const auto prof = goldbach::difference_profile(sieve, m);
            if (!prof.palindromic) {
                detail = "profile of " + std::to_string(m) + " is not palindromic";
                return false;
            }
            if (goldbach::partition_count(sieve, m) <= 1) continue;
            const auto ap = goldbach::reconstruct_ap(sieve, m);
            bool ok = ap.first == prof.primes.front() && ap.diff == prof.g &&
                      ap.coverage.size() == prof.primes.size() &&
                      ap.coverage.back().index == ap.span_length;
            for (size_t i = 0; ok && i < prof.primes.size(); ++i)
                ok = (prof.primes[i] - ap.first) % ap.diff == 0 &&
                     ap.coverage[i].index >= 1 && ap.coverage[i].index <= ap.span_length;
            if (!ok) {
                detail = "coverage broke at m = " + std::to_string(m);
                return false;
            }
            ++rebuilt;
        }
        const double secs = seconds_since(t0);
        detail = std::to_string(rebuilt) + " rebuilds in " + format_seconds(secs);
        return secs < 30.0;
    });

    criterion("index bound and growth witness for the length-10 progression",
              [&](std::string& detail) {
        const auto aps = goldbach::find_prime_aps(sieve, 10, 250, 250);
        if (aps.size() != 1 || !(aps[0] == goldbach::PrimeAp(199, 210, 10))) {
            detail = "expected exactly one progression, 199 stepping 210";
            return false;
        }
        for (const auto& ap : bulk_aps)
            if (!goldbach::check_index_bound(ap).valid) {
                detail = "index bound failed for first " + std::to_string(ap.first);
                return false;
            }
        if (!goldbach::check_index_bound(aps[0]).valid) {
            detail = "index bound failed for the length-10 progression";
            return false;
        }
        const auto witness = goldbach::growth_witness(sieve, aps[0]);
        const bool ok = witness.m == 2'288 && witness.chain.last_term == 2'089 &&
                        witness.chain.length == 10 && witness.chain.m_exceeds_last &&
                        witness.chain.last_at_least_length &&
                        witness.m == aps[0].first + witness.chain.last_term;
        detail = ok ? "2288 > 2089 >= 10" : "witness chain broken";
        return ok;
    });

    criterion("champion records to 100000 match the fixture", [&](std::string& detail) {
        const auto recs = goldbach::champions(sieve, 100'000);
        const size_t expected = std::size(champion_fixture);
        if (recs.size() != expected) {
            detail = "got " + std::to_string(recs.size()) + " records, fixture has " +
                     std::to_string(expected);
            return false;
        }
        uint64_t prior = 0;
        for (size_t i = 0; i < recs.size(); ++i) {
            if (recs[i].m != champion_fixture[i].m || recs[i].w != champion_fixture[i].w ||
                recs[i].prior_record != prior) {
                detail = "mismatch at record " + std::to_string(i);
                return false;
            }
            prior = champion_fixture[i].w;
        }
        if (recs.size() < 10 || recs.back().w < 10) {
            detail = "record list too short";
            return false;
        }
        detail = std::to_string(recs.size()) + " records, final count " +
                 std::to_string(recs.back().w);
        return true;
    });

    criterion("partition counts match trial division to 10000", [&](std::string& detail) {
        const auto flags = oracle::prime_flags(10'000);
        for (uint64_t m = 4; m <= 10'000; m += 2) {
            std::vector<std::pair<uint64_t, uint64_t>> expect;
            for (uint64_t p = 2; p <= m - p; ++p)
                if (flags[p] && flags[m - p]) expect.emplace_back(p, m - p);
            const auto s = goldbach::solution_set(sieve, m);
            if (as_pairs(s) != expect ||
                goldbach::partition_count(sieve, m) != expect.size()) {
                detail = "differs at m = " + std::to_string(m);
                return false;
            }
        }
        detail = "4999 even targets";
        return true;
    });

    criterion("residue class counts mod 4 at 10000", [&](std::string& detail) {
        const uint64_t c1 = sieve.count_primes_in_class(1, 4, 10'000);
        const uint64_t c3 = sieve.count_primes_in_class(3, 4, 10'000);
        const bool ok = c1 == 609 && c3 == 619 && c1 + c3 + 1 == 1'229 &&
                        c1 == oracle::count_class(1, 4, 10'000) &&
                        c3 == oracle::count_class(3, 4, 10'000);
        detail = "609 + 619 + the prime 2 = 1229";
        return ok;
    });

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
