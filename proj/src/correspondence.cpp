// correspondence.cpp

#include "goldbach/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "goldbach/checked.hpp"
#include "goldbach/errors.hpp"

namespace goldbach {
namespace {

struct KeptPrimes {
    std::vector<uint64_t> primes; // ascending
    uint64_t pair_count;
};

// Solution primes of S(m) surviving the filter. The filter must treat p
// and m - p alike or the kept set loses its mirror symmetry.
KeptPrimes filter_solution_primes(const PrimeSieve& sieve, uint64_t m,
                                  const PrimeFilter& keep) {
    if (!keep) throw invalid_filter_error("prime filter is empty");
    const SolutionSet s = solution_set(sieve, m);
    KeptPrimes kept{{}, 0};
    for (const GoldbachPair& pair : s.pairs) {
        const bool keep_p = keep(pair.p);
        if (keep_p != keep(pair.q))
            throw invalid_filter_error("filter breaks the symmetry of " +
                                       std::to_string(pair.p) + " + " +
                                       std::to_string(pair.q) + " = " +
                                       std::to_string(m));
        if (keep_p) {
            kept.primes.push_back(pair.p);
            ++kept.pair_count;
        }
    }
    // partners in reverse pair order continue the ascending run; the
    // self-paired middle prime is already in
    for (auto it = s.pairs.rbegin(); it != s.pairs.rend(); ++it)
        if (it->q != it->p && keep(it->q)) kept.primes.push_back(it->q);
    return kept;
}

DifferenceProfile profile_from(std::vector<uint64_t> primes) {
    DifferenceProfile prof;
    prof.primes = std::move(primes);
    prof.g = 0;
    for (size_t i = 1; i < prof.primes.size(); ++i) {
        prof.diffs.push_back(prof.primes[i] - prof.primes[i - 1]);
        prof.g = std::gcd(prof.g, prof.diffs.back());
    }
    for (uint64_t d : prof.diffs) prof.coeffs.push_back(d / prof.g);
    prof.palindromic =
        std::equal(prof.diffs.begin(), prof.diffs.end(), prof.diffs.rbegin());
    return prof;
}

PrimeFilter keep_all() {
    return [](uint64_t) { return true; };
}

} // namespace

ApPartition ap_to_even(const PrimeAp& ap) {
    if (ap.length < 3)
        throw degenerate_input_error("folding needs a progression of length >= 3, got " +
                                     std::to_string(ap.length));
    if (ap.first < 3 || (ap.first & 1) == 0)
        throw degenerate_input_error(
            "a prime progression of length >= 3 starts at an odd number >= 3");
    if (ap.diff & 1)
        throw degenerate_input_error(
            "a prime progression of length >= 3 has an even difference");
    ApPartition part;
    part.m = checked_add(checked_mul(2, ap.first), checked_mul(ap.length - 1, ap.diff));
    part.t = (ap.length + 1) / 2;
    part.odd_length = ap.length & 1;
    // term(i) + term(k+1-i) = 2*first + (k-1)*diff for every i
    for (uint64_t i = 1; i <= part.t; ++i)
        part.ap_pairs.push_back({term(ap, i), term(ap, ap.length + 1 - i)});
    return part;
}

MembershipReport verify_membership(const PrimeSieve& sieve, const PrimeAp& ap) {
    const ApPartition part = ap_to_even(ap);
    if (part.m > sieve.limit())
        throw std::out_of_range("pair sum " + std::to_string(part.m) +
                                " beyond sieve limit " + std::to_string(sieve.limit()));
    MembershipReport report{part.m, true,        {},
                            part.t, partition_count(sieve, part.m), false};
    for (uint64_t i = 1; i <= ap.length; ++i) {
        const uint64_t v = term(ap, i);
        if (!(sieve.is_prime(v) && sieve.is_prime(part.m - v))) {
            report.all_terms_in_solution_set = false;
            report.missing_terms.push_back(v);
        }
    }
    report.count_bound_holds = report.ap_pair_count <= report.total_partitions;
    return report;
}

DifferenceProfile difference_profile(const PrimeSieve& sieve, uint64_t m) {
    return difference_profile(sieve, m, keep_all());
}

DifferenceProfile difference_profile(const PrimeSieve& sieve, uint64_t m,
                                     const PrimeFilter& keep) {
    KeptPrimes kept = filter_solution_primes(sieve, m, keep);
    if (kept.primes.empty())
        throw insufficient_partitions_error("no solution primes survive the filter for m = " +
                                            std::to_string(m));
    return profile_from(std::move(kept.primes));
}

ReconstructedAp reconstruct_ap(const PrimeSieve& sieve, uint64_t m) {
    return reconstruct_ap(sieve, m, keep_all());
}

ReconstructedAp reconstruct_ap(const PrimeSieve& sieve, uint64_t m,
                               const PrimeFilter& keep) {
    KeptPrimes kept = filter_solution_primes(sieve, m, keep);
    if (kept.pair_count <= 1)
        throw insufficient_partitions_error(
            "reconstruction needs at least two prime pairs for m = " + std::to_string(m) +
            ", found " + std::to_string(kept.pair_count));
    const DifferenceProfile prof = profile_from(std::move(kept.primes));
    ReconstructedAp ap;
    ap.first = prof.primes.front();
    ap.diff = prof.g; // every gap is a multiple of g, so each prime hits a term
    ap.span_length = (prof.primes.back() - prof.primes.front()) / prof.g + 1;
    for (uint64_t p : prof.primes)
        ap.coverage.push_back({p, (p - ap.first) / prof.g + 1});
    ap.consecutive_case =
        !prof.coeffs.empty() &&
        std::all_of(prof.coeffs.begin(), prof.coeffs.end(),
                    [](uint64_t c) { return c == 1; });
    ap.trivial_covering = prof.g == 2;
    return ap;
}

GrowthWitness growth_witness(const PrimeSieve& sieve, const PrimeAp& ap) {
    if (ap.length < 3)
        throw degenerate_input_error("growth witness needs a progression of length >= 3, got " +
                                     std::to_string(ap.length));
    const ValidationReport check = validate_all_prime(sieve, ap);
    if (!check.valid)
        throw std::invalid_argument("not a prime progression: " +
                                    std::to_string(check.failures.size()) +
                                    " constraint failure(s)");
    const uint64_t last = term(ap, ap.length);
    const uint64_t m = checked_add(ap.first, last);
    return {ap, m, {m, last, ap.length, m > last, last >= ap.length}};
}

} // namespace goldbach
