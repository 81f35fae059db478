// correspondence.hpp
// The two-way bridge between prime arithmetic progressions and Goldbach
// partitions. A prime progression of length k folds symmetrically into
// partitions of the even number m = 2*first + (k - 1)*diff; conversely the
// sorted solution primes of S(m) carry a palindromic difference profile
// whose gcd rebuilds a residue-class progression covering all of them.

#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "goldbach/partition.hpp"
#include "goldbach/prime_ap.hpp"
#include "goldbach/sieve.hpp"

namespace goldbach {

// Pairs (term_i, term_{k+1-i}) of a length-k prime progression, each
// summing to the same even m. t = ceil(k/2) pairs; for odd k the middle
// term pairs with itself.
struct ApPartition {
    uint64_t m;
    uint64_t t;
    bool odd_length;
    std::vector<GoldbachPair> ap_pairs;
};

// Fold a prime progression into Goldbach pairs. Requires length >= 3; the
// progression must satisfy the structural constraints (first odd prime
// territory: first >= 3 odd, diff even), raising degenerate_input_error
// otherwise. Terms are not re-checked for primality here.
ApPartition ap_to_even(const PrimeAp& ap);

// Containment of a progression's pairs in the full solution set S(m).
struct MembershipReport {
    uint64_t m;
    bool all_terms_in_solution_set;
    std::vector<uint64_t> missing_terms;
    uint64_t ap_pair_count;    // t
    uint64_t total_partitions; // w(m)
    bool count_bound_holds;    // t <= w(m)
};

MembershipReport verify_membership(const PrimeSieve& sieve, const PrimeAp& ap);

// Consecutive differences of the ascending solution primes of S(m), their
// gcd g, and the quotient coefficients diff_i / g. The profile is
// palindromic: coeffs reads the same reversed.
struct DifferenceProfile {
    std::vector<uint64_t> primes;
    std::vector<uint64_t> diffs;
    uint64_t g;
    std::vector<uint64_t> coeffs;
    bool palindromic;
};

// Keep-predicate over solution primes. Must be symmetric under p -> m - p;
// reconstruct_ap verifies this and raises invalid_filter_error on a
// violation.
using PrimeFilter = std::function<bool(uint64_t)>;

// Index of a covered prime within the rebuilt progression.
struct ApCoverage {
    uint64_t prime;
    uint64_t index; // 1-based position in the progression
    friend bool operator==(const ApCoverage&, const ApCoverage&) = default;
};

// Progression through the kept solution primes: first = smallest kept
// prime, diff = g, span_length terms reaching the largest. Every kept
// prime lands on a term; consecutive_case marks coefficient vectors of
// all ones (primes occupy consecutive terms). g == 2 covers any odd set
// and is flagged trivial_covering.
struct ReconstructedAp {
    uint64_t first;
    uint64_t diff;
    uint64_t span_length;
    std::vector<ApCoverage> coverage;
    bool consecutive_case;
    bool trivial_covering;
};

DifferenceProfile difference_profile(const PrimeSieve& sieve, uint64_t m);

// Profile restricted to kept primes. A filter that drops every solution
// prime leaves nothing to profile: raises insufficient_partitions_error.
// A single kept prime yields an empty diffs vector with g == 0.
DifferenceProfile difference_profile(const PrimeSieve& sieve, uint64_t m,
                                     const PrimeFilter& keep);

// Reconstruction needs at least two kept pairs; fewer raise
// insufficient_partitions_error.
ReconstructedAp reconstruct_ap(const PrimeSieve& sieve, uint64_t m);
ReconstructedAp reconstruct_ap(const PrimeSieve& sieve, uint64_t m,
                               const PrimeFilter& keep);

// m = first + last term of the source progression, with the chain
// m > last >= k tying partition growth to progression length.
struct InequalityChain {
    uint64_t m;
    uint64_t last_term;
    uint64_t length;
    bool m_exceeds_last;
    bool last_at_least_length;
};

struct GrowthWitness {
    PrimeAp ap;
    uint64_t m;
    InequalityChain chain;
};

// Requires a structurally valid progression of length >= 3 whose terms are
// all prime (checked against the sieve).
GrowthWitness growth_witness(const PrimeSieve& sieve, const PrimeAp& ap);

} // namespace goldbach
