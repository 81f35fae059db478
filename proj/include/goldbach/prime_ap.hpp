// prime_ap.hpp
// Arithmetic progressions of primes and the residue-class progressions
// that contain them. A progression of length k >= 3 consisting entirely
// of primes is structurally constrained: it cannot contain 2, its common
// difference is even, and its first term is coprime to the difference.

#pragma once
#include <cstdint>
#include <vector>

#include "goldbach/sieve.hpp"

namespace goldbach {

// first + (i - 1) * diff for i = 1..length. diff and length must be
// positive; a zero value raises degenerate_input_error at construction.
struct PrimeAp {
    uint64_t first;
    uint64_t diff;
    uint64_t length;

    PrimeAp(uint64_t first, uint64_t diff, uint64_t length);
    friend bool operator==(const PrimeAp&, const PrimeAp&) = default;
};

// 1-based term access, overflow-checked. i outside [1, length] raises
// std::out_of_range.
uint64_t term(const PrimeAp& ap, uint64_t i);

enum class ApFault {
    composite_term, // some term is not prime
    term_is_two,    // 2 appears in a progression of length >= 3
    odd_diff,       // length >= 3 with an odd common difference
    shared_factor,  // gcd(first, diff) > 1 for length >= 3
    index_bound,    // term(i) < i somewhere
};

struct ApFailure {
    ApFault fault;
    uint64_t index; // offending 1-based term index, 0 for structural faults
    uint64_t value; // offending term value, or the shared factor
    friend bool operator==(const ApFailure&, const ApFailure&) = default;
};

struct ValidationReport {
    bool valid;
    std::vector<ApFailure> failures;
};

// Full membership check: every term prime, plus the structural constraints
// above for length >= 3. Progressions of length 1 or 2 are exempt from the
// structural checks. The last term must not exceed sieve.limit().
ValidationReport validate_all_prime(const PrimeSieve& sieve, const PrimeAp& ap);

// The residue class a mod d a progression lives in, with its Dirichlet
// eligibility (gcd(a, d) == 1 admits infinitely many primes).
struct ResidueClass {
    uint64_t residue;
    uint64_t modulus;
    uint64_t gcd;
    bool dirichlet_eligible;
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

// Classify the class first mod diff. diff must be positive.
ResidueClass classify_residue_class(uint64_t first, uint64_t diff);

// term(i) >= i for every i when all terms are prime and diff >= 2.
// Reports the first violating index, or valid when none exists.
ValidationReport check_index_bound(const PrimeAp& ap);

// All progressions of exactly k >= 3 prime terms with first <= max_first,
// diff <= max_diff, ordered by (first, diff). No maximal-length trimming:
// a progression extendable on either side is still listed. Requires
// max_first + (k - 1) * max_diff <= sieve.limit().
std::vector<PrimeAp> find_prime_aps(const PrimeSieve& sieve, uint64_t k,
                                    uint64_t max_first, uint64_t max_diff);

} // namespace goldbach
