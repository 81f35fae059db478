// oracle.hpp
// Reference implementations used only by tests. Everything here is
// deliberately naive (trial division, exhaustive scans) and shares no code
// with the library, so agreement between the two is meaningful.

#pragma once
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

bool is_prime(uint64_t n);

std::vector<uint64_t> primes_up_to(uint64_t n);

// flags[v] == 1 iff v is prime, for v in [0, n]. Built by trial division.
std::vector<char> prime_flags(uint64_t n);

// Unordered prime pairs p <= q with p + q == m, ascending in p.
std::vector<std::pair<uint64_t, uint64_t>> solution_pairs(uint64_t m);

uint64_t pair_count(uint64_t m);

// (first, diff) of every length-k all-prime progression with first and
// diff inside the bounds, ordered by (first, diff). Scans every candidate
// including even first terms and odd differences.
std::vector<std::pair<uint64_t, uint64_t>> find_aps(uint64_t k, uint64_t max_first,
                                                    uint64_t max_diff);

// Primes p <= n with p % d == a % d.
uint64_t count_class(uint64_t a, uint64_t d, uint64_t n);

} // namespace oracle
