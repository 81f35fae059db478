// prime_ap.cpp

#include "goldbach/prime_ap.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "goldbach/checked.hpp"
#include "goldbach/errors.hpp"

namespace goldbach {

PrimeAp::PrimeAp(uint64_t first, uint64_t diff, uint64_t length)
    : first(first), diff(diff), length(length) {
    if (diff == 0)
        throw degenerate_input_error("progression difference must be positive");
    if (length == 0)
        throw degenerate_input_error("progression length must be positive");
    checked_add(first, checked_mul(diff, length - 1)); // last term representable
}

uint64_t term(const PrimeAp& ap, uint64_t i) {
    if (i < 1 || i > ap.length)
        throw std::out_of_range("term index " + std::to_string(i) + " outside [1, " +
                                std::to_string(ap.length) + "]");
    return checked_add(ap.first, checked_mul(ap.diff, i - 1));
}

ValidationReport validate_all_prime(const PrimeSieve& sieve, const PrimeAp& ap) {
    const uint64_t last = term(ap, ap.length);
    if (last > sieve.limit())
        throw std::out_of_range("last term " + std::to_string(last) +
                                " beyond sieve limit " + std::to_string(sieve.limit()));
    ValidationReport report{true, {}};
    auto flag = [&](ApFault fault, uint64_t index, uint64_t value) {
        report.valid = false;
        report.failures.push_back({fault, index, value});
    };
    if (ap.length >= 3) {
        if (ap.diff & 1) flag(ApFault::odd_diff, 0, ap.diff);
        if (const uint64_t g = std::gcd(ap.first, ap.diff); g > 1)
            flag(ApFault::shared_factor, 0, g);
    }
    for (uint64_t i = 1; i <= ap.length; ++i) {
        const uint64_t v = term(ap, i);
        if (!sieve.is_prime(v))
            flag(ApFault::composite_term, i, v);
        else if (v == 2 && ap.length >= 3)
            flag(ApFault::term_is_two, i, v);
    }
    return report;
}

ResidueClass classify_residue_class(uint64_t first, uint64_t diff) {
    if (diff == 0)
        throw degenerate_input_error("residue class modulus must be positive");
    const uint64_t g = std::gcd(first, diff);
    return {first % diff, diff, g, g == 1};
}

ValidationReport check_index_bound(const PrimeAp& ap) {
    ValidationReport report{true, {}};
    for (uint64_t i = 1; i <= ap.length; ++i) {
        const uint64_t v = term(ap, i);
        if (v < i) {
            report.valid = false;
            report.failures.push_back({ApFault::index_bound, i, v});
            break;
        }
    }
    return report;
}

std::vector<PrimeAp> find_prime_aps(const PrimeSieve& sieve, uint64_t k,
                                    uint64_t max_first, uint64_t max_diff) {
    if (k < 3)
        throw std::invalid_argument("progression search needs length >= 3, got " +
                                    std::to_string(k));
    if (max_first < 1 || max_diff < 1)
        throw std::invalid_argument("search bounds must be positive");
    const uint64_t reach = checked_add(max_first, checked_mul(max_diff, k - 1));
    if (reach > sieve.limit())
        throw std::out_of_range("search reach " + std::to_string(reach) +
                                " beyond sieve limit " + std::to_string(sieve.limit()));
    // length >= 3 rules out 2 as a term and odd differences outright, so
    // only odd first terms and even differences are worth testing
    std::vector<PrimeAp> found;
    for (uint64_t a = 3; a <= max_first; a += 2) {
        if (!sieve.test_odd(a)) continue;
        for (uint64_t d = 2; d <= max_diff; d += 2) {
            bool all = true;
            for (uint64_t i = 1; i < k && all; ++i) all = sieve.test_odd(a + i * d);
            if (all) found.emplace_back(a, d, k);
        }
    }
    return found;
}

} // namespace goldbach
