// oracle.cpp

#include "oracle.hpp"

namespace oracle {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (uint64_t f = 5; f * f <= n; f += 6)
        if (n % f == 0 || n % (f + 2) == 0) return false;
    return true;
}

std::vector<uint64_t> primes_up_to(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t v = 2; v <= n; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

std::vector<char> prime_flags(uint64_t n) {
    std::vector<char> flags(n + 1, 0);
    for (uint64_t v = 2; v <= n; ++v) flags[v] = is_prime(v) ? 1 : 0;
    return flags;
}

std::vector<std::pair<uint64_t, uint64_t>> solution_pairs(uint64_t m) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t p = 2; p <= m - p; ++p)
        if (is_prime(p) && is_prime(m - p)) out.emplace_back(p, m - p);
    return out;
}

uint64_t pair_count(uint64_t m) {
    uint64_t count = 0;
    for (uint64_t p = 2; p <= m - p; ++p)
        if (is_prime(p) && is_prime(m - p)) ++count;
    return count;
}

std::vector<std::pair<uint64_t, uint64_t>> find_aps(uint64_t k, uint64_t max_first,
                                                    uint64_t max_diff) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t a = 2; a <= max_first; ++a) {
        if (!is_prime(a)) continue;
        for (uint64_t d = 1; d <= max_diff; ++d) {
            bool all = true;
            for (uint64_t i = 1; i < k && all; ++i) all = is_prime(a + i * d);
            if (all) out.emplace_back(a, d);
        }
    }
    return out;
}

uint64_t count_class(uint64_t a, uint64_t d, uint64_t n) {
    uint64_t count = 0;
    for (uint64_t p = 2; p <= n; ++p)
        if (is_prime(p) && p % d == a % d) ++count;
    return count;
}

} // namespace oracle
