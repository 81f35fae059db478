// sieve.cpp
// Segmented odd-only sieve of Eratosthenes. Base primes up to sqrt(limit)
// come from a small byte sieve; the main bit store is then cleared one
// word-aligned segment at a time, so segments can go to worker threads
// without any locking.

#include "goldbach/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "goldbach/errors.hpp"

namespace goldbach {
namespace {

// Exact integer square root. The double estimate is off by at most one
// near 2^52, so fix it up; the clamp keeps r*r from wrapping.
uint64_t isqrt(uint64_t n) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    r = std::min(r, uint64_t{0xFFFFFFFF});
    while (r > 0 && r * r > n) --r;
    while (r < 0xFFFFFFFF && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<uint64_t> odd_base_primes(uint64_t s) {
    std::vector<uint8_t> composite(s + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 3; i <= s; i += 2) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= s; j += 2 * i) composite[j] = 1;
    }
    return primes;
}

} // namespace

PrimeSieve::PrimeSieve(uint64_t limit, const SieveConfig& cfg) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("sieve limit must be at least 2");
    odd_bits_ = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
    const uint64_t n_words = (odd_bits_ + 63) / 64;
    if (n_words * sizeof(uint64_t) > cfg.max_store_bytes)
        throw resource_limit_error(
            "sieve store for limit " + std::to_string(limit) + " needs " +
            std::to_string(n_words * sizeof(uint64_t)) + " bytes, ceiling is " +
            std::to_string(cfg.max_store_bytes));
    words_.assign(n_words, ~uint64_t{0});
    if (n_words == 0) return;
    if (uint64_t tail = odd_bits_ % 64)
        words_.back() &= (uint64_t{1} << tail) - 1;

    const uint64_t s = isqrt(limit);
    const auto base = odd_base_primes(s);

    uint64_t seg_words;
    if (cfg.segment_bits) {
        seg_words = (cfg.segment_bits + 63) / 64;
    } else {
        // about sqrt(limit) bits per segment, rounded up to an 8 KB block
        const uint64_t block = uint64_t{1} << 16;
        seg_words = (std::max<uint64_t>(s, 1) + block - 1) / block * block / 64;
    }
    const uint64_t n_segs = (n_words + seg_words - 1) / seg_words;

    auto run = [&](uint64_t seg_begin, uint64_t seg_end) {
        for (uint64_t si = seg_begin; si < seg_end; ++si) {
            const uint64_t wlo = si * seg_words;
            sieve_segment(wlo, std::min(wlo + seg_words, n_words), base);
        }
    };

    unsigned t = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
    t = std::max(1u, std::min<unsigned>(t, n_segs));
    if (t == 1) {
        run(0, n_segs);
        return;
    }
    std::vector<std::thread> pool;
    const uint64_t per = n_segs / t, extra = n_segs % t;
    uint64_t at = 0;
    for (unsigned i = 0; i < t; ++i) {
        const uint64_t take = per + (i < extra ? 1 : 0);
        pool.emplace_back(run, at, at + take);
        at += take;
    }
    for (auto& th : pool) th.join();
}

void PrimeSieve::sieve_segment(uint64_t word_lo, uint64_t word_hi,
                               const std::vector<uint64_t>& base_primes) {
    const uint64_t bit_lo = word_lo * 64;
    const uint64_t bit_hi = std::min(word_hi * 64, odd_bits_);
    if (bit_lo >= bit_hi) return;
    const uint64_t lo = 2 * bit_lo + 3;
    const uint64_t hi = 2 * (bit_hi - 1) + 3;
    for (uint64_t q : base_primes) {
        uint64_t start = q * q;
        if (start > hi) break; // q ascending, every later q*q is larger
        if (start < lo) {
            uint64_t k = (lo + q - 1) / q;
            k |= 1; // odd multiples only; even ones are not stored
            start = k * q;
            if (start > hi) continue;
        }
        for (uint64_t v = start; v <= hi; v += 2 * q)
            words_[(v - 3) >> 7] &= ~(uint64_t{1} << (((v - 3) >> 1) & 63));
    }
}

bool PrimeSieve::is_prime(uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("primality query " + std::to_string(n) +
                                " beyond sieve limit " + std::to_string(limit_));
    if (n < 3) return n == 2;
    if ((n & 1) == 0) return false;
    return test_odd(n);
}

std::vector<uint64_t> PrimeSieve::primes_in_range(uint64_t lo, uint64_t hi) const {
    if (lo > hi)
        throw std::invalid_argument("range lower bound exceeds upper bound");
    if (hi > limit_)
        throw std::out_of_range("range end " + std::to_string(hi) +
                                " beyond sieve limit " + std::to_string(limit_));
    std::vector<uint64_t> out;
    if (lo <= 2 && 2 <= hi) out.push_back(2);
    for (uint64_t n = std::max<uint64_t>(lo, 3) | 1; n <= hi; n += 2)
        if (test_odd(n)) out.push_back(n);
    return out;
}

uint64_t PrimeSieve::count_primes_in_class(int64_t a, uint64_t d, uint64_t n) const {
    if (d == 0)
        throw std::invalid_argument("residue class modulus must be positive");
    if (n > limit_)
        throw std::out_of_range("class count bound " + std::to_string(n) +
                                " beyond sieve limit " + std::to_string(limit_));
    uint64_t r;
    if (a >= 0) {
        r = static_cast<uint64_t>(a) % d;
    } else {
        const uint64_t mag = static_cast<uint64_t>(-(a + 1)) + 1;
        r = (d - mag % d) % d;
    }
    uint64_t count = 0;
    if (n >= 2 && 2 % d == r) ++count;
    for (uint64_t p = 3; p <= n; p += 2)
        if (test_odd(p) && p % d == r) ++count;
    return count;
}

uint64_t PrimeSieve::prime_count() const {
    uint64_t c = 1; // the prime 2
    for (uint64_t w : words_) c += static_cast<unsigned>(std::popcount(w));
    return c;
}

} // namespace goldbach
