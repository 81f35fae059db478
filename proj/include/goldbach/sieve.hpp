// sieve.hpp
// Compact primality store for 0..limit, built once with a segmented sieve
// of Eratosthenes and immutable afterwards.
//
// Storage is 1 bit per odd number; 2 is special-cased and even numbers are
// never stored:
//   bit index j  ->  odd number 2*j + 3
//   odd number n ->  bit index  (n - 3) / 2
//
// Memory usage: ~limit/16 bytes.
//   10^7  ->  ~0.6 MB
//   10^8  ->  ~6 MB
//   10^9  ->  ~60 MB

#pragma once
#include <cstdint>
#include <vector>

namespace goldbach {

struct SieveConfig {
    // Span of one sieving segment in bits. 0 picks a default: the square
    // root of the limit rounded up to a cache-sized block.
    uint64_t segment_bits = 0;
    // Worker threads for segment sieving. 0 uses all hardware threads.
    unsigned threads = 1;
    // Hard ceiling on the bit store; larger requests raise
    // resource_limit_error before any allocation.
    uint64_t max_store_bytes = uint64_t{1} << 30;
};

class PrimeSieve {
public:
    // Sieve all of 0..limit. limit < 2 raises std::invalid_argument.
    // Segments are word-aligned and independent, so they may be sieved
    // in parallel; the result is identical for any thread count.
    explicit PrimeSieve(uint64_t limit, const SieveConfig& cfg = {});

    uint64_t limit() const { return limit_; }

    // true iff n is prime. Queries above limit() raise std::out_of_range,
    // never report a guess.
    bool is_prime(uint64_t n) const;

    // Strictly increasing list of primes p with lo <= p <= hi.
    // lo > hi raises std::invalid_argument, hi > limit() std::out_of_range.
    std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) const;

    // Number of primes p <= n with p congruent to a (mod d). A negative
    // or oversized a is normalized into [0, d) first. d == 0 raises
    // std::invalid_argument, n > limit() std::out_of_range.
    uint64_t count_primes_in_class(int64_t a, uint64_t d, uint64_t n) const;

    // pi(limit): total number of primes stored.
    uint64_t prime_count() const;

    uint64_t store_bytes() const { return words_.size() * sizeof(uint64_t); }

    // -------------------------------------------------------
    // Raw bit view, for word-at-a-time consumers (the partition
    // counting kernel). Bit j covers the odd number 2*j + 3; bits
    // at or beyond odd_bits() are zero.
    // -------------------------------------------------------
    const uint64_t* words() const { return words_.data(); }
    uint64_t word_count() const { return words_.size(); }
    uint64_t odd_bits() const { return odd_bits_; }

    // Unchecked bit test for odd n in [3, limit].
    bool test_odd(uint64_t n) const {
        return (words_[(n - 3) >> 7] >> (((n - 3) >> 1) & 63)) & 1u;
    }

private:
    uint64_t limit_;
    uint64_t odd_bits_;
    std::vector<uint64_t> words_;

    bool bit(uint64_t j) const { return (words_[j >> 6] >> (j & 63)) & 1u; }
    void sieve_segment(uint64_t word_lo, uint64_t word_hi,
                       const std::vector<uint64_t>& base_primes);
};

} // namespace goldbach
