// partition.hpp
// Goldbach partitions of even integers: the solution set S(m) of unordered
// prime pairs summing to m, the partition count w(m), the difference
// function Z on ordered pairs, comet series over a range, and the running
// record (champion) sequence.

#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "goldbach/sieve.hpp"

namespace goldbach {

// Unordered prime pair in canonical form, p <= q.
struct GoldbachPair {
    uint64_t p;
    uint64_t q;
    friend bool operator==(const GoldbachPair&, const GoldbachPair&) = default;
};

// All pairs with p + q == m, sorted ascending by p. The primes appearing
// across pairs are symmetric under p -> m - p.
struct SolutionSet {
    uint64_t m;
    std::vector<GoldbachPair> pairs;
};

struct CometRow {
    uint64_t m;
    uint64_t w;
    friend bool operator==(const CometRow&, const CometRow&) = default;
};

// One row per even m in [4, max], in increasing m.
struct CometSeries {
    std::vector<CometRow> rows;
};

// An even integer whose partition count strictly exceeds that of every
// smaller even integer in the scanned range.
struct ChampionRecord {
    uint64_t m;
    uint64_t w;
    uint64_t prior_record; // running maximum before m; strictly below w
    friend bool operator==(const ChampionRecord&, const ChampionRecord&) = default;
};

// Z(x, y) = x - y, overflow-checked.
int64_t z_value(int64_t x, int64_t y);

// Two ordered pairs are equivalent when their differences agree.
bool z_equivalent(std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b);

// Enumerate S(m). m must be even and in [4, sieve.limit()]; an odd or
// too-small m raises std::invalid_argument, m > limit std::out_of_range.
SolutionSet solution_set(const PrimeSieve& sieve, uint64_t m);

// w(m) = |S(m)| without materializing the pairs.
uint64_t partition_count(const PrimeSieve& sieve, uint64_t m);

// Counts for every even m in [4, max]. Uses a word-parallel kernel over
// the sieve's bit store; rows may be computed by several workers but are
// always emitted in increasing m. max must be even, in [4, sieve.limit()].
CometSeries comet(const PrimeSieve& sieve, uint64_t max, unsigned threads = 1);

// Record-setting (m, w) pairs in scan order, starting at (4, 1). Strictly
// increasing in both m and w.
std::vector<ChampionRecord> champions(const PrimeSieve& sieve, uint64_t max,
                                      unsigned threads = 1);

} // namespace goldbach
