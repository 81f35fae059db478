// partition.cpp
// Solution sets, partition counts, comet series, champion records.
//
// Two independent routes compute w(m). solution_set and partition_count
// walk candidate primes bit by bit; comet uses a word-parallel kernel:
// with the sieve's odd bitset A (bit j is the odd number 2j+3) and an even
// m >= 6, the odd pairs p + q = m map to index pairs (i, M - i) with
// M = (m - 6) / 2, so
//
//     w(m) = sum over i in [0, floor(M/2)] of A[i] * A[M - i].
//
// A bit-reversed copy R of A (R[r] = A[NB - 1 - r], NB the padded bit
// span) turns A[M - i] into the linear read R[i + s0], s0 = NB - 1 - M,
// and the sum becomes 64 products per popcount.

#include "goldbach/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "goldbach/checked.hpp"

namespace goldbach {
namespace {

void require_even_target(const PrimeSieve& sieve, uint64_t m) {
    if (m < 4 || (m & 1))
        throw std::invalid_argument("Goldbach target must be an even integer >= 4, got " +
                                    std::to_string(m));
    if (m > sieve.limit())
        throw std::out_of_range("target " + std::to_string(m) +
                                " beyond sieve limit " + std::to_string(sieve.limit()));
}

uint64_t reverse_word(uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555u) | ((v & 0x5555555555555555u) << 1);
    v = ((v >> 2) & 0x3333333333333333u) | ((v & 0x3333333333333333u) << 2);
    v = ((v >> 4) & 0x0f0f0f0f0f0f0f0fu) | ((v & 0x0f0f0f0f0f0f0f0fu) << 4);
    return __builtin_bswap64(v);
}

// Bit-reversed image of the sieve store, padded with one zero word so the
// kernel's unaligned reads never run off the end.
struct ReversedStore {
    std::vector<uint64_t> words;
    uint64_t nb;

    explicit ReversedStore(const PrimeSieve& sieve)
        : words(sieve.word_count() + 1, 0), nb(sieve.word_count() * 64) {
        const uint64_t* src = sieve.words();
        const uint64_t wc = sieve.word_count();
        for (uint64_t k = 0; k < wc; ++k) words[k] = reverse_word(src[wc - 1 - k]);
    }
};

// Pairs of odd primes summing to m, for even m >= 6 within the sieve.
uint64_t odd_pair_count(const uint64_t* fwd, const ReversedStore& rev, uint64_t m) {
    const uint64_t M = (m - 6) / 2;
    const uint64_t L = M / 2; // p <= q cuts the index range in half
    const uint64_t s0 = rev.nb - 1 - M;
    const uint64_t last_chunk = L >> 6;
    const unsigned off = static_cast<unsigned>(s0 & 63);
    uint64_t wi = s0 >> 6;
    uint64_t total = 0;
    for (uint64_t c = 0; c <= last_chunk; ++c, ++wi) {
        uint64_t y = rev.words[wi] >> off;
        if (off) y |= rev.words[wi + 1] << (64 - off);
        uint64_t hits = fwd[c] & y;
        if (c == last_chunk) {
            const unsigned top = static_cast<unsigned>(L & 63);
            if (top != 63) hits &= (uint64_t{1} << (top + 1)) - 1;
        }
        total += static_cast<unsigned>(std::popcount(hits));
    }
    return total;
}

} // namespace

int64_t z_value(int64_t x, int64_t y) { return checked_sub(x, y); }

bool z_equivalent(std::pair<int64_t, int64_t> a, std::pair<int64_t, int64_t> b) {
    return z_value(a.first, a.second) == z_value(b.first, b.second);
}

SolutionSet solution_set(const PrimeSieve& sieve, uint64_t m) {
    require_even_target(sieve, m);
    SolutionSet s{m, {}};
    if (m == 4) {
        s.pairs.push_back({2, 2});
        return s;
    }
    // p = 2 forces q = m - 2 even and > 2, never prime
    for (uint64_t p = 3; p <= m - p; p += 2)
        if (sieve.test_odd(p) && sieve.test_odd(m - p)) s.pairs.push_back({p, m - p});
    return s;
}

uint64_t partition_count(const PrimeSieve& sieve, uint64_t m) {
    require_even_target(sieve, m);
    if (m == 4) return 1;
    uint64_t count = 0;
    for (uint64_t p = 3; p <= m - p; p += 2)
        if (sieve.test_odd(p) && sieve.test_odd(m - p)) ++count;
    return count;
}

CometSeries comet(const PrimeSieve& sieve, uint64_t max, unsigned threads) {
    require_even_target(sieve, max);
    CometSeries series;
    const uint64_t n_rows = (max - 4) / 2 + 1;
    series.rows.resize(n_rows);
    series.rows[0] = {4, 1};
    if (n_rows == 1) return series;

    const ReversedStore rev(sieve);
    const uint64_t* fwd = sieve.words();
    auto run = [&](uint64_t first_row, uint64_t stride) {
        for (uint64_t r = first_row; r < n_rows; r += stride) {
            const uint64_t m = 4 + 2 * r;
            series.rows[r] = {m, odd_pair_count(fwd, rev, m)};
        }
    };

    unsigned t = threads ? threads : std::thread::hardware_concurrency();
    t = std::max<unsigned>(1, std::min<uint64_t>(t, n_rows - 1));
    if (t == 1) {
        run(1, 1);
        return series;
    }
    // strided rows keep the per-thread work even; writes stay disjoint
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(run, 1 + i, t);
    for (auto& th : pool) th.join();
    return series;
}

std::vector<ChampionRecord> champions(const PrimeSieve& sieve, uint64_t max,
                                      unsigned threads) {
    const CometSeries series = comet(sieve, max, threads);
    std::vector<ChampionRecord> records;
    uint64_t best = 0;
    for (const CometRow& row : series.rows) {
        if (row.w > best) {
            records.push_back({row.m, row.w, best});
            best = row.w;
        }
    }
    return records;
}

} // namespace goldbach
