#pragma once

#include <cstdint>

#include "unitdist/rational.hpp"

namespace unitdist {

// splitmix64: tiny, seedable, identical output on every platform. All
// randomized trial suites draw from this so a seed reproduces a run exactly.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive, via rejection.
    int64_t uniform(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<int64_t>(x % span);
    }

    bool coin() { return (next() & 1) != 0; }

    // num in [-max_num, max_num], den in [1, max_den].
    Rational rational(int64_t max_num, int64_t max_den) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    // Nonzero variant.
    Rational nonzero_rational(int64_t max_num, int64_t max_den) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    // Derives an independent stream, e.g. one per trial index.
    SplitMix64 fork(uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL));
    }

   private:
    uint64_t state_;
};

}  // namespace unitdist
