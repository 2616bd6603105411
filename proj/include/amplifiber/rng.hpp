#pragma once

#include <cstdint>
#include <random>

#include "amplifiber/rational.hpp"

namespace amplifiber {

// Derives the seed for an independent sample stream from a master seed, so
// per-sample work can run in any order (or concurrently) with reproducible
// results.  splitmix64 finalizer.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
    uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bits() { return gen_(); }

    // Uniform integer in [lo, hi], both inclusive.  Plain modulo keeps the
    // stream identical across platforms; the tiny bias is irrelevant for
    // sampling test data.
    long uniform_int(long lo, long hi) {
        if (hi < lo) {
            throw ValidationError("uniform_int: empty range");
        }
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(gen_() % span);
    }

    // A positive rational with numerator in [1, num_hi] over the fixed
    // denominator.
    Rat positive_rat(long num_hi = 512, long den = 64) {
        Rat x(uniform_int(1, num_hi), den);
        x.canonicalize();
        return x;
    }

    // A rational in [-num_hi, num_hi] / den, used for generic directions
    // and generic chart points.
    Rat signed_rat(long num_hi = 512, long den = 64) {
        Rat x(uniform_int(-num_hi, num_hi), den);
        x.canonicalize();
        return x;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace amplifiber
