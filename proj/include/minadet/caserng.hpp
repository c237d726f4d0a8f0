#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "minadet/rat.hpp"

namespace minadet {

// Deterministic random case stream. mt19937_64 output is bit-exact across
// platforms; the derived draws below avoid std::uniform_int_distribution,
// whose value mapping is implementation-defined, so one seed produces one
// case stream everywhere.
class CaseRng {
public:
    explicit CaseRng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform on [lo, hi], both inclusive; unbiased rejection sampling.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 1) return lo;
        uint64_t limit = span * (UINT64_MAX / span);
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool percent(int p) { return uniform(1, 100) <= p; }

    // Numerators in [-9, 9], denominators in [1, 9].
    Rat small_rat() { return Rat(uniform(-9, 9), uniform(1, 9)); }

    Rat small_rat_nonzero() {
        for (;;) {
            Rat r = small_rat();
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace minadet
