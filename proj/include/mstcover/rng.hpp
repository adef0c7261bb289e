#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace mstcover {

// Seeded generator with a portable uniform draw: raw mt19937_64 output
// reduced by modulo rejection. std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries; this is, so a seed
// reproduces the same instance everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in 0..bound-1.
    int below(int bound) {
        if (bound < 1) {
            throw std::invalid_argument("random bound must be positive");
        }
        std::uint64_t span = static_cast<std::uint64_t>(bound);
        std::uint64_t excess = (0 - span) % span; // 2^64 mod span
        std::uint64_t cutoff = 0 - excess;        // draws below this are unbiased
        for (;;) {
            std::uint64_t draw = engine_();
            if (excess == 0 || draw < cutoff) {
                return static_cast<int>(draw % span);
            }
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mstcover
