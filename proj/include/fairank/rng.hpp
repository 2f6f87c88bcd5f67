#ifndef FAIRANK_RNG_HPP
#define FAIRANK_RNG_HPP

#include <cstdint>
#include <random>

namespace fairank {

/**
 * Seedable generator with platform independent output.
 *
 * The engine is std::mt19937_64, whose sequence is fixed by the standard.
 * The standard distributions are implementation defined, so the integer and
 * real mappings are done here to keep samples bit-identical everywhere.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n), n > 0 (Lemire's nearly divisionless method).
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Seed used for replica k of a run started at base_seed.
inline constexpr std::uint64_t replica_seed(std::uint64_t base_seed, std::uint64_t k) noexcept {
    return base_seed + k;
}

} // namespace fairank

#endif // FAIRANK_RNG_HPP
