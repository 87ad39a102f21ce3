#ifndef DIRRES_RNG_HPP_
#define DIRRES_RNG_HPP_

#include <cstdint>

namespace dirres {

// splitmix64 (Steele, Lea and Flood 2014): a 64-bit counter-based generator.
// Fixed here so generated edge lists and walk statistics are bit-identical
// across platforms and compilers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Stateless avalanche of the splitmix64 output function.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Independent stream seed for (seed, stream); used for per-walk substreams so
// aggregate statistics do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64::mix(seed ^ SplitMix64::mix(stream));
}

} // namespace dirres

#endif // DIRRES_RNG_HPP_
