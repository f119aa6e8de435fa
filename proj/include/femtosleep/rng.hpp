#ifndef FEMTOSLEEP_RNG_HPP
#define FEMTOSLEEP_RNG_HPP

#include <cstdint>
#include <random>

#include "femtosleep/errors.hpp"

namespace femtosleep {

// splitmix64: stateless mixing used to derive independent substream
// seeds from (master seed, index). Simulation steps seeded this way
// draw identical values no matter what order they run in.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

// Deterministic random stream. Doubles are built from raw engine output
// rather than std::uniform_real_distribution so sequences are identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Poisson draw by Knuth's product-of-uniforms. Means above 30 are
    // split into chunks (a sum of independent Poissons is Poisson) so
    // exp(-mean) never underflows.
    int poisson(double mean) {
        if (!(mean >= 0.0)) {
            throw InvalidParameterError("poisson: mean must be >= 0");
        }
        int total = 0;
        while (mean > 30.0) {
            total += poisson_knuth(30.0);
            mean -= 30.0;
        }
        return total + poisson_knuth(mean);
    }

private:
    int poisson_knuth(double mean) {
        if (mean == 0.0) return 0;
        const double limit = std::exp(-mean);
        double prod = 1.0;
        int k = -1;
        do {
            ++k;
            prod *= uniform();
        } while (prod > limit);
        return k;
    }

    std::mt19937_64 engine_;
};

}  // namespace femtosleep

#endif
