// SPDX-License-Identifier: Apache-2.0
#include "tqu/sampling.hpp"

#include <cmath>

namespace tqu {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Inversion by sequential search; exact for modest means.
std::uint64_t poisson_inversion(std::mt19937_64& rng, double mean) {
    const double q = std::exp(-mean);
    double p = 1.0;
    std::uint64_t k = 0;
    do {
        p *= 1.0 - uniform01(rng);  // (0,1] so the loop terminates
        ++k;
    } while (p > q);
    return k - 1;
}

// Hormann's PTRS transformed rejection, exact acceptance via lgamma.
std::uint64_t poisson_ptrs(std::mt19937_64& rng, double mean) {
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);

    while (true) {
        const double u = uniform01(rng) - 0.5;
        const double v = uniform01(rng);
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr && kf >= 0.0)
            return std::uint64_t(kf);
        if (kf < 0.0 || (us < 0.013 && v > us))
            continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * log_mean - mean - std::lgamma(kf + 1.0))
            return std::uint64_t(kf);
    }
}

}  // namespace

std::uint64_t poisson_sample(std::mt19937_64& rng, double mean) {
    if (mean <= 0.0) return 0;
    return mean < 30.0 ? poisson_inversion(rng, mean) : poisson_ptrs(rng, mean);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (index + 1));
    std::uint64_t init = splitmix64(s);
    return std::mt19937_64(init);
}

}  // namespace tqu
