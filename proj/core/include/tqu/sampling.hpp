// SPDX-License-Identifier: Apache-2.0
//
// Deterministic sampling primitives.  mt19937_64 is fully specified by the
// standard, and the Poisson sampler below is fixed here, so streams are
// reproducible across platforms for a given seed.
#pragma once

#include <cstdint>
#include <random>

namespace tqu {

/// Uniform double in [0, 1) from the top 53 bits of the generator.
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

/// Poisson(mean) draw: sequential inversion for small means, Hormann's
/// transformed rejection (PTRS) with an exact log-pmf acceptance test for
/// large ones.
std::uint64_t poisson_sample(std::mt19937_64& rng, double mean);

/// Sub-generator for stream index `index` of a seeded experiment; distinct
/// indices give independent streams.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

}  // namespace tqu
