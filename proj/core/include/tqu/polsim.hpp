// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo model of the neutron polarimeter: preparation chain, the four
// spin projectors per configuration, Poissonian counting and estimation of
// expectation values, standard deviations and entropies with statistical
// errors.
#pragma once

#include "tqu/relations.hpp"
#include "tqu/sampling.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tqu {

enum class Sign { plus, minus };

/// One analyzer configuration: projector P = (1 +- axis.sigma)/2.
struct AnalyzerSetting {
    PauliAxis axis;
    Sign sign;
};

struct ExperimentConfig {
    ObservablePair pair;
    double r = 1.0;
    std::vector<PreparationSetting> settings;
    std::uint64_t counts_per_projector = 100000;  // N0, expected counts at unit intensity
    std::uint64_t seed = 0;
    double background = 0.0;  // constant background counts per projector
};

/// Simulated counts for the four projectors (A+, A-, B+, B-) of one setting.
struct CountRecord {
    PreparationSetting setting;
    std::uint64_t a_plus = 0, a_minus = 0;
    std::uint64_t b_plus = 0, b_minus = 0;
};

/// Estimates with first-order propagated Poisson errors.  boundary_a /
/// boundary_b flag estimates clamped at |<X>| -> 1 where the sd/entropy
/// derivatives blow up.
struct EstimatedPoint {
    UncertaintyPoint value;
    double err_exp_a = 0.0, err_exp_b = 0.0;
    double err_sd_a = 0.0, err_sd_b = 0.0;
    double err_h_a = 0.0, err_h_b = 0.0;
    bool boundary_a = false, boundary_b = false;
};

/// I = Tr(rho P) = (1 +- n.axis)/2.
double intensity(const BlochVector& state, const AnalyzerSetting& analyzer);

/// Draws the four projector counts per setting independently from
/// Poisson(N0 * intensity).  Deterministic given (config.seed); each
/// setting uses its own substream so records are order-independent.
std::vector<CountRecord> simulate_counts(const ExperimentConfig& config);

/// Count-asymmetry estimator <X> = (N+ - N-)/(N+ + N-) with plug-in sd and
/// entropy estimates and first-order error propagation.
EstimatedPoint estimate_point(const CountRecord& rec);

/// state_from_setting -> simulate_counts -> estimate_point for every setting.
std::vector<EstimatedPoint> run_experiment(const ExperimentConfig& config);

}  // namespace tqu
