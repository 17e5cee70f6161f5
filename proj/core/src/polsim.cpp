// SPDX-License-Identifier: Apache-2.0
#include "tqu/polsim.hpp"

#include <cmath>

namespace tqu {

double intensity(const BlochVector& state, const AnalyzerSetting& analyzer) {
    const double proj = dot(state.vec(), analyzer.axis.vec());
    return 0.5 * (1.0 + (analyzer.sign == Sign::plus ? proj : -proj));
}

std::vector<CountRecord> simulate_counts(const ExperimentConfig& config) {
    if (config.counts_per_projector < 1)
        throw ConfigError("counts_per_projector must be >= 1");
    if (config.r < 0.0 || config.r > 1.0)
        throw ConfigError("polarization r outside [0,1]");

    const double n0 = double(config.counts_per_projector);
    std::vector<CountRecord> records;
    records.reserve(config.settings.size());

    for (std::size_t i = 0; i < config.settings.size(); ++i) {
        PreparationSetting s = config.settings[i];
        s.r = config.r;
        const BlochVector state = state_from_setting(s);

        // Fixed draw order: A+, A-, B+, B-.
        auto rng = substream(config.seed, i);
        auto draw = [&](const PauliAxis& axis, Sign sign) {
            const double mean =
                n0 * intensity(state, {axis, sign}) + config.background;
            return poisson_sample(rng, mean);
        };

        CountRecord rec{s};
        rec.a_plus = draw(config.pair.a(), Sign::plus);
        rec.a_minus = draw(config.pair.a(), Sign::minus);
        rec.b_plus = draw(config.pair.b(), Sign::plus);
        rec.b_minus = draw(config.pair.b(), Sign::minus);
        records.push_back(rec);
    }
    return records;
}

namespace {

constexpr double kClamp = 1.0 - 1e-9;

struct ChannelEstimate {
    double e, err_e, sd, err_sd, h, err_h;
    bool clamped;
};

ChannelEstimate estimate_channel(std::uint64_t n_plus, std::uint64_t n_minus) {
    const double np = double(n_plus), nm = double(n_minus);
    const double total = np + nm;
    if (total <= 0.0)
        throw ZeroCounts("no counts recorded for observable");

    ChannelEstimate c{};
    c.e = (np - nm) / total;
    c.err_e = 2.0 * std::sqrt(np * nm / (total * total * total));
    c.sd = std_dev(c.e);
    c.h = shannon_entropy(c.e);

    // Derivatives diverge as |e| -> 1; clamp before differentiating and
    // flag the estimate as sitting on the boundary.
    double ec = c.e;
    if (std::abs(ec) > kClamp) {
        ec = std::copysign(kClamp, ec);
        c.clamped = true;
    }
    const double d_sd = -ec / std::sqrt(1.0 - ec * ec);
    const double d_h = 0.5 * std::log2((1.0 - ec) / (1.0 + ec));
    c.err_sd = std::abs(d_sd) * c.err_e;
    c.err_h = std::abs(d_h) * c.err_e;
    return c;
}

}  // namespace

EstimatedPoint estimate_point(const CountRecord& rec) {
    const ChannelEstimate a = estimate_channel(rec.a_plus, rec.a_minus);
    const ChannelEstimate b = estimate_channel(rec.b_plus, rec.b_minus);

    EstimatedPoint p;
    p.value.exp_a = a.e;
    p.value.exp_b = b.e;
    p.value.sd_a = a.sd;
    p.value.sd_b = b.sd;
    p.value.h_a = a.h;
    p.value.h_b = b.h;
    p.value.r = rec.setting.r;
    p.value.theta = rec.setting.theta;
    p.value.phi = rec.setting.phi;
    p.err_exp_a = a.err_e;
    p.err_exp_b = b.err_e;
    p.err_sd_a = a.err_sd;
    p.err_sd_b = b.err_sd;
    p.err_h_a = a.err_h;
    p.err_h_b = b.err_h;
    p.boundary_a = a.clamped;
    p.boundary_b = b.clamped;
    return p;
}

std::vector<EstimatedPoint> run_experiment(const ExperimentConfig& config) {
    std::vector<EstimatedPoint> out;
    const auto records = simulate_counts(config);
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(estimate_point(rec));
    return out;
}

}  // namespace tqu
