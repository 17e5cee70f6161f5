// SPDX-License-Identifier: Apache-2.0
//
// Figure dataset emission: theoretical boundary curves (and optional
// simulated points) written as CSV, one file per (figure, r, family).
#pragma once

#include "tqu/boundary.hpp"
#include "tqu/polsim.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tqu {

enum class FigureId {
    Fig3a, Fig3b, Fig3c,   // a.b = 0, pure states: EV / SD / entropy planes
    Fig4a, Fig4b, Fig4c,   // a.b = 1/2, pure states
    Fig6a, Fig6b,          // EV, r in {0.83, 0.94, 0.99}
    Fig7a, Fig7b,          // SD
    Fig8a, Fig8b,          // entropy
};

std::optional<FigureId> parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);

struct SimulationRequest {
    std::uint64_t counts_per_projector;
    std::uint64_t seed;
};

struct FigureSpec {
    FigureId figure_id;
    std::vector<double> r_list;  // empty -> figure default
    std::size_t num_points = 360;
    std::optional<SimulationRequest> simulate;
};

/// Observable pair used by a figure: a = z with b = y (a.b = 0) for the
/// 3/6a/7a/8a group, b = (0, sqrt(3)/2, 1/2) (a.b = 1/2) otherwise.
ObservablePair figure_pair(FigureId id);

/// Boundary families drawn in a figure: the great circle alone for the
/// expectation-value planes, plus the closing arcs for SD/entropy planes.
std::vector<FamilyKind> figure_families(FigureId id);

std::vector<double> figure_default_r_list(FigureId id);

BoundaryFamily make_family(FamilyKind kind, const ObservablePair& pair, double r,
                           std::size_t num_points);

/// CSV columns: family,r,theta_rad,phi_rad,exp_a,exp_b,sd_a,sd_b,h_a,h_b
/// plus est_*/err_* pairs when simulated points are attached.  Values are
/// printed with 12 significant digits.
void write_family_csv(std::ostream& os, const BoundaryFamily& family,
                      const std::vector<EstimatedPoint>* simulated = nullptr);

struct EmittedFile {
    std::string path;
    FamilyKind family;
    double r;
};

/// Writes every (r, family) dataset of the figure into out_dir, returning
/// the files written.  File names follow fig<id>_r<value>_<family>.csv.
std::vector<EmittedFile> emit_figure(const FigureSpec& spec,
                                     const std::string& out_dir);

}  // namespace tqu
