// SPDX-License-Identifier: Apache-2.0
//
// Parameterized state families tracing the boundaries of the allowed-value
// regions: the great circle in span(a,b), the equatorial and closing arcs
// for the orthogonal configuration, and the circle perpendicular to b for
// tilted configurations.  Sweeps are deterministic so figure curves are
// reproducible bit-for-bit given (family, r, num_points).
#pragma once

#include "tqu/relations.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace tqu {

enum class FamilyKind {
    GreatCircleAB,     // pure/mixed states in span(a,b), full circle
    EquatorialArc,     // theta = pi/2, phi in [pi/2, pi]
    ClosingArc,        // phi = pi, theta in [0, pi/2]
    PerpendicularToB,  // great circle in the plane perpendicular to b
};

std::string_view family_name(FamilyKind kind);

struct BoundaryFamily {
    FamilyKind kind;
    ObservablePair config;
    double r;
    std::vector<PreparationSetting> settings;

    std::vector<UncertaintyPoint> points() const;
};

/// Sweeps theta over [0, 2pi) at phi = pi/2 (the y-z plane great circle).
/// Every point saturates the mid bound of the expectation-value relation.
BoundaryFamily great_circle_family(const ObservablePair& pair, double r,
                                   std::size_t num_points);

/// Sweeps phi over [pi/2, pi] at theta = pi/2; for a = z every point has
/// maximal Delta A (the vertical boundary segment).
BoundaryFamily equatorial_arc_family(const ObservablePair& pair, double r,
                                     std::size_t num_points);

/// Sweeps theta over [0, pi/2] at phi = pi; for b = y every point has
/// maximal Delta B (the horizontal boundary segment).
BoundaryFamily closing_arc_family(const ObservablePair& pair, double r,
                                  std::size_t num_points);

/// Quarter of the great circle with n perpendicular to b, so <B> = 0 along
/// the whole family.  Runs from the corner where both spreads are maximal
/// (n along (a x b)^, i.e. theta = pi/2, phi = pi for the paper
/// configurations) to the point of the circle closest to a.
BoundaryFamily perpendicular_circle_family(const ObservablePair& pair, double r,
                                           std::size_t num_points);

}  // namespace tqu
