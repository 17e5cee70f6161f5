// SPDX-License-Identifier: Apache-2.0
#include "tqu/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace tqu {

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::GreatCircleAB: return "great_circle";
        case FamilyKind::EquatorialArc: return "equatorial_arc";
        case FamilyKind::ClosingArc: return "closing_arc";
        case FamilyKind::PerpendicularToB: return "perpendicular_circle";
    }
    return "unknown";
}

std::vector<UncertaintyPoint> BoundaryFamily::points() const {
    std::vector<UncertaintyPoint> out;
    out.reserve(settings.size());
    for (const auto& s : settings) out.push_back(make_point(s, config));
    return out;
}

namespace {

void validate(double r, std::size_t num_points) {
    if (num_points < 2) throw ConfigError("family needs at least 2 points");
    if (r < 0.0 || r > 1.0) throw ConfigError("polarization r outside [0,1]");
}

/// Inclusive sweep of one angle over [lo, hi] with the other held fixed.
std::vector<PreparationSetting> sweep_theta(double r, double lo, double hi,
                                            double phi, std::size_t n) {
    std::vector<PreparationSetting> s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = {r, lo + (hi - lo) * double(i) / double(n - 1), phi};
    return s;
}

PreparationSetting setting_from_direction(const Vec3& w, double r) {
    return {r, std::acos(std::clamp(w.z, -1.0, 1.0)), std::atan2(w.y, w.x)};
}

}  // namespace

BoundaryFamily great_circle_family(const ObservablePair& pair, double r,
                                   std::size_t num_points) {
    validate(r, num_points);
    std::vector<PreparationSetting> s(num_points);
    for (std::size_t i = 0; i < num_points; ++i)
        s[i] = {r, 2.0 * M_PI * double(i) / double(num_points), M_PI / 2.0};
    return {FamilyKind::GreatCircleAB, pair, r, std::move(s)};
}

BoundaryFamily equatorial_arc_family(const ObservablePair& pair, double r,
                                     std::size_t num_points) {
    validate(r, num_points);
    std::vector<PreparationSetting> s(num_points);
    for (std::size_t i = 0; i < num_points; ++i)
        s[i] = {r, M_PI / 2.0,
                M_PI / 2.0 + (M_PI / 2.0) * double(i) / double(num_points - 1)};
    return {FamilyKind::EquatorialArc, pair, r, std::move(s)};
}

BoundaryFamily closing_arc_family(const ObservablePair& pair, double r,
                                  std::size_t num_points) {
    validate(r, num_points);
    return {FamilyKind::ClosingArc, pair, r,
            sweep_theta(r, 0.0, M_PI / 2.0, M_PI, num_points)};
}

BoundaryFamily perpendicular_circle_family(const ObservablePair& pair, double r,
                                           std::size_t num_points) {
    validate(r, num_points);
    if (pair.cross_norm_sq() < 1e-12)
        throw ConfigError("perpendicular circle undefined for parallel axes");

    // Quarter circle in the plane perpendicular to b, from (a x b)^ to the
    // in-plane direction closest to a.  For a = z, b = (0, s3/2, 1/2) this is
    // the paper trace theta: pi/2 -> pi/6 (chart angle), phi: pi -> -pi/2.
    const Vec3 u = normalized(cross(pair.a().vec(), pair.b().vec()));
    const Vec3 v = cross(pair.b().vec(), u);

    std::vector<PreparationSetting> s(num_points);
    for (std::size_t i = 0; i < num_points; ++i) {
        const double t = (M_PI / 2.0) * double(i) / double(num_points - 1);
        s[i] = setting_from_direction(u * std::cos(t) + v * std::sin(t), r);
    }
    return {FamilyKind::PerpendicularToB, pair, r, std::move(s)};
}

}  // namespace tqu
