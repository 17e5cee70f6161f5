// SPDX-License-Identifier: Apache-2.0
#include "tqu/relations.hpp"

#include <algorithm>
#include <cmath>

namespace tqu {

ObservablePair::ObservablePair(const PauliAxis& a, const PauliAxis& b)
    : a_(a), b_(b), dot_ab_(dot(a.vec(), b.vec())),
      cross_norm_sq_(norm_sq(cross(a.vec(), b.vec()))) {}

UncertaintyPoint make_point(const BlochVector& state, const ObservablePair& pair) {
    UncertaintyPoint p;
    p.exp_a = expectation(state, pair.a());
    p.exp_b = expectation(state, pair.b());
    p.sd_a = std_dev(p.exp_a);
    p.sd_b = std_dev(p.exp_b);
    p.h_a = shannon_entropy(p.exp_a);
    p.h_b = shannon_entropy(p.exp_b);
    p.r = state.r();
    const Vec3& n = state.vec();
    p.theta = p.r > 0.0 ? std::acos(std::clamp(n.z / p.r, -1.0, 1.0)) : 0.0;
    p.phi = (n.x != 0.0 || n.y != 0.0) ? std::atan2(n.y, n.x) : 0.0;
    return p;
}

UncertaintyPoint make_point(const PreparationSetting& s, const ObservablePair& pair) {
    UncertaintyPoint p = make_point(state_from_setting(s), pair);
    p.r = s.r;
    p.theta = s.theta;
    p.phi = s.phi;
    return p;
}

namespace {

RelationReport finish_upper(double lhs, double mid, double outer) {
    RelationReport rep;
    rep.lhs = lhs;
    rep.mid_bound = mid;
    rep.outer_bound = outer;
    rep.slack = mid - lhs;
    rep.satisfied = lhs <= mid + kSaturationTol && mid <= outer + kSaturationTol;
    rep.saturates_mid = std::abs(mid - lhs) <= kSaturationTol;
    rep.saturates_outer = std::abs(outer - lhs) <= kSaturationTol;
    return rep;
}

}  // namespace

RelationReport check_expectation_relation(const BlochVector& state,
                                          const ObservablePair& pair) {
    const double ea = expectation(state, pair.a());
    const double eb = expectation(state, pair.b());
    const double lhs = norm_sq(ea * pair.a().vec() - eb * pair.b().vec());
    const double outer = 1.0 - pair.dot_ab() * pair.dot_ab();
    return finish_upper(lhs, outer * norm_sq(state.vec()), outer);
}

RelationReport check_stddev_relation(const BlochVector& state,
                                     const ObservablePair& pair) {
    const double ea = expectation(state, pair.a());
    const double eb = expectation(state, pair.b());
    const double va = 1.0 - ea * ea;  // DA^2
    const double vb = 1.0 - eb * eb;
    const double lhs = va + vb +
        2.0 * std::abs(pair.dot_ab()) * std::sqrt(std::max(0.0, 1.0 - va)) *
            std::sqrt(std::max(0.0, 1.0 - vb));

    const double c2 = pair.dot_ab() * pair.dot_ab();
    const double mid = 2.0 - (1.0 - c2) * norm_sq(state.vec());
    const double outer = 1.0 + c2;

    RelationReport rep;
    rep.lhs = lhs;
    rep.mid_bound = mid;
    rep.outer_bound = outer;
    rep.slack = lhs - mid;
    rep.satisfied = lhs >= mid - kSaturationTol && mid >= outer - kSaturationTol;
    rep.saturates_mid = std::abs(lhs - mid) <= kSaturationTol;
    rep.saturates_outer = std::abs(lhs - outer) <= kSaturationTol;
    return rep;
}

RelationReport check_entropy_relation(const BlochVector& state,
                                      const ObservablePair& pair) {
    const double fa = f_of_entropy(shannon_entropy(expectation(state, pair.a())));
    const double fb = f_of_entropy(shannon_entropy(expectation(state, pair.b())));
    const double lhs = fa * fa + fb * fb - 2.0 * std::abs(pair.dot_ab()) * fa * fb;
    const double outer = 1.0 - pair.dot_ab() * pair.dot_ab();
    return finish_upper(lhs, outer * norm_sq(state.vec()), outer);
}

double robertson_bound(const BlochVector& state, const ObservablePair& pair) {
    return std::abs(dot(cross(pair.a().vec(), pair.b().vec()), state.vec()));
}

double schroedinger_bound(const BlochVector& state, const ObservablePair& pair) {
    const double cov = pair.dot_ab() -
        expectation(state, pair.a()) * expectation(state, pair.b());
    const double comm = dot(cross(pair.a().vec(), pair.b().vec()), state.vec());
    return cov * cov + comm * comm;
}

double maassen_uffink_bound(const ObservablePair& pair) {
    // -2 log2 sqrt((1+|a.b|)/2) = -log2((1+|a.b|)/2)
    return -std::log2(0.5 * (1.0 + std::abs(pair.dot_ab())));
}

}  // namespace tqu
