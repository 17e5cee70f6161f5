// SPDX-License-Identifier: Apache-2.0
//
// Tight preparation uncertainty relations for a pair of Pauli observables,
// in expectation-value, standard-deviation and entropy form, with the
// state-independent and partially state-dependent (r-dependent) bounds,
// plus the classical Robertson / Schroedinger / Maassen-Uffink bounds for
// comparison.
#pragma once

#include "tqu/qmath.hpp"

namespace tqu {

inline constexpr double kSaturationTol = 1e-9;

/// Pair of Pauli observables with cached geometry.
class ObservablePair {
  public:
    ObservablePair(const PauliAxis& a, const PauliAxis& b);

    const PauliAxis& a() const { return a_; }
    const PauliAxis& b() const { return b_; }
    double dot_ab() const { return dot_ab_; }
    double cross_norm_sq() const { return cross_norm_sq_; }

  private:
    PauliAxis a_, b_;
    double dot_ab_;
    double cross_norm_sq_;
};

/// Result of evaluating one relation for one state.  For the EV and entropy
/// forms the relation reads lhs <= mid_bound <= outer_bound; for the SD form
/// it is lhs >= mid_bound >= outer_bound.  slack is the signed distance from
/// lhs to the binding (mid) bound, non-negative when satisfied.
struct RelationReport {
    double lhs = 0.0;
    double mid_bound = 0.0;
    double outer_bound = 0.0;
    bool satisfied = false;
    bool saturates_mid = false;
    bool saturates_outer = false;
    double slack = 0.0;
};

/// The exp/sd/entropy view of one state against one observable pair.
struct UncertaintyPoint {
    double exp_a = 0.0, exp_b = 0.0;
    double sd_a = 0.0, sd_b = 0.0;
    double h_a = 0.0, h_b = 0.0;
    double r = 0.0;
    double theta = 0.0, phi = 0.0;
};

UncertaintyPoint make_point(const BlochVector& state, const ObservablePair& pair);
UncertaintyPoint make_point(const PreparationSetting& s, const ObservablePair& pair);

/// |<A> a - <B> b|^2  <=  (1 - (a.b)^2) r^2  <=  1 - (a.b)^2
RelationReport check_expectation_relation(const BlochVector& state,
                                          const ObservablePair& pair);

/// DA^2 + DB^2 + 2|a.b| sqrt(1-DA^2) sqrt(1-DB^2)
///     >=  2 - (1 - (a.b)^2) r^2  >=  1 + (a.b)^2
RelationReport check_stddev_relation(const BlochVector& state,
                                     const ObservablePair& pair);

/// f(H(A))^2 + f(H(B))^2 - 2|a.b| f(H(A)) f(H(B))
///     <=  (1 - (a.b)^2) r^2  <=  1 - (a.b)^2
RelationReport check_entropy_relation(const BlochVector& state,
                                      const ObservablePair& pair);

/// Robertson commutator bound: DA DB >= |(a x b) . n|.
double robertson_bound(const BlochVector& state, const ObservablePair& pair);

/// Schroedinger bound on DA^2 DB^2: (a.b - <A><B>)^2 + ((a x b).n)^2.
/// Uses the covariance form cov = <{A,B}>/2 - <A><B> = a.b - <A><B>.
double schroedinger_bound(const BlochVector& state, const ObservablePair& pair);

/// Maassen-Uffink entropic bound: H(A) + H(B) >= -2 log2 c,
/// c = sqrt((1 + |a.b|)/2) the maximum eigenvector overlap.
double maassen_uffink_bound(const ObservablePair& pair);

}  // namespace tqu
