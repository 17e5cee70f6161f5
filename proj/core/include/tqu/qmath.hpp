// SPDX-License-Identifier: Apache-2.0
//
// Qubit state/observable algebra on the Bloch sphere, plus the scalar
// uncertainty measures (standard deviation, Shannon entropy of a Pauli
// measurement, inverse binary entropy).
#pragma once

#include "tqu/errors.hpp"
#include "tqu/vec3.hpp"

namespace tqu {

inline constexpr double kUnitTol = 1e-9;       // unit-axis / physicality checks
inline constexpr double kNumericTol = 1e-12;   // exact numeric identities

/// Bloch vector n of a qubit state rho = (1 + n.sigma)/2.  |n| <= 1;
/// |n| is the mixing parameter (degree of polarization) r.
class BlochVector {
  public:
    BlochVector() = default;
    explicit BlochVector(const Vec3& n);
    BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

    const Vec3& vec() const { return n_; }
    double r() const { return norm(n_); }

  private:
    Vec3 n_{};
};

/// Unit axis a of a Pauli observable A = a.sigma (eigenvalues +-1).
class PauliAxis {
  public:
    explicit PauliAxis(const Vec3& a);
    PauliAxis(double x, double y, double z) : PauliAxis(Vec3{x, y, z}) {}

    const Vec3& vec() const { return a_; }

  private:
    Vec3 a_;
};

/// (r, theta, phi) triple driving the preparation chain: polarization r,
/// precession angle theta in the coil, guide-field azimuth phi.
struct PreparationSetting {
    double r = 1.0;
    double theta = 0.0;  // radians
    double phi = 0.0;    // radians
};

/// <A> = a.n for rho = (1 + n.sigma)/2.
double expectation(const BlochVector& state, const PauliAxis& obs);

/// Delta A = sqrt(1 - <A>^2); Pauli observables square to identity.
double std_dev(double exp_val);

/// h2(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 := 0.
double binary_entropy(double p);

/// H(A) = h2((1 + <A>)/2).  Even in exp_val.
double shannon_entropy(double exp_val);

/// Unique p in [0, 1/2] with h2(p) = h, to 1e-12.  Bisection with a final
/// Newton polish; plain Newton is unsafe since h2' diverges at 0.
double binary_entropy_inverse(double h);

/// f(x) = 1 - 2 h2^{-1}(x); maps an entropy back to |expectation|.
double f_of_entropy(double h);

/// Bloch vector prepared by setting s:
///   n = r (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
/// Normative definition; state_from_setting_unitary reproduces it through
/// the explicit coil + guide-field conjugation chain.
BlochVector state_from_setting(const PreparationSetting& s);

/// Same state via 2x2 unitary conjugation of (1 + r sigma_z)/2 by the
/// Larmor rotations of the coil (about x) and the guide field (about z).
/// Agrees with state_from_setting to 1e-12 componentwise.
BlochVector state_from_setting_unitary(const PreparationSetting& s);

}  // namespace tqu
