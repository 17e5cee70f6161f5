// SPDX-License-Identifier: Apache-2.0
#include "tqu/qmath.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace tqu {

namespace {

double log2_safe(double x) { return x > 0.0 ? std::log2(x) : 0.0; }

using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Mat2 dagger(const Mat2& a) {
    return {{{std::conj(a[0][0]), std::conj(a[1][0])},
             {std::conj(a[0][1]), std::conj(a[1][1])}}};
}

// exp(i alpha sigma_x) = cos(alpha) I + i sin(alpha) sigma_x
Mat2 exp_i_sigma_x(double alpha) {
    const C c{std::cos(alpha), 0.0};
    const C is{0.0, std::sin(alpha)};
    return {{{c, is}, {is, c}}};
}

// exp(i alpha sigma_z) = diag(e^{i alpha}, e^{-i alpha})
Mat2 exp_i_sigma_z(double alpha) {
    return {{{std::polar(1.0, alpha), C{}}, {C{}, std::polar(1.0, -alpha)}}};
}

}  // namespace

BlochVector::BlochVector(const Vec3& n) : n_(n) {
    if (norm(n) > 1.0 + kUnitTol)
        throw UnphysicalState("Bloch vector norm exceeds 1");
}

PauliAxis::PauliAxis(const Vec3& a) : a_(a) {
    if (std::abs(norm(a) - 1.0) > kUnitTol)
        throw InvalidObservable("Pauli axis must be unit length");
}

double expectation(const BlochVector& state, const PauliAxis& obs) {
    return dot(state.vec(), obs.vec());
}

double std_dev(double exp_val) {
    if (std::abs(exp_val) > 1.0)
        throw DomainError("expectation value outside [-1,1]");
    return std::sqrt(std::max(0.0, 1.0 - exp_val * exp_val));
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0)
        throw DomainError("binary_entropy argument outside [0,1]");
    return -p * log2_safe(p) - (1.0 - p) * log2_safe(1.0 - p);
}

double shannon_entropy(double exp_val) {
    if (std::abs(exp_val) > 1.0)
        throw DomainError("expectation value outside [-1,1]");
    return binary_entropy(0.5 * (1.0 + exp_val));
}

double binary_entropy_inverse(double h) {
    if (h < 0.0 || h > 1.0)
        throw DomainError("binary_entropy_inverse argument outside [0,1]");
    if (h == 0.0) return 0.0;
    if (h == 1.0) return 0.5;

    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (binary_entropy(mid) < h ? lo : hi) = mid;
    }
    double p = 0.5 * (lo + hi);

    // Newton polish; derivative is well behaved away from 0.
    if (p > 1e-6 && p < 0.5 - 1e-12) {
        const double dp = std::log2((1.0 - p) / p);
        if (dp > 0.0) {
            const double q = p + (h - binary_entropy(p)) / dp;
            if (q > lo && q < hi) p = q;
        }
    }
    return p;
}

double f_of_entropy(double h) {
    return 1.0 - 2.0 * binary_entropy_inverse(h);
}

BlochVector state_from_setting(const PreparationSetting& s) {
    if (s.r < 0.0 || s.r > 1.0)
        throw DomainError("polarization r outside [0,1]");
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    return BlochVector{s.r * Vec3{st * std::cos(s.phi), st * std::sin(s.phi), ct}};
}

BlochVector state_from_setting_unitary(const PreparationSetting& s) {
    if (s.r < 0.0 || s.r > 1.0)
        throw DomainError("polarization r outside [0,1]");

    // rho_in = U_gf^dag U_dc^dag rho_z U_dc U_gf with U_dc = exp(-i theta sigma_x / 2)
    // and U_gf = exp(i (phi - pi/2) sigma_z / 2): the coil takes +z to the
    // y-z plane (+y at theta = pi/2), the guide field sets the azimuth.
    const Mat2 u_dc = exp_i_sigma_x(-0.5 * s.theta);
    const Mat2 u_gf = exp_i_sigma_z(0.5 * (s.phi - M_PI / 2.0));

    const Mat2 rho_z{{{C{0.5 * (1.0 + s.r), 0.0}, C{}},
                      {C{}, C{0.5 * (1.0 - s.r), 0.0}}}};
    const Mat2 u = mul(u_dc, u_gf);
    const Mat2 rho = mul(mul(dagger(u), rho_z), u);

    // n_k = Tr(rho sigma_k)
    const double nx = 2.0 * rho[0][1].real();
    const double ny = -2.0 * rho[0][1].imag();
    const double nz = (rho[0][0] - rho[1][1]).real();
    return BlochVector{Vec3{nx, ny, nz}};
}

}  // namespace tqu
