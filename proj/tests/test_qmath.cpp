// SPDX-License-Identifier: Apache-2.0
#include "tqu/qmath.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tqu;

namespace {

// Independent oracle: invert h2 by plain bisection on [0, 1/2] using the
// textbook entropy formula, no shared code with the implementation.
double oracle_h2(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double oracle_h2_inverse(double h) {
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (oracle_h2(mid) < h ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("expectation values") {
    CHECK(expectation(BlochVector{0, 0, 1}, PauliAxis{0, 0, 1}) == doctest::Approx(1.0));
    CHECK(expectation(BlochVector{0, 0.83, 0}, PauliAxis{0, 0, 1}) == doctest::Approx(0.0));
    const double s3 = std::sqrt(3.0) / 2.0;
    CHECK(expectation(BlochVector{0, s3, 0.5}, PauliAxis{0, s3, 0.5}) ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(PauliAxis(0, 0, 2), InvalidObservable);
    CHECK_THROWS_AS(BlochVector(0, 0, 1.5), UnphysicalState);
}

TEST_CASE("std_dev") {
    CHECK(std_dev(1.0) == doctest::Approx(0.0));
    CHECK(std_dev(0.0) == doctest::Approx(1.0));
    CHECK(std_dev(std::sqrt(3.0) / 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(std_dev(1.1), DomainError);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.75) == doctest::Approx(0.811278124459).epsilon(1e-10));
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("shannon entropy of a Pauli measurement") {
    CHECK(shannon_entropy(1.0) == 0.0);
    CHECK(shannon_entropy(0.0) == doctest::Approx(1.0));
    // 0.3545789... = h2((1 + sqrt(3)/2)/2); quoted in the literature as 0.35
    CHECK(shannon_entropy(std::sqrt(3.0) / 2.0) ==
          doctest::Approx(0.354578902665).epsilon(1e-9));
    CHECK(shannon_entropy(0.5) == shannon_entropy(-0.5));
}

TEST_CASE("inverse binary entropy against bisection oracle") {
    CHECK(binary_entropy_inverse(1.0) == doctest::Approx(0.5));
    CHECK(binary_entropy_inverse(0.0) == 0.0);
    CHECK(binary_entropy_inverse(0.811278124459) == doctest::Approx(0.25).epsilon(1e-10));

    for (int i = 0; i <= 200; ++i) {
        const double h = double(i) / 200.0;
        const double p = binary_entropy_inverse(h);
        // compare residuals in entropy space: h2 is flat near p = 1/2, so a
        // p-space comparison is ill-conditioned as h -> 1
        CHECK(std::abs(oracle_h2(p) - h) <= 1e-10);
        CHECK(std::abs(oracle_h2(oracle_h2_inverse(h)) - h) <= 1e-10);
    }

    // monotone
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double p = binary_entropy_inverse(double(i) / 1000.0);
        CHECK(p >= prev);
        prev = p;
    }
    CHECK_THROWS_AS(binary_entropy_inverse(1.5), DomainError);
}

TEST_CASE("f_of_entropy") {
    CHECK(f_of_entropy(0.0) == doctest::Approx(1.0));
    CHECK(f_of_entropy(1.0) == doctest::Approx(0.0));
    CHECK(f_of_entropy(0.354578902665) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));

    // f(H(e)) = |e|
    for (int i = -100; i <= 100; ++i) {
        const double e = double(i) / 100.0;
        CHECK(f_of_entropy(shannon_entropy(e)) == doctest::Approx(std::abs(e)).epsilon(1e-9));
    }
}

TEST_CASE("state preparation") {
    auto n1 = state_from_setting({1.0, 0.0, M_PI / 2.0}).vec();
    CHECK(n1.x == doctest::Approx(0.0));
    CHECK(n1.y == doctest::Approx(0.0));
    CHECK(n1.z == doctest::Approx(1.0));

    auto n2 = state_from_setting({1.0, M_PI / 2.0, M_PI}).vec();
    CHECK(n2.x == doctest::Approx(-1.0));
    CHECK(std::abs(n2.y) < 1e-12);
    CHECK(std::abs(n2.z) < 1e-12);

    auto n3 = state_from_setting({0.94, M_PI / 2.0, M_PI / 2.0}).vec();
    CHECK(n3.y == doctest::Approx(0.94).epsilon(1e-12));

    CHECK_THROWS_AS(state_from_setting({1.5, 0.0, 0.0}), DomainError);
}

TEST_CASE("spherical formula agrees with the unitary chain") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        PreparationSetting s{uni(rng), uni(rng) * 2.0 * M_PI,
                             uni(rng) * 2.0 * M_PI};
        const Vec3 a = state_from_setting(s).vec();
        const Vec3 b = state_from_setting_unitary(s).vec();
        CHECK(std::abs(a.x - b.x) < 1e-12);
        CHECK(std::abs(a.y - b.y) < 1e-12);
        CHECK(std::abs(a.z - b.z) < 1e-12);
        CHECK(norm(a) == doctest::Approx(s.r).epsilon(1e-12));
    }
}

TEST_CASE("variance identity and density-matrix physicality") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Vec3 dir = normalized({uni(rng), uni(rng), uni(rng)});
        const double r = 0.5 * (uni(rng) + 1.0);
        BlochVector n{r * dir};
        PauliAxis a{normalized({uni(rng), uni(rng), uni(rng)})};
        const double e = expectation(n, a);
        const double sd = std_dev(e);
        CHECK(std::abs(sd * sd + e * e - 1.0) < 1e-12);
        // eigenvalues of (1 + n.sigma)/2 are (1 +- |n|)/2
        CHECK(0.5 * (1.0 - n.r()) >= -1e-15);
        CHECK(0.5 * (1.0 + n.r()) <= 1.0 + 1e-15);
    }
}
