#include <doctest.h>

#include "ellip/theta.hpp"
#include "support.hpp"

using namespace ellip;
using testing::relative;

namespace {

// Plain q-series with a fixed 50 terms, written independently of the library.
cplx theta_oracle(int j, cplx v, cplx tau) {
    cplx s = 0.0;
    for (int n = 0; n < 50; ++n) {
        const real h = n + 0.5;
        const cplx qh = std::exp(kI * kPi * tau * (h * h));
        const cplx qn = std::exp(kI * kPi * tau * real(n + 1) * real(n + 1));
        const real sign = n % 2 ? -1.0 : 1.0;
        switch (j) {
            case 1: s += 2.0 * sign * qh * std::sin(2.0 * h * kPi * v); break;
            case 2: s += 2.0 * qh * std::cos(2.0 * h * kPi * v); break;
            case 3: s += 2.0 * qn * std::cos(2.0 * (n + 1) * kPi * v); break;
            case 4: s += 2.0 * -sign * qn * std::cos(2.0 * (n + 1) * kPi * v); break;
        }
    }
    return j >= 3 ? 1.0 + s : s;
}

}  // namespace

TEST_CASE("theta1 vanishes at the origin") {
    testing::Rng rng(1);
    for (int i = 0; i < 20; ++i) CHECK(std::abs(theta(1, 0.0, LatticeTau(rng.tau()))) == 0.0);
}

TEST_CASE("half shift maps theta4 to theta3") {
    testing::Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const LatticeTau L(rng.tau());
        CHECK(relative(theta(4, 0.5, L), theta_null(3, L)) < 1e-14);
    }
}

TEST_CASE("theta3 null on the square lattice") {
    const LatticeTau L(kI);
    TruncationPolicy fine;
    fine.eps = 1e-15;
    const cplx t3 = theta_null(3, L, fine);
    CHECK(relative(t3, theta_oracle(3, 0.0, kI)) < 1e-15);
    CHECK(relative(t3, std::pow(kPi, 0.25) / std::tgamma(0.75)) < 1e-14);
    CHECK(t3.real() == doctest::Approx(1.086434811213308).epsilon(1e-14));
}

TEST_CASE("series match the independent q-series") {
    testing::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const cplx v = rng.z(tau) / 2.0;
        for (int j = 1; j <= 4; ++j) CHECK(testing::residual(theta(j, v, LatticeTau(tau)), theta_oracle(j, v, tau)) < 1e-13);
    }
}

TEST_CASE("derivative of theta1 at zero against pi theta2 theta3 theta4") {
    testing::Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const LatticeTau L(rng.tau());
        const cplx lhs = theta1_prime0(L);
        const cplx rhs = kPi * theta_null(2, L) * theta_null(3, L) * theta_null(4, L);
        CHECK(relative(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("quartic relation of the null values") {
    testing::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const LatticeTau L(rng.tau());
        const cplx t2 = theta_null(2, L), t3 = theta_null(3, L), t4 = theta_null(4, L);
        CHECK(relative(std::pow(t3, 4), std::pow(t2, 4) + std::pow(t4, 4)) < 1e-12);
    }
}

TEST_CASE("null values under tau -> tau + 2") {
    testing::Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        const cplx tau = rng.tau();
        const LatticeTau L(tau), shifted(tau + 2.0);
        CHECK(relative(theta_null(3, shifted), theta_null(3, L)) < 1e-13);
        CHECK(relative(theta_null(4, shifted), theta_null(4, L)) < 1e-13);
        // q^{1/4} picks up exp(i pi / 2)
        CHECK(relative(theta_null(2, shifted), kI * theta_null(2, L)) < 1e-13);
    }
}

TEST_CASE("theta2 over theta3 at tau = i") {
    const LatticeTau L(kI);
    const cplx ratio = theta_null(2, L) / theta_null(3, L);
    const cplx oracle = theta_oracle(2, 0.0, kI) / theta_oracle(3, 0.0, kI);
    CHECK(relative(ratio, oracle) < 1e-14);
    CHECK(ratio.real() == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-14));
    CHECK(relative(ratio * ratio, cplx{std::sqrt(0.5)}) < 1e-14);
}

TEST_CASE("quasi-periodicity") {
    testing::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const cplx tau = rng.tau();
        const LatticeTau L(tau);
        const cplx v = rng.z(tau, 0.4) / 2.0;
        CHECK(testing::residual(theta(1, v + 1.0, L), -theta(1, v, L)) < 1e-13);
        const cplx factor = -std::exp(-kI * kPi * tau - 2.0 * kI * kPi * v);
        CHECK(relative(theta(1, v + tau, L), factor * theta(1, v, L)) < 1e-12);
        CHECK(relative(theta(3, v + tau, L), std::exp(-kI * kPi * tau - 2.0 * kI * kPi * v) * theta(3, v, L)) < 1e-12);
    }
}

TEST_CASE("product forms against the series") {
    testing::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const LatticeTau L(tau);
        const cplx v = rng.z(tau) / 2.0;
        CHECK(relative(theta_product(1, v, L), theta(1, v, L)) < 1e-10);
        CHECK(relative(theta_product(2, v, L), theta(2, v, L)) < 1e-10);
    }
    const LatticeTau L({0.1, 1.2});
    CHECK(std::abs(theta_product(1, 0.0, L)) == 0.0);
    CHECK(relative(theta_product(2, 0.0, L), theta_null(2, L)) < 1e-10);
}

TEST_CASE("theta derivative against a central difference") {
    const LatticeTau L({0.2, 1.1});
    const cplx v{0.21, 0.13};
    for (int j = 1; j <= 4; ++j) {
        const auto f = [&](cplx x) { return theta(j, x, L); };
        CHECK(std::abs(theta_prime(j, v, L) - testing::central_difference(f, v)) < 1e-8);
    }
}

TEST_CASE("index and convergence errors") {
    const LatticeTau L(kI);
    CHECK_THROWS_AS(theta(5, 0.1, L), Error);
    CHECK_THROWS_AS(theta_null(1, L), Error);
    CHECK_THROWS_AS(theta_product(3, 0.1, L), Error);
    TruncationPolicy small;
    small.k_max = 12;
    try {
        theta(3, cplx{0.0, 40.0}, L, small);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::truncation_overflow);
    }
}
