#include <doctest.h>

#include <thread>

#include "ellip/weierstrass.hpp"
#include "support.hpp"

using namespace ellip;
using testing::relative;
using testing::residual;

namespace {

// Row-summed lattice sum: each row {2m + 2n tau} collapses to a csc^2 term.
cplx wp_lattice_oracle(cplx z, cplx tau, int rows = 40) {
    const auto csc2 = [](cplx x) { return 1.0 / (std::sin(x) * std::sin(x)); };
    const real c = kPi * kPi / 4.0;
    cplx s = c * csc2(kPi * z / 2.0) - kPi * kPi / 12.0;
    for (int n = 1; n <= rows; ++n) {
        const cplx shift = 2.0 * real(n) * tau;
        s += c * (csc2(kPi * (z - shift) / 2.0) + csc2(kPi * (z + shift) / 2.0));
        s -= 2.0 * c * csc2(kPi * real(n) * tau);
    }
    return s;
}

}  // namespace

TEST_CASE("wp is even") {
    testing::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau);
        CHECK(residual(w.wp(-z), w.wp(z)) < 1e-13);
    }
}

TEST_CASE("wp at the real half-period is e1") {
    testing::Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        const Weierstrass w(rng.tau());
        CHECK(residual(w.wp(1.0), w.e(1)) < 1e-13);
        CHECK(residual(w.wp(w.omega(2)), w.e(2)) < 1e-12);
        CHECK(residual(w.wp(w.omega(3)), w.e(3)) < 1e-12);
    }
}

TEST_CASE("wp(0.5, i) against the lattice sum") {
    const Weierstrass w(kI);
    CHECK(relative(w.wp(0.5), wp_lattice_oracle(0.5, kI)) < 1e-9);
    testing::Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        const cplx tau = rng.tau(0.9, 1.5);
        const cplx z = rng.z(tau, 0.5);
        CHECK(residual(Weierstrass(tau).wp(z), wp_lattice_oracle(z, tau)) < 1e-9);
    }
}

TEST_CASE("wp' vanishes at the half-periods and is odd") {
    testing::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const real scale = 1.0 + std::abs(w.e(1));
        CHECK(std::abs(w.wp_prime(1.0)) < 1e-10 * scale);
        const cplx z = rng.z(tau);
        CHECK(residual(w.wp_prime(-z), -w.wp_prime(z)) < 1e-13);
    }
}

TEST_CASE("wp' against a central difference") {
    const Weierstrass w(cplx{0.0, 1.1});
    const cplx z{0.4, 0.2};
    const auto f = [&](cplx x) { return w.wp(x); };
    CHECK(std::abs(w.wp_prime(z) - testing::central_difference(f, z)) < 1e-6);
    const auto g = [&](cplx x) { return w.wp_prime(x); };
    CHECK(std::abs(w.wp_second(z) - testing::central_difference(g, z)) < 1e-5);
}

TEST_CASE("the critical values sum to zero") {
    testing::Rng rng(25);
    for (int i = 0; i < 50; ++i) {
        const auto e = e_values(LatticeTau(rng.tau()));
        const real scale = std::max({std::abs(e[1]), std::abs(e[2]), std::abs(e[3])});
        CHECK(std::abs(e[1] + e[2] + e[3]) < 1e-12 * scale);
    }
}

TEST_CASE("inverting tau swaps e1 and e3 with weight tau^2") {
    const cplx tau{0.0, 1.3};
    const auto e = e_values(LatticeTau(tau));
    const auto inv = e_values(LatticeTau(-1.0 / tau));
    CHECK(relative(inv[1], tau * tau * e[3]) < 1e-12);
    CHECK(relative(inv[3], tau * tau * e[1]) < 1e-12);
}

TEST_CASE("square lattice critical values") {
    const auto e = e_values(LatticeTau(kI));
    CHECK(std::abs(e[2]) < 1e-13);
    CHECK(relative(e[1], -e[3]) < 1e-13);
}

TEST_CASE("sigma normalization and parity") {
    const Weierstrass w(cplx{0.0, 1.2});
    CHECK(std::abs(w.sigma(1e-4) / 1e-4 - 1.0) < 1e-7);
    testing::Rng rng(26);
    for (int i = 0; i < 50; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass wt(tau);
        const cplx z = rng.z(tau);
        CHECK(residual(wt.sigma(-z), -wt.sigma(z)) < 1e-13);
        for (int j = 1; j <= 3; ++j) {
            CHECK(residual(wt.sigma_j(j, -z), wt.sigma_j(j, z)) < 1e-13);
            CHECK(std::abs(wt.sigma_j(j, 0.0) - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("squared sigma quotients are wp - e_j") {
    testing::Rng rng(27);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau);
        for (int j = 1; j <= 3; ++j) {
            const cplx r = w.sigma_j(j, z) / w.sigma(z);
            CHECK(residual(r * r, w.wp(z) - w.e(j)) < 1e-9);
        }
    }
}

TEST_CASE("sigma quasi-periodicity") {
    testing::Rng rng(28);
    for (int i = 0; i < 30; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau, 0.5);
        const cplx rhs = -w.sigma(z) * std::exp(2.0 * w.eta() * (z + 1.0));
        CHECK(relative(w.sigma(z + 2.0), rhs) < 1e-11);
    }
}

TEST_CASE("eta is real for imaginary tau and matches the zeta increment") {
    testing::Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        const Weierstrass w(cplx{0.0, rng.uniform(0.8, 2.0)});
        CHECK(std::abs(w.eta().imag()) < 1e-12 * std::abs(w.eta()));
    }
    const Weierstrass w(cplx{0.15, 1.05});
    CHECK(relative(w.zeta(2.3) - w.zeta(0.3), 2.0 * w.eta()) < 1e-9);
    CHECK(relative(eta1(w.lattice()), w.eta()) < 1e-14);
    try {
        eta1(w.lattice(), {}, 0);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::division_degeneracy);
    }
}

TEST_CASE("zeta is odd, integrates wp and carries the half-shift relation") {
    testing::Rng rng(30);
    for (int i = 0; i < 50; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau, 0.5);
        CHECK(residual(w.zeta(-z), -w.zeta(z)) < 1e-13);
        const cplx lhs = 2.0 * w.zeta(z + 1.0) - 2.0 * w.zeta(z) - 2.0 * w.eta();
        CHECK(residual(lhs, w.wp_prime(z) / (w.wp(z) - w.e(1))) < 1e-9);
    }
    const Weierstrass w(cplx{-0.2, 1.3});
    const cplx z{0.37, -0.21};
    const auto f = [&](cplx x) { return w.zeta(x); };
    CHECK(std::abs(testing::central_difference(f, z) + w.wp(z)) < 1e-6);
    CHECK(relative(zeta_w(z, w.lattice()), w.zeta(z)) < 1e-14);
}

TEST_CASE("differential equation over 200 samples") {
    testing::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau);
        const cplx p = w.wp(z), dp = w.wp_prime(z);
        const cplx cubic = 4.0 * (p - w.e(1)) * (p - w.e(2)) * (p - w.e(3));
        CHECK(residual(dp * dp, cubic) < 1e-9);
    }
}

TEST_CASE("homogeneity under rescaled periods") {
    testing::Rng rng(32);
    for (const cplx t : {cplx{2.0, 0.0}, cplx{1.0, 1.0}}) {
        for (int i = 0; i < 20; ++i) {
            const cplx tau = rng.tau();
            const cplx z = rng.z(tau);
            const cplx scaled = wp_periods(t * z, t, t * tau);
            CHECK(relative(scaled, Weierstrass(tau).wp(z) / (t * t)) < 1e-9);
        }
    }
}

TEST_CASE("periodicity goes through the same reduced point") {
    const Weierstrass w(cplx{0.25, 1.25});
    const cplx z{0.375, 0.25};
    CHECK(w.wp(z + 2.0) == w.wp(z));
    CHECK(w.wp(z + 2.0 * w.tau()) == w.wp(z));
    CHECK(w.wp(z - 2.0 + 2.0 * w.tau()) == w.wp(z));
}

TEST_CASE("wp' through sigma duplication") {
    testing::Rng rng(33);
    for (int i = 0; i < 50; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx u = rng.z(tau, 0.4);
        const cplx s = w.sigma(u);
        CHECK(residual(w.wp_prime(u), -w.sigma(2.0 * u) / (s * s * s * s)) < 1e-9);
    }
}

TEST_CASE("poles are reported with their lattice point") {
    const Weierstrass w(cplx{0.1, 1.0});
    const cplx lattice_point = 2.0 * w.tau();
    try {
        w.wp(lattice_point + cplx{1e-9, 0.0});
        FAIL("no error");
    } catch (const PoleProximityError& e) {
        CHECK(std::abs(e.where() - lattice_point) < 1e-12);
    }
}

TEST_CASE("concurrent readers see the same values") {
    const Weierstrass w(cplx{0.3, 1.1});
    const cplx z{0.2, 0.3};
    const cplx expected = w.wp(z);
    std::vector<cplx> got(8);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { got[t] = w.wp(z) + w.sigma(z) - w.sigma(z); });
    for (auto& th : pool) th.join();
    for (const cplx g : got) CHECK(g == expected);
}
