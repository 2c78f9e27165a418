#include <doctest.h>

#include "ellip/products.hpp"
#include "ellip/theta.hpp"
#include "support.hpp"

using namespace ellip;
using testing::relative;
using testing::residual;

TEST_CASE("wp - e1 product vanishes at the real half-period and is even") {
    testing::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        CHECK(std::abs(wp_minus_e_product(1, 1.0, w)) < 1e-12);
        const cplx z = rng.z(tau);
        CHECK(residual(wp_minus_e_product(1, -z, w), wp_minus_e_product(1, z, w)) < 1e-13);
    }
}

TEST_CASE("wp - e_j products against the theta-backed values") {
    testing::Rng rng(42);
    for (int j = 1; j <= 3; ++j) {
        for (int i = 0; i < 100; ++i) {
            const cplx tau = rng.tau();
            const Weierstrass w(tau);
            const cplx z = rng.z(tau);
            CHECK(residual(wp_minus_e_product(j, z, w), w.wp(z) - w.e(j)) < 1e-9);
        }
    }
}

TEST_CASE("the cotangent readings of wp - e1 agree") {
    testing::Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau);
        const cplx ref = w.wp(z) - w.e(1);
        CHECK(residual(wp_minus_e1_cot_product(z, w), ref) < 1e-9);
        CHECK(residual(wp_minus_e1_null_product(z, w, 1), ref) < 1e-9);
        CHECK(residual(wp_minus_e1_symmetric_product(z, w), ref) < 1e-9);
        CHECK(residual(wp_shift_tan_product(z, w), w.wp(z + 1.0)) < 1e-9);
    }
}

TEST_CASE("differences of the three products do not depend on z") {
    const cplx tau{0.2, 1.1};
    const Weierstrass w(tau);
    testing::Rng rng(44);
    for (int i = 0; i < 50; ++i) {
        const cplx z = rng.z(tau);
        const cplx d = wp_minus_e_product(1, z, w) - wp_minus_e_product(2, z, w);
        CHECK(residual(d, w.e(2) - w.e(1)) < 1e-9);
    }
}

TEST_CASE("product factors approach 1 geometrically") {
    const cplx tau{0.1, 0.5};
    const Weierstrass w(tau);
    const cplx z{0.3, 0.2};
    std::vector<cplx> partial;
    for (int k = 0; k <= 10; ++k) {
        TruncationPolicy pol;
        pol.fixed_terms = k;
        partial.push_back(wp_minus_e_product(1, z, Weierstrass(tau, pol)));
    }
    const real expected = 2.0 * std::log(w.lattice().q_abs());
    for (int k = 2; k < 8; ++k) {
        const real slope = std::log(std::abs(partial[k + 1] - partial[k]) / std::abs(partial[k] - partial[k - 1]));
        CHECK(slope == doctest::Approx(expected).epsilon(0.2));
    }
}

TEST_CASE("wp' product") {
    const cplx c = std::pow(kPi, 3) / 8.0;
    testing::Rng rng(45);
    for (int i = 0; i < 100; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau);
        CHECK(residual(wp_prime_product(z, w, c), w.wp_prime(z)) < 1e-8);
        CHECK(residual(wp_prime_product(-z, w, c), -wp_prime_product(z, w, c)) < 1e-13);
    }
    CHECK(std::abs(wp_prime_product(1.0, Weierstrass(kI), c)) < 1e-12);
}

TEST_CASE("pairwise critical-value differences") {
    testing::Rng rng(46);
    for (int i = 0; i < 30; ++i) {
        const Weierstrass w(rng.tau());
        const auto& n = w.nulls();
        const cplx e1 = w.e(1), e2 = w.e(2), e3 = w.e(3);
        const cplx direct = (e1 - e2) * (e1 - e3);
        CHECK(relative(direct, std::pow(kPi, 4) / 16.0 * std::pow(n.t3, 4) * std::pow(n.t4, 4)) < 1e-10);
        const auto prod = e_pairwise_products(w, PairwiseForm::pi4_over_16);
        CHECK(relative(prod[0], direct) < 1e-10);
        const auto weighted = e_pairwise_products(w, PairwiseForm::pi4_over_16_weight);
        CHECK(relative(weighted[1], (e3 - e2) * (e3 - e1)) < 1e-10);
        CHECK(relative(weighted[2], (e2 - e1) * (e2 - e3)) < 1e-10);
    }
    const Weierstrass sq(kI);
    const cplx v = (sq.e(1) - sq.e(2)) * (sq.e(1) - sq.e(3));
    CHECK(v.real() > 0.0);
    CHECK(std::abs(v.imag()) < 1e-12 * v.real());
}

TEST_CASE("the literal pairwise reading is far from the critical values") {
    const Weierstrass w(cplx{0.0, 1.2});
    const auto lit = e_pairwise_products(w, PairwiseForm::literal);
    const cplx direct = (w.e(1) - w.e(2)) * (w.e(1) - w.e(3));
    CHECK(relative(lit[0], direct) > 1e-3);
}

TEST_CASE("sigma products under the exp(eta z^2 / 2) gauge") {
    testing::Rng rng(47);
    for (int i = 0; i < 30; ++i) {
        const cplx tau = rng.tau();
        const Weierstrass w(tau);
        const cplx z = rng.z(tau, 0.5);
        for (int j = 0; j <= 3; ++j)
            CHECK(residual(sigma_product(j, z, w, SigmaGauge::two_eta_v2), w.sigma_j(j, z)) < 1e-9);
        CHECK(residual(sigma1_over_sigma_product(z, w), w.sigma_j(1, z) / w.sigma(z)) < 1e-9);
    }
}
