#include <doctest.h>

#include "ellip/transforms.hpp"
#include "support.hpp"

using namespace ellip;
using testing::residual;

namespace {

const WpNOptions wp_n_true{ShiftRule::two_m_over_n, 2};

void samples(std::uint64_t seed, int count, const std::function<void(cplx, cplx)>& body) {
    CHECK(testing::for_samples(seed, count, 0.8, 1.6, 0.8, body) == count);
}

}  // namespace

TEST_CASE("wp(nz, n tau) - e_j as a product over shifted points") {
    for (int n : {3, 5}) {
        samples(70 + n, 30, [n](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            for (int j = 1; j <= 3; ++j) {
                const auto v = wp_n_identity(j, z, p, wp_n_true);
                CHECK(residual(v.rhs_theta, v.lhs) < 1e-8);
                if (v.rhs_cot) CHECK(residual(*v.rhs_cot, v.lhs) < 1e-8);
            }
        });
    }
}

TEST_CASE("the typeset pi^4 prefactor and m/n shifts do not hold") {
    const OrderPair p(cplx{0.1, 1.1}, 3);
    const cplx z{0.23, 0.17};
    const auto typeset = wp_n_identity(1, z, p);
    CHECK(residual(typeset.rhs_theta, typeset.lhs) > 1e-3);
}

TEST_CASE("shared zero when a shifted point hits the real half-period") {
    const OrderPair p(cplx{0.1, 1.1}, 3);
    const auto v = wp_n_identity(1, 1.0 / 3.0, p, wp_n_true);
    CHECK(std::abs(v.lhs) < 1e-10);
    CHECK(std::abs(v.rhs_theta) < 1e-10);
}

TEST_CASE("order 1 is the identity") {
    testing::Rng rng(75);
    for (int i = 0; i < 20; ++i) {
        const cplx tau = rng.tau();
        const cplx z = rng.z(tau);
        const OrderPair p(tau, 1);
        const auto v = wp_n_identity(2, z, p, wp_n_true);
        CHECK(residual(v.rhs_theta, v.lhs) < 1e-14);
        const auto l = logderiv_n_identity(1, z, p, {ShiftRule::two_m_over_n, true, false, IndexSet::all});
        const cplx direct = p.base().wp_prime(z) / (p.base().wp(z) - p.base().e(1));
        CHECK(residual(l.lhs, direct) < 1e-12);
        REQUIRE(l.rhs_sum.has_value());
        CHECK(residual(*l.rhs_sum, direct) < 1e-12);
    }
}

TEST_CASE("composition of two order-3 steps is the order-9 transformation") {
    samples(76, 10, [](cplx tau, cplx z) {
        const OrderPair nine(tau, 9), outer(3.0 * tau, 3), inner(tau, 3);
        const auto direct = wp_n_identity(1, z, nine, wp_n_true);
        const auto top = wp_n_identity(1, 3.0 * z, outer, wp_n_true);
        const cplx prefactor = top.rhs_theta / shifted_wp_product(1, 3.0 * z, outer, ShiftRule::two_m_over_n);
        cplx composed = prefactor;
        for (int m = 0; m < 3; ++m)
            composed *= wp_n_identity(1, z + 2.0 * m / 9.0, inner, wp_n_true).rhs_theta;
        CHECK(residual(composed, direct.rhs_theta) < 1e-7);
        CHECK(residual(composed, direct.lhs) < 1e-7);
    });
}

TEST_CASE("ratio forms") {
    const WpRatioOptions opts{ShiftRule::two_m_over_n, true};
    for (int n : {3, 5}) {
        samples(77 + n, 30, [&](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            for (int j = 1; j <= 3; ++j) {
                const auto v = wp_ratio_identity(j, z, p, opts);
                CHECK(residual(v.squared_pairs, v.lhs) < 1e-8);
                CHECK(residual(v.plain_factors, v.squared_pairs) < 1e-8);
                const auto m = wp_ratio_identity(j, -z, p, opts);
                CHECK(residual(m.lhs, v.lhs) < 1e-10);
                CHECK(residual(m.squared_pairs, v.squared_pairs) < 1e-10);
            }
        });
    }
}

TEST_CASE("wp'(nz, n tau) decompositions") {
    WpPrimeNOptions opts;
    opts.theta_shift = ShiftRule::two_m_over_n;
    opts.signed_four_over_pi = true;
    opts.sample_shift = ShiftRule::two_m_over_n;
    opts.inverse_n3 = true;
    for (int n : {3, 5}) {
        samples(80 + n, 30, [&](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            const auto v = wp_prime_n_identity(z, p, opts);
            CHECK(residual(v.rhs_theta, v.lhs) < 1e-8);
            CHECK(residual(v.rhs_samples, v.lhs) < 1e-8);
            const auto m = wp_prime_n_identity(-z, p, opts);
            CHECK(residual(m.lhs, -v.lhs) < 1e-10);
            CHECK(residual(m.rhs_theta, -v.rhs_theta) < 1e-10);
            CHECK(residual(m.rhs_samples, -v.rhs_samples) < 1e-10);
        });
    }
    const OrderPair p(cplx{0.0, 1.2}, 3);
    CHECK(std::abs(wp_prime_n_identity(1.0 / 3.0, p, opts).lhs) < 1e-10);
}

TEST_CASE("log-derivative at (nz, n tau)") {
    LogderivNOptions opts;
    opts.signed_pi_power = true;
    opts.inverse_n = true;
    opts.sum_index = IndexSet::all;
    for (int n : {3, 5}) {
        samples(85 + n, 30, [&](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            for (int j = 1; j <= 3; ++j) {
                const auto v = logderiv_n_identity(j, z, p, opts);
                CHECK(residual(v.rhs_product, v.lhs) < 1e-8);
                CHECK(residual(v.rhs_samples, v.lhs) < 1e-8);
                if (j == 1) {
                    REQUIRE(v.rhs_sum.has_value());
                    CHECK(residual(*v.rhs_sum, v.lhs) < 1e-8);
                }
            }
        });
    }
}

TEST_CASE("sine multiplication formula") {
    testing::Rng rng(90);
    for (int n : {3, 5, 7, 9})
        for (int i = 0; i < 50; ++i) {
            const cplx x{rng.uniform(-3.0, 3.0), rng.uniform(-1.0, 1.0)};
            CHECK(std::abs(sine_multiplication_ratio(x, n) - 1.0) < 1e-12);
        }
}

TEST_CASE("sigma quotient transformation") {
    const SigmaNOptions opts{ShiftRule::two_m_over_n, true};
    for (int n : {3, 5}) {
        samples(91 + n, 30, [&](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            for (int j = 1; j <= 3; ++j) {
                const auto v = sigma_quotient_n_transform(j, z, p, opts);
                CHECK(residual(v.rhs, v.lhs) < 1e-8);
                const auto sq = wp_n_identity(j, z, p, wp_n_true);
                CHECK(residual(v.lhs * v.lhs, sq.lhs) < 1e-8);
            }
        });
    }
    const OrderPair p(cplx{0.05, 1.1}, 3);
    const auto small = sigma_quotient_n_transform(1, 1e-4, p, opts);
    CHECK(residual(small.rhs, small.lhs) < 1e-6);
}

TEST_CASE("raw sigma transformation with the derived prefactor") {
    SigmaRawOptions opts;
    opts.shift = ShiftRule::two_m_over_n;
    opts.skip_m0 = true;
    opts.derived_prefactor = true;
    samples(97, 30, [&](cplx tau, cplx z) {
        const auto v = sigma_n_transform_raw(z / 2.0, OrderPair(tau, 3), opts);
        CHECK(residual(v.rhs, v.lhs) < 1e-8);
    });
}

TEST_CASE("xi transformations in the three modes") {
    XiNOptions ntau;
    ntau.over_n = true;
    XiNOptions other;
    other.lhs_argument_u = true;
    for (int n : {3, 5}) {
        samples(100 + n, 30, [&](cplx tau, cplx z) {
            const Weierstrass base(tau);
            for (const auto& [mode, p] :
                 {std::pair{TransformMode::n_tau, 0}, std::pair{TransformMode::tau_over_n, 0},
                  std::pair{TransformMode::tau_plus_2p_over_n, 0}, std::pair{TransformMode::tau_plus_2p_over_n, 1}}) {
                const TransformOrder order{n, p};
                const Weierstrass moved(transformed_tau(mode, order, tau));
                const XiNOptions& o = mode == TransformMode::n_tau ? ntau : other;
                const auto a0 = xi_n_transform({1, 0}, mode, order, z, base, moved, o);
                CHECK(residual(a0.rhs, a0.lhs) < 1e-8);
                const auto bg = xi_n_transform({2, 3}, mode, order, z, base, moved, other);
                const auto gb = xi_n_transform({3, 2}, mode, order, z, base, moved, other);
                CHECK(std::abs(bg.rhs * gb.rhs - 1.0) < 1e-10);
                if (mode != TransformMode::n_tau) CHECK(residual(bg.rhs, bg.lhs) < 1e-8);
            }
        });
    }
}

TEST_CASE("period relations at order 3, tau = 1.2i") {
    const OrderPair p(cplx{0.0, 1.2}, 3);
    const auto r = modular_period_relations(p);
    const Moduli m = moduli(p.scaled());
    CHECK(residual(r.l, m.k) < 1e-12);
    CHECK(residual(r.l_squares, m.k) < 1e-8);
    CHECK(residual(r.l_shift, m.k) < 1e-8);
    CHECK(residual(r.lprime_index23, m.kprime) < 1e-8);
    CHECK(std::abs(r.l_squares * r.l_squares + r.lprime_index23 * r.lprime_index23 - 1.0) < 1e-8);
    const auto& e = p.base().e();
    const auto& en = p.scaled().e();
    CHECK(residual(r.zeros_ratio, (e[1] - e[3]) / (en[1] - en[3])) < 1e-12);
    const auto zr = zeros_relation(p, {true, true, true});
    CHECK(residual(zr.rhs, zr.lhs) < 1e-8);
}

TEST_CASE("xi log-derivative sums at (nu, n tau)") {
    for (int n : {1, 3, 5}) {
        samples(110 + n, 30, [&](cplx tau, cplx z) {
            const OrderPair p(tau, n);
            const auto v = logderiv_xi_n_sum({1, 0}, z, p, true);
            CHECK(residual(v.rhs_xi, v.lhs) < 1e-8);
            CHECK(residual(v.rhs_wp, v.lhs) < 1e-8);
            REQUIRE(v.rhs_sine.has_value());
            CHECK(residual(*v.rhs_sine, v.lhs) < 1e-8);
            const auto m = logderiv_xi_n_sum({1, 0}, -z, p, true);
            CHECK(residual(m.rhs_xi, -v.rhs_xi) < 1e-10);
            if (n == 1) {
                const Weierstrass& w = p.base();
                CHECK(residual(v.lhs, w.wp_prime(z) / (2.0 * (w.wp(z) - w.e(1)))) < 1e-10);
            }
        });
    }
}

TEST_CASE("order validation") {
    CHECK_THROWS_AS(validate(TransformOrder{4, 0}), Error);
    CHECK_THROWS_AS(validate(TransformOrder{17, 0}), Error);
    CHECK_NOTHROW(validate(TransformOrder{15, 0}));
}
