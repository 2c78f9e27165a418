#include "ellip/transforms.hpp"

#include <cstdio>

#include "ellip/trig.hpp"

namespace ellip {

void validate(const TransformOrder& order, int n_max) {
    if (order.n < 1 || order.n % 2 == 0 || order.n > n_max) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "transformation order must be odd and in [1, %d], got %d", n_max, order.n);
        throw Error(ErrorKind::invalid_argument, buf);
    }
}

cplx transformed_tau(TransformMode mode, const TransformOrder& order, cplx tau) {
    const real n = order.n;
    switch (mode) {
        case TransformMode::n_tau: return n * tau;
        case TransformMode::tau_over_n: return tau / n;
        default: return (tau + 2.0 * order.p) / n;
    }
}

cplx shift_of(ShiftRule rule, int m, int n) {
    const real r = static_cast<real>(m) / n;
    switch (rule) {
        case ShiftRule::m_over_n: return r;
        case ShiftRule::two_m_over_n: return 2.0 * r;
        default: return 2.0 * kPi * r;
    }
}

OrderPair::OrderPair(cplx tau, int n, TruncationPolicy policy)
    : n_(n), base_(tau, policy), scaled_(static_cast<real>(n) * tau, policy) {
    validate(TransformOrder{n, 0});
}

namespace {

real sign_half(int n) { return ((n - 1) / 2) % 2 ? -1.0 : 1.0; }

cplx null_of(const ThetaNulls& t, int j) {
    switch (j) {
        case 1: return t.t1p;
        case 2: return t.t2;
        case 3: return t.t3;
        case 4: return t.t4;
        default: throw Error(ErrorKind::invalid_argument, "theta index must be in 1..4");
    }
}

void require_half_index(int j) {
    if (j < 1 || j > 3) throw Error(ErrorKind::invalid_argument, "half-period index must be 1, 2 or 3");
}

cplx nonzero(cplx d, const char* what) {
    if (std::abs(d) < 1e-12) throw Error(ErrorKind::division_degeneracy, std::string(what) + ": vanishing denominator");
    return d;
}

// 2 (sigma_j'/sigma_j - sigma'/sigma): wp' and wp - e_j both vanish near the
// far edge of the strip when Im tau is large, so their quotient loses digits.
cplx wp_logderiv(int j, cplx z, const Weierstrass& w) {
    return 2.0 * (w.sigma_logderiv(j, z) - w.zeta(z));
}

int cot_terms(cplx phase, const TruncationPolicy& policy) {
    return product_terms(std::exp(-kPi * std::abs(phase.imag())), policy);
}

}  // namespace

cplx wp_minus_e_scaled(int j, cplx z, const OrderPair& p) {
    require_half_index(j);
    return p.scaled().wp(static_cast<real>(p.n()) * z) - p.scaled().e(j);
}

cplx shifted_wp_product(int j, cplx z, const OrderPair& p, ShiftRule rule, int first) {
    require_half_index(j);
    const Weierstrass& w = p.base();
    Product prod;
    for (int m = first; m < p.n(); ++m) prod.mul(w.wp(z + shift_of(rule, m, p.n())) - w.e(j));
    return prod.value();
}

cplx null_pair_ratio(int j, const OrderPair& p) {
    require_half_index(j);
    const int a = j == 1 ? 3 : 2;
    const int b = j == 3 ? 3 : 4;
    const auto& tn = p.scaled().nulls();
    const auto& t = p.base().nulls();
    return sq(null_of(tn, a) * null_of(tn, b)) / std::pow(sq(null_of(t, a) * null_of(t, b)), p.n());
}

cplx null_ratio(int t, const OrderPair& p) {
    return sq(null_of(p.scaled().nulls(), t)) / std::pow(sq(null_of(p.base().nulls(), t)), p.n());
}

cplx cot_transform_product(const OrderPair& p) {
    const cplx tau = p.base().tau();
    const int K = cot_terms(tau, p.base().policy());
    Product prod;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * tau;
        prod.mul(std::pow(std::pow(trig::cot(A), p.n()) / trig::cot(static_cast<real>(p.n()) * A), 4));
    }
    return prod.value();
}

cplx modular_cot_product(const OrderPair& p) {
    const cplx tau = p.base().tau();
    const real n = p.n();
    const int K = cot_terms(1.0 / (2.0 * n * tau), p.base().policy());
    Product prod;
    for (int k = 1; k <= K; ++k) {
        const cplx a = static_cast<real>(k) * kPi / (2.0 * tau);
        prod.mul(std::pow(trig::cot(a), 2 * p.n()) / sq(trig::cot(a / n)));
    }
    return prod.value();
}

cplx modular_cot_product_typeset(const OrderPair& p) {
    const cplx tau = p.base().tau();
    const int K = cot_terms(1.0 / tau, p.base().policy());
    Product prod;
    for (int k = 1; k <= K; ++k) {
        const cplx a = static_cast<real>(k) * kPi / tau;
        prod.mul(std::pow(trig::cot(a), 8 * p.n()) / std::pow(trig::cot(static_cast<real>(p.n()) * a), 8));
    }
    return prod.value();
}

WpNValues wp_n_identity(int j, cplx z, const OrderPair& p, WpNOptions opts) {
    const int n = p.n();
    const cplx prod = shifted_wp_product(j, z, p, opts.shift);
    WpNValues out;
    out.lhs = wp_minus_e_scaled(j, z, p);
    out.rhs_theta = std::pow(4.0 / std::pow(kPi, opts.pi_power), n - 1) * null_pair_ratio(j, p) * prod;
    if (j == 1) out.rhs_cot = std::pow(4.0 / (kPi * kPi), n - 1) * cot_transform_product(p) * prod;
    return out;
}

cplx squared_pair_product(int j, cplx z, const Weierstrass& w, ShiftRule rule, int n, int last) {
    require_half_index(j);
    const cplx wz = w.wp(z);
    Product prod;
    for (int m = 1; m <= last; ++m) {
        const cplx s = shift_of(rule, m, n);
        prod.mul(sq((wz - w.wp(s + w.omega(j))) / nonzero(wz - w.wp(s), "squared pair product")));
    }
    return prod.value();
}

WpRatioValues wp_ratio_identity(int j, cplx z, const OrderPair& p, WpRatioOptions opts) {
    require_half_index(j);
    const Weierstrass& w = p.base();
    const int n = p.n();
    const real scale = opts.inverse_n2 ? 1.0 / (n * n) : 1.0;
    WpRatioValues out;
    out.lhs = wp_minus_e_scaled(j, z, p) / nonzero(w.wp(z) - w.e(j), "wp ratio");
    out.squared_pairs = scale * squared_pair_product(j, z, w, opts.shift, n, (n - 1) / 2);
    Product plain, sig;
    for (int m = 1; m < n; ++m) {
        const cplx s = shift_of(opts.shift, m, n);
        const cplx top = w.wp(z + s) - w.e(j);
        plain.mul(top / nonzero(w.wp(s) - w.e(j), "wp ratio"));
        sig.mul(top * sq(xi({0, j}, s, w)));
    }
    out.plain_factors = scale * plain.value();
    out.sigma_factors = scale * sig.value();
    return out;
}

WpPrimeNValues wp_prime_n_identity(cplx z, const OrderPair& p, WpPrimeNOptions opts) {
    const Weierstrass& w = p.base();
    const int n = p.n();
    WpPrimeNValues out;
    out.lhs = p.scaled().wp_prime(static_cast<real>(n) * z);
    Product theta;
    for (int m = 0; m < n; ++m) theta.mul(w.wp_prime(z + shift_of(opts.theta_shift, m, n)));
    const cplx pre = opts.signed_four_over_pi ? sign_half(n) * std::pow(4.0 / kPi, n - 1)
                                              : std::pow(4.0 / std::pow(kPi, 4), n - 1);
    out.rhs_theta = pre * null_ratio(1, p) * theta.value();
    Product samples;
    samples.mul(w.wp_prime(z));
    for (int m = 1; m < n; ++m) {
        const cplx s = shift_of(opts.sample_shift, m, n);
        samples.mul(w.wp_prime(z + s) / nonzero(w.wp_prime(s), "wp' sample product"));
    }
    const real c = opts.inverse_n3 ? 1.0 / (static_cast<real>(n) * n * n) : std::pow(2.0, 1 - n);
    out.rhs_samples = c * samples.value();
    return out;
}

LogderivNValues logderiv_n_identity(int j, cplx z, const OrderPair& p, LogderivNOptions opts) {
    require_half_index(j);
    const Weierstrass& w = p.base();
    const int n = p.n();
    const real rn = n;
    LogderivNValues out;
    out.lhs = wp_logderiv(j, rn * z, p.scaled());
    Product shifted;
    for (int m = 0; m < n; ++m) shifted.mul(wp_logderiv(j, z + shift_of(opts.shift, m, n), w));
    const cplx pre = opts.signed_pi_power ? sign_half(n) * std::pow(kPi, 1 - n) : cplx{1.0};
    out.rhs_product = pre * null_ratio(j + 1, p) * shifted.value();
    Product consts;
    for (int m = 1; m < n; ++m) {
        const cplx s = shift_of(opts.shift, m, n);
        consts.mul(1.0 / nonzero(wp_logderiv(j, s, w), "wp' at shift"));
    }
    const real c = opts.inverse_n ? 1.0 / rn : std::pow(2.0, 1 - n);
    out.rhs_samples = c * consts.value() * shifted.value();
    if (j == 1) {
        const SineSumSpec spec{p.scaled().tau(), SineSign::plus, opts.sum_index, true};
        out.rhs_sum = -2.0 * kPi * sin_reciprocal_sum(rn * z, spec, w.policy());
    }
    return out;
}

PairValues sigma_quotient_n_transform(int j, cplx u, const OrderPair& p, SigmaNOptions opts) {
    require_half_index(j);
    const Weierstrass& w = p.base();
    const int n = p.n();
    PairValues out;
    out.lhs = xi({j, 0}, static_cast<real>(n) * u, p.scaled());
    Product prod;
    for (int m = 0; m < n; ++m) {
        const cplx s = shift_of(opts.shift, m, n);
        prod.mul(xi({j, 0}, u + s, w));
        if (m > 0 || !opts.skip_m0_over_n) prod.mul(xi({0, j}, s, w));
    }
    out.rhs = (opts.skip_m0_over_n ? 1.0 / n : 1.0) * prod.value();
    return out;
}

PairValues sigma_n_transform_raw(cplx u, const OrderPair& p, SigmaRawOptions opts) {
    const Weierstrass& w = p.base();
    const int n = p.n();
    const real rn = n;
    PairValues out;
    out.lhs = p.scaled().sigma(rn * u);
    Product num, den;
    for (int m = 0; m < n; ++m) num.mul(w.sigma(u + shift_of(opts.shift, m, n)));
    for (int m = opts.skip_m0 ? 1 : 0; m < n; ++m) den.mul(w.sigma(shift_of(opts.shift, m, n)));
    const cplx d = nonzero(den.value(), "sigma transform");
    cplx expo = 0.0;
    if (opts.derived_prefactor) {
        Accumulator S;
        for (int m = 1; m < n; ++m) S += w.wp(shift_of(opts.shift, m, n));
        expo = 0.5 * S.value() * u * u - (rn - 1.0) * w.eta() * u;
    } else {
        Accumulator e;
        for (int m = 1; m < n; ++m) {
            const real r = static_cast<real>(m) / n;
            e += -rn * u * r * w.eta() + rn * u * w.wp(cplx{r});
        }
        expo = e.value();
    }
    const cplx pre = (opts.derived_prefactor ? rn : 1.0) * std::exp(expo);
    out.rhs = checked(pre * num.value() / d, "sigma transform");
    return out;
}

PairValues xi_n_transform(XiIndex idx, TransformMode mode, const TransformOrder& order, cplx u,
                          const Weierstrass& base, const Weierstrass& transformed, XiNOptions opts) {
    validate(idx);
    validate(order);
    const int n = order.n;
    const real rn = n;
    const cplx step = mode == TransformMode::n_tau        ? cplx{2.0}
                      : mode == TransformMode::tau_over_n ? 2.0 * base.tau()
                                                          : 2.0 * (base.tau() + 2.0 * order.p);
    PairValues out;
    if (mode == TransformMode::n_tau)
        out.lhs = xi(idx, rn * u, transformed);
    else
        out.lhs = xi(idx, opts.lhs_argument_u ? u : u / rn, transformed);
    Product prod;
    prod.mul(xi(idx, u, base));
    for (int m = 1; m < n; ++m) {
        const cplx s = static_cast<real>(m) * step / rn;
        prod.mul(xi(idx, u + s, base) / nonzero(xi(idx, s, base), "xi transform"));
    }
    out.rhs = (opts.over_n ? 1.0 / rn : 1.0) * prod.value();
    return out;
}

XiLogderivNValues logderiv_xi_n_sum(XiIndex idx, cplx u, const OrderPair& p, bool lhs_times_n,
                                    IndexSet sine_index) {
    validate(idx);
    const Weierstrass& w = p.base();
    const int n = p.n();
    const real rn = n;
    XiLogderivNValues out;
    const cplx nu = rn * u;
    out.lhs = (lhs_times_n ? rn : 1.0) * xi_prime(idx, nu, p.scaled()) / xi(idx, nu, p.scaled());
    Accumulator sx, swp, ssin;
    const bool sine = idx.beta == 1 && idx.gamma == 0;
    for (int m = 0; m < n; ++m) {
        const cplx v = u + shift_of(ShiftRule::two_m_over_n, m, n);
        sx += xi_prime(idx, v, w) / xi(idx, v, w);
        cplx t = 0.0;
        if (idx.beta != 0) t += wp_logderiv(idx.beta, v, w) / 2.0;
        if (idx.gamma != 0) t -= wp_logderiv(idx.gamma, v, w) / 2.0;
        swp += t;
        if (sine) ssin += xi_logderiv_sum(idx.beta, v, w, sine_index, ModularArgument::rescaled);
    }
    out.rhs_xi = sx.value();
    out.rhs_wp = swp.value();
    if (sine) out.rhs_sine = ssin.value();
    return out;
}

PeriodRelations modular_period_relations(const OrderPair& p) {
    const Weierstrass& w = p.base();
    const int n = p.n();
    const Moduli base = moduli(w);
    const Moduli scaled = moduli(p.scaled());
    PeriodRelations out;
    out.l = scaled.k;
    out.lprime = scaled.kprime;
    Product shift, l2, inv21, inv23, sq32;
    shift.mul(xi({2, 1}, w.tau(), w));
    for (int m = 1; m < n; ++m) {
        const cplx s = shift_of(ShiftRule::two_m_over_n, m, n);
        shift.mul(xi({2, 1}, w.tau() + s, w) / nonzero(xi({2, 1}, s, w), "period relation"));
        l2.mul(sq(xi({1, 2}, s, w)));
        inv21.mul(1.0 / sq(nonzero(xi({2, 1}, s, w), "period relation")));
        inv23.mul(1.0 / sq(nonzero(xi({2, 3}, s, w), "period relation")));
        sq32.mul(sq(xi({3, 2}, s, w)));
    }
    out.l_shift = shift.value();
    out.l_squares = std::pow(base.k, n) * l2.value();
    const cplx kpn = std::pow(base.kprime, n);
    out.lprime_typeset = kpn * inv21.value();
    out.lprime_index23 = kpn * inv23.value();
    out.lprime_squares = kpn * sq32.value();
    out.zeros_ratio = (w.e(1) - w.e(3)) / (p.scaled().e(1) - p.scaled().e(3));
    return out;
}

PairValues zeros_relation(const OrderPair& p, ZerosOptions opts) {
    const Weierstrass& w = p.base();
    const int n = p.n();
    const real rn = n;
    PairValues out;
    if (opts.no_sqrt)
        out.lhs = (w.e(1) - w.e(3)) / (p.scaled().e(1) - p.scaled().e(3));
    else
        out.lhs = std::sqrt(w.e(1) - w.e(3)) / std::sqrt(p.scaled().e(1) - p.scaled().e(3));
    Product prod;
    if (opts.odd_shift_set) {
        for (int k = 1; k < 2 * n; k += 2)
            if (k != n) prod.mul(sq(xi({0, 3}, static_cast<real>(k) / rn, w)));
    } else {
        for (int m = 1; m < n; ++m) prod.mul(sq(xi({0, 3}, (2.0 * m - 1.0) / rn, w)));
    }
    for (int m = 1; m < n; ++m) prod.mul(1.0 / sq(nonzero(xi({0, 3}, 2.0 * m / rn, w), "zeros relation")));
    out.rhs = (opts.times_n2 ? rn * rn : 1.0) * prod.value();
    return out;
}

cplx shifted_sine_sum_product(cplx z, const OrderPair& p, ShiftRule rule, IndexSet index, int first) {
    const Weierstrass& w = p.base();
    Product prod;
    for (int m = first; m < p.n(); ++m)
        prod.mul(sin_reciprocal_sum(z + shift_of(rule, m, p.n()), {w.tau(), SineSign::plus, index, true},
                                    w.policy()));
    return prod.value();
}

cplx sine_product_sum(cplx z, const OrderPair& p, ShiftRule rule, IndexSet index, int first) {
    const Weierstrass& w = p.base();
    const int n = p.n();
    if (!(std::abs(z.imag()) < 2.0 * w.tau().imag()))
        throw Error(ErrorKind::strip_violation, "sine product sum: |Im z| outside the strip");
    const int K = product_terms(w.lattice().q_abs(), w.policy(), n * kPi * std::abs(z.imag()) + 1.0);
    auto term = [&](int k) {
        cplx t = 1.0;
        for (int m = first; m < n; ++m) {
            const cplx x = 2.0 * k * kPi * w.tau() + kPi * (z + shift_of(rule, m, n));
            if (std::abs(x.imag()) < 1.0 && std::abs(std::sin(x)) < kPoleGuard)
                throw PoleProximityError(x / kPi, "sine product sum: term on a zero of sin", k);
            t *= trig::csc(x);
        }
        return t;
    };
    Accumulator acc;
    if (index == IndexSet::all) acc += term(0);
    for (int k = 1; k <= K; ++k) acc += term(k) + term(-k);
    return checked(acc.value(), "sine product sum");
}

cplx sine_multiplication_ratio(cplx x, int n) {
    Product prod;
    for (int m = 0; m < n; ++m) prod.mul(std::sin(x + static_cast<real>(m) * kPi / n));
    return std::sin(static_cast<real>(n) * x) / (std::pow(2.0, n - 1) * prod.value());
}

}  // namespace ellip
