#include "ellip/weierstrass.hpp"

#include "ellip/trig.hpp"

namespace ellip {

cplx EValues::operator[](int j) const {
    switch (j) {
        case 1: return e1;
        case 2: return e2;
        case 3: return e3;
    }
    throw Error(ErrorKind::invalid_argument, "e index must be 1, 2 or 3");
}

namespace {

EValues e_from_nulls(const ThetaNulls& n) {
    const real c = kPi * kPi / 12.0;
    const cplx t2 = sq(sq(n.t2)), t3 = sq(sq(n.t3)), t4 = sq(sq(n.t4));
    return {c * (t3 + t4), c * (t2 - t4), -c * (t2 + t3)};
}

}  // namespace

EValues e_values(const LatticeTau& tau, const TruncationPolicy& policy) {
    return e_from_nulls(theta_nulls(tau, policy));
}

cplx eta1(const LatticeTau& lt, const TruncationPolicy& policy, int first) {
    if (first <= 0)
        throw Error(ErrorKind::division_degeneracy, "eta series: the n = 0 term 1/sin^2(0) diverges");
    const int K = product_terms(lt.q_abs(), policy);
    Accumulator acc;
    acc.add(1.0 / 6.0);
    for (int n = first; n <= K; ++n) acc.add(sq(trig::csc(static_cast<real>(n) * kPi * lt.tau())));
    return checked(kPi * kPi / 2.0 * acc.value(), "eta");
}

Weierstrass::Weierstrass(cplx tau, TruncationPolicy policy)
    : Weierstrass(LatticeTau(tau), policy) {}

Weierstrass::Weierstrass(const LatticeTau& tau, TruncationPolicy policy)
    : tau_(tau), policy_(policy) {
    policy_.validate();
    nulls_ = theta_nulls(tau_, policy_);
    e_ = e_from_nulls(nulls_);
    eta_ = -nulls_.t1ppp / (12.0 * nulls_.t1p);
}

cplx Weierstrass::g(int j, cplx v) const {
    switch (j) {
        case 0: return 2.0 * theta(1, v, tau_, policy_) / nulls_.t1p;
        case 1: return theta(2, v, tau_, policy_) / nulls_.t2;
        case 2: return theta(3, v, tau_, policy_) / nulls_.t3;
        case 3: return theta(4, v, tau_, policy_) / nulls_.t4;
    }
    throw Error(ErrorKind::invalid_argument, "sigma index must be in 0..3");
}

cplx Weierstrass::theta_ratio(cplx v) const {
    return nulls_.t1p * theta(2, v, tau_, policy_) / (2.0 * nulls_.t2 * theta(1, v, tau_, policy_));
}

cplx Weierstrass::wp(const EvalPoint& z) const {
    return checked(e_.e1 + sq(theta_ratio(z.reduced / 2.0)), "wp");
}

cplx Weierstrass::wp(cplx z) const { return wp(reduce_to_cell(z, tau_)); }

cplx Weierstrass::wp_prime(const EvalPoint& z) const {
    const cplx v = z.reduced / 2.0;
    const cplx g0 = g(0, v);
    return checked(-2.0 * g(1, v) * g(2, v) * g(3, v) / (g0 * g0 * g0), "wp'");
}

cplx Weierstrass::wp_prime(cplx z) const { return wp_prime(reduce_to_cell(z, tau_)); }

cplx Weierstrass::wp_second(cplx z) const {
    const cplx p = wp(z);
    const cplx a = p - e_.e1, b = p - e_.e2, c = p - e_.e3;
    return 2.0 * (b * c + a * c + a * b);
}

cplx Weierstrass::sigma_j(int j, cplx z) const {
    if (j < 0 || j > 3) throw Error(ErrorKind::invalid_argument, "sigma index must be in 0..3");
    if (j == 0 && std::abs(z) < 1e-5) return z;
    return checked(std::exp(eta_ * z * z / 2.0) * g(j, z / 2.0), "sigma");
}

cplx Weierstrass::sigma_logderiv(int j, cplx z) const {
    if (j < 0 || j > 3) throw Error(ErrorKind::invalid_argument, "sigma index must be in 0..3");
    require_off_lattice(z, tau_, j == 0 ? cplx{0.0} : omega(j), "sigma log-derivative");
    const int t = j == 0 ? 1 : j + 1;
    const cplx v = z / 2.0;
    return checked(eta_ * z + 0.5 * theta_prime(t, v, tau_, policy_) / theta(t, v, tau_, policy_),
                   "sigma log-derivative");
}

cplx Weierstrass::zeta(cplx z) const { return sigma_logderiv(0, z); }

cplx wp(const EvalPoint& z, const LatticeTau& tau, const TruncationPolicy& policy) {
    return Weierstrass(tau, policy).wp(z);
}

cplx wp_prime(const EvalPoint& z, const LatticeTau& tau, const TruncationPolicy& policy) {
    return Weierstrass(tau, policy).wp_prime(z);
}

cplx sigma(cplx z, const LatticeTau& tau, const TruncationPolicy& policy) {
    return Weierstrass(tau, policy).sigma(z);
}

cplx sigma_j(int j, cplx z, const LatticeTau& tau, const TruncationPolicy& policy) {
    return Weierstrass(tau, policy).sigma_j(j, z);
}

cplx zeta_w(cplx z, const LatticeTau& tau, const TruncationPolicy& policy) {
    return Weierstrass(tau, policy).zeta(z);
}

cplx wp_periods(cplx z, cplx w1, cplx w3, const TruncationPolicy& policy) {
    if (w1 == cplx{0.0}) throw Error(ErrorKind::invalid_argument, "degenerate period pair");
    cplx r = w3 / w1;
    if (r.imag() == 0.0) throw Error(ErrorKind::invalid_argument, "periods are collinear");
    if (r.imag() < 0.0) w3 = -w3;
    // Basis reduction toward |Re tau| <= 1/2, |tau| >= 1.
    for (int it = 0; it < 64; ++it) {
        r = w3 / w1;
        const real m = std::nearbyint(r.real());
        w3 -= m * w1;
        r = w3 / w1;
        if (std::abs(r) >= 1.0) break;
        const cplx t = w1;
        w1 = w3;
        w3 = -t;
    }
    const Weierstrass W(w3 / w1, policy);
    return W.wp(z / w1) / (w1 * w1);
}

}  // namespace ellip
