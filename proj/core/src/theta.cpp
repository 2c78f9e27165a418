#include "ellip/theta.hpp"

#include <cstdio>

#include "ellip/trig.hpp"

namespace ellip {

namespace {

void check_index(int j) {
    if (j < 1 || j > 4) throw Error(ErrorKind::invalid_argument, "theta index must be in 1..4");
}

[[noreturn]] void overflow(int k_max) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "theta series did not converge within k_max = %d", k_max);
    throw Error(ErrorKind::truncation_overflow, buf);
}

// Sums the theta_j series (deriv = 0) or its v-derivative (deriv = 1).
SeriesValue sum_theta(int j, cplx v, const LatticeTau& lt, const TruncationPolicy& policy,
                      int deriv) {
    check_index(j);
    const cplx tau = lt.tau();
    const bool half = j <= 2;
    const bool alternating = j == 1 || j == 4;
    const bool odd = j == 1;  // sine series
    const real tiv = std::abs(v.imag());
    const real peak = tiv / tau.imag();

    Accumulator acc;
    if (!half && deriv == 0) acc.add(1.0);

    real max_mag = half ? 0.0 : (deriv == 0 ? 1.0 : 0.0);
    const int first = half ? 0 : 1;
    int used = 0;
    for (int k = first;; ++k) {
        if (policy.fixed_terms) {
            if (used >= *policy.fixed_terms) break;
        } else if (used >= policy.k_max) {
            overflow(policy.k_max);
        }
        const real h = half ? k + 0.5 : static_cast<real>(k);
        const cplx e = kI * kPi * tau * h * h;
        const cplx x = 2.0 * kPi * h * v;  // argument of sin/cos
        const cplx ep = std::exp(e + kI * x);
        const cplx em = std::exp(e - kI * x);
        cplx term;
        if (deriv == 0)
            term = odd ? -kI * (ep - em) : ep + em;
        else
            term = odd ? 2.0 * kPi * h * (ep + em) : 2.0 * kPi * h * kI * (ep - em);
        if (alternating && (k & 1)) term = -term;
        acc.add(term);
        ++used;

        if (policy.fixed_terms) continue;
        const real mag = std::exp(-kPi * tau.imag() * h * h + 2.0 * kPi * h * tiv) *
                         (deriv ? 2.0 * kPi * h + 1.0 : 1.0);
        max_mag = std::max(max_mag, mag);
        if (h > peak && mag < 1e-3 * policy.eps * max_mag) break;
    }
    return {checked(acc.value(), "theta"), used};
}

}  // namespace

SeriesValue theta_series(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy) {
    return sum_theta(j, v, tau, policy, 0);
}

cplx theta(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy) {
    return sum_theta(j, v, tau, policy, 0).value;
}

cplx theta_prime(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy) {
    return sum_theta(j, v, tau, policy, 1).value;
}

cplx theta_null(int j, const LatticeTau& tau, const TruncationPolicy& policy) {
    if (j < 2 || j > 4) throw Error(ErrorKind::invalid_argument, "null values exist for j = 2, 3, 4");
    return sum_theta(j, 0.0, tau, policy, 0).value;
}

namespace {

// sum (-1)^k (2k+1)^p q^{(k+1/2)^2}
cplx odd_moment(int p, const LatticeTau& lt, const TruncationPolicy& policy) {
    const cplx tau = lt.tau();
    Accumulator acc;
    real max_mag = 0.0;
    for (int k = 0;; ++k) {
        if (policy.fixed_terms) {
            if (k >= *policy.fixed_terms) break;
        } else if (k >= policy.k_max) {
            overflow(policy.k_max);
        }
        const real h = k + 0.5;
        const real w = std::pow(2.0 * k + 1.0, p);
        cplx term = w * std::exp(kI * kPi * tau * h * h);
        if (k & 1) term = -term;
        acc.add(term);
        if (policy.fixed_terms) continue;
        const real mag = w * std::exp(-kPi * tau.imag() * h * h);
        max_mag = std::max(max_mag, mag);
        if (k > 0 && mag < 1e-3 * policy.eps * max_mag) break;
    }
    return acc.value();
}

}  // namespace

cplx theta1_prime0(const LatticeTau& tau, const TruncationPolicy& policy) {
    return checked(2.0 * kPi * odd_moment(1, tau, policy), "theta1'(0)");
}

cplx theta1_third0(const LatticeTau& tau, const TruncationPolicy& policy) {
    return checked(-2.0 * kPi * kPi * kPi * odd_moment(3, tau, policy), "theta1'''(0)");
}

ThetaNulls theta_nulls(const LatticeTau& tau, const TruncationPolicy& policy) {
    return {theta_null(2, tau, policy), theta_null(3, tau, policy), theta_null(4, tau, policy),
            theta1_prime0(tau, policy), theta1_third0(tau, policy)};
}

cplx theta_product(int j, cplx v, const LatticeTau& lt, const TruncationPolicy& policy) {
    if (j != 1 && j != 2)
        throw Error(ErrorKind::invalid_argument, "product form exists for theta1 and theta2");
    const cplx tau = lt.tau();
    const cplx s = std::sin(kPi * v);
    const int K = product_terms(lt.q_abs(), policy, 2.0 * kPi * std::abs(v.imag()));
    Product prod;
    for (int k = 1; k <= K; ++k) {
        const cplx a = static_cast<real>(k) * kPi * tau;
        const cplx r = j == 1 ? s * trig::csc(a) : s * trig::sec(a);
        prod.mul(1.0 - r * r);
    }
    const cplx lead = j == 1 ? theta1_prime0(lt, policy) / kPi * s
                             : theta_null(2, lt, policy) * std::cos(kPi * v);
    return checked(lead * prod.value(), "theta product");
}

}  // namespace ellip
