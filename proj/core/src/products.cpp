#include "ellip/products.hpp"

#include "ellip/trig.hpp"

namespace ellip {

namespace {

int terms(const Weierstrass& w, real growth) {
    return product_terms(w.lattice().q_abs(), w.policy(), growth);
}

// Factors depend on sin^2(pi v)/sin^2(k pi tau) ~ exp(pi |Im z|) |q|^{2k}.
real growth_of(cplx z, real scale = 1.0) { return scale * kPi * std::abs(z.imag()); }

void require_nonzero(cplx d, const char* what) {
    if (std::abs(d) < kPoleGuard) throw PoleProximityError(0.0, std::string(what) + ": vanishing denominator");
}

}  // namespace

cplx wp_minus_e1_cot_product(cplx z, const Weierstrass& w) {
    const cplx B = kPi * z / 2.0;
    require_nonzero(std::sin(B), "cot product");
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * w.tau();
        const cplx c = trig::cot(A);
        p.mul(sq(trig::cot(A - B) * trig::cot(A + B) / (c * c)));
    }
    return checked(sq(kPi * trig::cot(B)) / 4.0 * p.value(), "cot product");
}

cplx wp_minus_e1_null_product(cplx z, const Weierstrass& w, int pi_power) {
    const cplx B = kPi * z / 2.0;
    require_nonzero(std::sin(B), "cot product");
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * w.tau();
        p.mul(sq(trig::cot(A - B) * trig::cot(A + B)));
    }
    const cplx lead = std::pow(kPi, pi_power) * w.nulls().t3 * w.nulls().t4 * trig::cot(B);
    return checked(sq(lead) / 4.0 * p.value(), "cot product");
}

cplx wp_minus_e1_symmetric_product(cplx z, const Weierstrass& w) {
    const cplx B = kPi * z / 2.0;
    require_nonzero(std::sin(B), "cot product");
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        for (int s : {1, -1}) {
            const cplx A = static_cast<real>(s * k) * kPi * w.tau();
            p.mul(sq(trig::cot(A - B) / trig::cot(A)));
        }
    }
    return checked(sq(kPi * trig::cot(B)) / 4.0 * p.value(), "cot product");
}

cplx wp_minus_e_product(int j, cplx z, const Weierstrass& w, int tail_exponent) {
    if (j == 1) return wp_minus_e1_cot_product(z, w);
    if (j != 2 && j != 3) throw Error(ErrorKind::invalid_argument, "half-period index must be 1, 2 or 3");
    const cplx B = kPi * z / 2.0;
    const cplx s = std::sin(B);
    require_nonzero(s, "sine product");
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * w.tau();
        const cplx H = (k - 0.5) * kPi * w.tau();
        const cplx rs = s * trig::csc(A);
        const cplx rh = j == 3 ? s * trig::csc(H) : s * trig::sec(H);
        p.mul(sq((1.0 - rh * rh) / (1.0 - rs * rs)));
        if (tail_exponent != 4) {
            const cplx lh = j == 3 ? trig::log_sin(H) : trig::log_cos(H);
            p.mul_log(static_cast<real>(tail_exponent - 4) * (trig::log_sin(A) - lh));
        }
    }
    return checked(kPi * kPi / sq(2.0 * s) * p.value(), "sine product");
}

cplx wp_shift_tan_product(cplx z, const Weierstrass& w) {
    const cplx B = kPi * z / 2.0;
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        for (int s : {1, -1}) {
            const cplx A = static_cast<real>(s * k) * kPi * w.tau();
            p.mul(sq(trig::tan(A - B) / trig::cot(A)));
        }
    }
    return checked(w.e(1) + sq(kPi * trig::tan(B)) / 4.0 * p.value(), "tan product");
}

cplx cot_power_product(cplx phase, int power, const TruncationPolicy& policy) {
    if (phase.imag() == 0.0) throw Error(ErrorKind::invalid_nome, "cotangent product needs Im phase != 0");
    real sign = 1.0;
    if (phase.imag() < 0.0) {
        phase = -phase;
        if (power % 2) sign = -1.0;
    }
    const int K = product_terms(std::exp(-kPi * phase.imag()), policy);
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx c = trig::cot(static_cast<real>(k) * kPi * phase);
        p.mul(std::pow(c, power));
        if (power % 2) p.mul(sign);
    }
    return p.value();
}

std::array<cplx, 3> e_pairwise_products(const Weierstrass& w, PairwiseForm form) {
    const cplx tau = w.tau();
    const cplx phases[3] = {tau, 1.0 / tau, 1.0 / (1.0 + tau)};
    const cplx weights[3] = {1.0, std::pow(tau, -4), std::pow(1.0 + tau, -4)};
    std::array<cplx, 3> out{};
    for (int i = 0; i < 3; ++i) {
        if (form == PairwiseForm::literal) {
            cplx phase = phases[i].imag() < 0.0 ? -phases[i] : phases[i];
            const int K = product_terms(std::exp(-kPi * phase.imag()), w.policy());
            Product p;
            for (int k = 1; k <= K; ++k)
                p.mul(1.0 / (16.0 * std::pow(trig::cot(static_cast<real>(k) * kPi * phase), 8)));
            out[i] = p.value();
            continue;
        }
        cplx v = std::pow(kPi, 4) / 16.0 * cot_power_product(phases[i], -8, w.policy());
        if (form == PairwiseForm::pi4_over_16_weight) v *= weights[i];
        out[i] = v;
    }
    return out;
}

cplx wp_prime_product(cplx z, const Weierstrass& w, cplx constant) {
    const cplx v = z / 2.0;
    const cplx s1 = std::sin(kPi * v), s2 = std::sin(2.0 * kPi * v);
    require_nonzero(s1, "wp' product");
    const int K = terms(w, growth_of(z, 2.0));
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx c = trig::csc(static_cast<real>(k) * kPi * w.tau());
        const cplx r1 = s1 * c, r2 = s2 * c;
        const cplx d = 1.0 - r1 * r1;
        p.mul((1.0 - r2 * r2) / (d * d * d * d));
    }
    return checked(-constant * s2 / sq(sq(s1)) * p.value(), "wp' product");
}

cplx sigma_product(int j, cplx z, const Weierstrass& w, SigmaGauge gauge, int first) {
    if (j < 0 || j > 3) throw Error(ErrorKind::invalid_argument, "sigma index must be in 0..3");
    const cplx v = z / 2.0;
    const cplx s = std::sin(kPi * v);
    const int K = terms(w, growth_of(z));
    const int lo = (j >= 2) ? first : 1;
    Product p;
    for (int k = lo; k <= K; ++k) {
        const real idx = (j >= 2) ? k - 0.5 : static_cast<real>(k);
        const cplx A = idx * kPi * w.tau();
        const cplx r = (j == 0 || j == 3) ? s * trig::csc(A) : s * trig::sec(A);
        p.mul(1.0 - r * r);
    }
    cplx lead = 1.0;
    if (j == 0) lead = 2.0 * s / kPi;
    if (j == 1) lead = std::cos(kPi * v);
    const cplx g = gauge == SigmaGauge::eta_v2_half ? std::exp(w.eta() * v * v / 2.0)
                                                    : std::exp(2.0 * w.eta() * v * v);
    return checked(g * lead * p.value(), "sigma product");
}

cplx sigma1_over_sigma_product(cplx z, const Weierstrass& w) {
    const cplx B = kPi * z / 2.0;
    require_nonzero(std::sin(B), "cot product");
    const int K = terms(w, growth_of(z));
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * w.tau();
        const cplx c = trig::cot(A);
        p.mul(trig::cot(A - B) * trig::cot(A + B) / (c * c));
    }
    return checked(kPi * trig::cot(B) / 2.0 * p.value(), "cot product");
}

}  // namespace ellip
