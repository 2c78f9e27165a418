#include "ellip/trig_sums.hpp"

#include <cstdio>

#include "ellip/trig.hpp"

namespace ellip {

namespace {

cplx csc_checked(cplx x, long k) {
    if (std::abs(x.imag()) < 1.0 && std::abs(std::sin(x)) < kPoleGuard)
        throw PoleProximityError(x / kPi, "reciprocal sine sum: term on a zero of sin", k);
    return trig::csc(x);
}

cplx cot_checked(cplx x, long k) {
    if (std::abs(x.imag()) < 1.0 && std::abs(std::sin(x)) < kPoleGuard)
        throw PoleProximityError(x / kPi, "cotangent sum: term on a zero of sin", k);
    return trig::cot(x);
}

int sum_terms(const Weierstrass& w, cplx z, real scale = 1.0) {
    return product_terms(w.lattice().q_abs(), w.policy(), scale * kPi * std::abs(z.imag()) + 1.0);
}

}  // namespace

SeriesValue sin_reciprocal_series(cplx w, const SineSumSpec& spec, const TruncationPolicy& policy) {
    cplx phase = spec.phase;
    if (phase.imag() == 0.0) throw Error(ErrorKind::invalid_nome, "sine sum needs Im phase != 0");
    // Both index sets are symmetric in k, so the phase sign is immaterial.
    if (phase.imag() < 0.0) phase = -phase;
    if (spec.check_strip && !(std::abs(w.imag()) < 2.0 * phase.imag())) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "sine sum: |Im w| = %.6g outside the strip of half-width %.6g",
                      std::abs(w.imag()), 2.0 * phase.imag());
        throw Error(ErrorKind::strip_violation, buf);
    }
    const real sgn = spec.sign == SineSign::plus ? 1.0 : -1.0;
    const cplx pw = sgn * kPi * w;
    const int K = product_terms(std::exp(-kPi * phase.imag()), policy, kPi * std::abs(w.imag()) + 1.0);
    Accumulator acc;
    if (spec.index == IndexSet::all) acc += csc_checked(pw, 0);
    for (int k = 1; k <= K; ++k) {
        const cplx a = 2.0 * static_cast<real>(k) * kPi * phase;
        acc += csc_checked(a + pw, k) + csc_checked(-a + pw, -k);
    }
    return {checked(acc.value(), "sine sum"), K};
}

cplx sin_reciprocal_sum(cplx w, const SineSumSpec& spec, const TruncationPolicy& policy) {
    return sin_reciprocal_series(w, spec, policy).value;
}

cplx sine_sum(cplx w, cplx phase, const TruncationPolicy& policy, IndexSet index) {
    return sin_reciprocal_sum(w, {phase, SineSign::plus, index, true}, policy);
}

cplx wp_logderiv_singleton_sum(cplx z, const Weierstrass& w, IndexSet rest) {
    const cplx rest_sum = sin_reciprocal_sum(z, {w.tau(), SineSign::minus, rest, true}, w.policy());
    return -2.0 * kPi * csc_checked(kPi * z, 0) + 2.0 * kPi * rest_sum;
}

cplx wp_logderiv_paired_sum(cplx z, const Weierstrass& w) {
    if (!(std::abs(z.imag()) < 2.0 * w.tau().imag()))
        throw Error(ErrorKind::strip_violation, "paired sum: |Im z| outside the strip");
    const int K = sum_terms(w, z);
    Accumulator acc;
    for (int k = 1; k <= K; ++k) {
        const cplx a = 2.0 * static_cast<real>(k) * kPi * w.tau();
        acc += csc_checked(a - kPi * z, k) - csc_checked(a + kPi * z, k);
    }
    return -2.0 * kPi * csc_checked(kPi * z, 0) + 2.0 * kPi * acc.value();
}

cplx wp_logderiv_full_sum(cplx z, const Weierstrass& w, IndexSet index) {
    return 2.0 * kPi * sin_reciprocal_sum(z, {w.tau(), SineSign::minus, index, true}, w.policy());
}

cplx sigma_logderiv_sum(int j, cplx z, const Weierstrass& w, SigmaSeriesForm form,
                        SigmaSeriesOptions opts) {
    if (j < 0 || j > 3) throw Error(ErrorKind::invalid_argument, "sigma index must be in 0..3");
    if (form == SigmaSeriesForm::cotangent && (j == 1 || j == 3))
        throw Error(ErrorKind::invalid_argument, "no cotangent form for this sigma index");
    const cplx B = kPi * z / 2.0;
    const cplx sz = std::sin(kPi * z);
    const int K = sum_terms(w, z);
    const int lo = (j >= 2) ? opts.first : 1;
    Accumulator acc;
    if (j == 0) acc += cot_checked(B, 0);
    if (j == 1) acc += -trig::tan(B);
    for (int k = lo; k <= K; ++k) {
        const real idx = (j >= 2) ? k - 0.5 : static_cast<real>(k);
        const cplx A = idx * kPi * w.tau();
        if (form == SigmaSeriesForm::cotangent) {
            if (j == 0) {
                acc += cot_checked(A + B, k) - cot_checked(A - B, k);
            } else {
                const cplx second = opts.literal_tangent ? A + B : A - B;
                acc += -(trig::tan(A + B) - trig::tan(second));
            }
            continue;
        }
        // sin(pi z) / (cos^2 A - cos^2 B) written as sin(pi z) sec^2 A / (1 - cos^2 B sec^2 A),
        // which stays finite once cos A overflows.
        const cplx t = trig::sec(A);
        const cplx t2 = t * t;
        switch (j) {
            case 0:
            case 3: {
                const cplx c = std::cos(B);
                acc += sz * t2 / (1.0 - c * c * t2);
                break;
            }
            default: {
                const cplx s = std::sin(B);
                acc += -sz * t2 / (1.0 - s * s * t2);
                break;
            }
        }
    }
    return checked(w.eta() * z + kPi / 2.0 * acc.value(), "sigma series");
}

std::array<cplx, 4> sigma_logderiv_combos(cplx z, const Weierstrass& w, ComboOptions opts) {
    const cplx pz = kPi * z;
    const int K = sum_terms(w, z, 2.0);
    Accumulator c1, c2, c3, c4;
    if (opts.singleton) c1 += -csc_checked(pz, 0);
    c3 += cot_checked(pz, 0);
    for (int k = 1; k <= K; ++k) {
        const cplx a = 2.0 * static_cast<real>(k) * kPi * w.tau();
        c1 += csc_checked(a - pz, k) - csc_checked(a + pz, k);
        c3 += cot_checked(a + pz, k) - cot_checked(a - pz, k);
    }
    for (int k = opts.first; k <= K; ++k) {
        const cplx h = (2.0 * k - 1.0) * kPi * w.tau();
        c2 += csc_checked(h - pz, k) - csc_checked(h + pz, k);
        c4 += cot_checked(h + pz, k) - cot_checked(h - pz, k);
    }
    const cplx lin = 2.0 * w.eta() * z;
    return {kPi * c1.value(), kPi * c2.value(), lin + kPi * c3.value(), lin + kPi * c4.value()};
}

namespace {

struct ModularTerms {
    cplx s;   // phase tau
    cplx s3;  // phase -1/tau
    cplx s2;  // phase -1/(tau + 1)
};

ModularTerms modular_terms(cplx z, const Weierstrass& w, ModularArgument arg, bool need_s = true) {
    const cplx tau = w.tau();
    const bool scaled = arg == ModularArgument::rescaled;
    ModularTerms t{};
    if (need_s) t.s = sine_sum(z, tau, w.policy());
    t.s3 = sine_sum(scaled ? z / tau : z, -1.0 / tau, w.policy());
    t.s2 = sine_sum(scaled ? z / (tau + 1.0) : z, -1.0 / (tau + 1.0), w.policy());
    return t;
}

}  // namespace

cplx wp_from_double_sum(int j, cplx z, const Weierstrass& w, ModularArgument arg) {
    if (j < 1 || j > 3) throw Error(ErrorKind::invalid_argument, "half-period index must be 1, 2 or 3");
    const cplx tau = w.tau();
    const bool scaled = arg == ModularArgument::rescaled;
    const ModularTerms t = modular_terms(z, w, arg);
    const cplx p2 = kPi * kPi;
    switch (j) {
        case 1: return p2 * (scaled ? 1.0 / (tau * (tau + 1.0)) : 1.0) * t.s2 * t.s3;
        case 2: return p2 * (scaled ? 1.0 / tau : 1.0) * t.s * t.s3;
        default: return p2 * (scaled ? 1.0 / (tau + 1.0) : 1.0) * t.s * t.s2;
    }
}

cplx wp_prime_from_triple_sum(cplx z, const Weierstrass& w, ModularArgument arg) {
    const cplx tau = w.tau();
    const ModularTerms t = modular_terms(z, w, arg);
    const cplx pre = arg == ModularArgument::rescaled ? 1.0 / (tau * (tau + 1.0)) : 1.0;
    return -2.0 * kPi * kPi * kPi * pre * t.s * t.s2 * t.s3;
}

cplx wp_logderiv_modular_sum(int j, cplx z, const Weierstrass& w, ModularArgument arg) {
    if (j != 2 && j != 3) throw Error(ErrorKind::invalid_argument, "index must be 2 or 3");
    const cplx tau = w.tau();
    const bool scaled = arg == ModularArgument::rescaled;
    const ModularTerms t = modular_terms(z, w, arg, false);
    if (j == 3) return -2.0 * kPi * (scaled ? 1.0 / tau : 1.0) * t.s3;
    return -2.0 * kPi * (scaled ? 1.0 / (tau + 1.0) : 1.0) * t.s2;
}

cplx xi_logderiv_sum(int alpha, cplx z, const Weierstrass& w, IndexSet index, ModularArgument arg) {
    const cplx tau = w.tau();
    const bool scaled = arg == ModularArgument::rescaled;
    switch (alpha) {
        case 1: return -kPi * sine_sum(z, tau, w.policy(), index);
        case 2: {
            const cplx m = tau + 1.0;
            return -kPi * (scaled ? 1.0 / m : 1.0) * sine_sum(scaled ? z / m : z, -1.0 / m, w.policy(), index);
        }
        case 3:
            return -kPi * (scaled ? 1.0 / tau : 1.0) *
                   sine_sum(scaled ? z / tau : z, -1.0 / tau, w.policy(), index);
        default: throw Error(ErrorKind::invalid_argument, "xi index must be 1, 2 or 3");
    }
}

}  // namespace ellip
