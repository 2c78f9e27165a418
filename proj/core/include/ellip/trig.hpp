// Complex trigonometric kernels written through exponentials of
// non-positive real part, so they stay finite for large |Im w|.
#pragma once

#include "ellip/numerics.hpp"

namespace ellip::trig {

inline cplx sin(cplx w) { return std::sin(w); }
inline cplx cos(cplx w) { return std::cos(w); }

/// 1 / sin(w).
inline cplx csc(cplx w) {
    if (w.imag() >= 0.0) {
        const cplx e = std::exp(kI * w);
        return 2.0 * kI * e / (e * e - 1.0);
    }
    const cplx e = std::exp(-kI * w);
    return 2.0 * kI * e / (1.0 - e * e);
}

/// 1 / cos(w).
inline cplx sec(cplx w) {
    if (w.imag() >= 0.0) {
        const cplx e = std::exp(kI * w);
        return 2.0 * e / (e * e + 1.0);
    }
    const cplx e = std::exp(-kI * w);
    return 2.0 * e / (1.0 + e * e);
}

inline cplx cot(cplx w) {
    if (w.imag() > 0.0) {
        const cplx e2 = std::exp(2.0 * kI * w);
        return kI * (e2 + 1.0) / (e2 - 1.0);
    }
    const cplx e2 = std::exp(-2.0 * kI * w);
    return -kI * (e2 + 1.0) / (e2 - 1.0);
}

inline cplx tan(cplx w) {
    if (w.imag() > 0.0) {
        const cplx e2 = std::exp(2.0 * kI * w);
        return -kI * (e2 - 1.0) / (e2 + 1.0);
    }
    const cplx e2 = std::exp(-2.0 * kI * w);
    return kI * (e2 - 1.0) / (e2 + 1.0);
}

/// A logarithm of sin(w); the branch is irrelevant once exponentiated.
inline cplx log_sin(cplx w) {
    if (w.imag() >= 0.0) return -kI * w + std::log((std::exp(2.0 * kI * w) - 1.0) / (2.0 * kI));
    return kI * w + std::log((1.0 - std::exp(-2.0 * kI * w)) / (2.0 * kI));
}

inline cplx log_cos(cplx w) {
    if (w.imag() >= 0.0) return -kI * w + std::log((std::exp(2.0 * kI * w) + 1.0) / 2.0);
    return kI * w + std::log((1.0 + std::exp(-2.0 * kI * w)) / 2.0);
}

}  // namespace ellip::trig
