// Seeded sampling and comparison helpers shared by the test binaries.
#pragma once

#include <algorithm>
#include <functional>
#include <random>

#include "ellip/lattice.hpp"

namespace testing {

using ellip::cplx;
using ellip::real;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    real uniform(real lo, real hi) { return std::uniform_real_distribution<real>(lo, hi)(gen_); }

    /// Re tau in [-0.5, 0.5], Im tau in [lo, hi].
    cplx tau(real lo = 0.8, real hi = 2.0) { return {uniform(-0.5, 0.5), uniform(lo, hi)}; }

    /// Point of the strip |Im z| <= fraction Im tau, at least `gap` from the
    /// half-period lattice {a + b tau}.
    cplx z(cplx tau, real fraction = 0.8, real gap = 0.05) {
        const ellip::LatticeTau L(tau);
        for (;;) {
            const cplx z{uniform(-1.0, 1.0), uniform(-fraction, fraction) * tau.imag()};
            if (ellip::pole_distance(2.0 * z, L) / 2.0 > gap) return z;
        }
    }

private:
    std::mt19937_64 gen_;
};

/// Runs body(tau, z) on seeded draws until it has succeeded `count` times;
/// draws raising strip or pole errors are replaced. Returns the successes.
inline int for_samples(std::uint64_t seed, int count, real tau_lo, real tau_hi, real fraction,
                       const std::function<void(cplx, cplx)>& body) {
    Rng rng(seed);
    int done = 0;
    for (int tries = 0; done < count && tries < 20 * count; ++tries) {
        const cplx tau = rng.tau(tau_lo, tau_hi);
        const cplx z = rng.z(tau, fraction);
        try {
            body(tau, z);
            ++done;
        } catch (const ellip::Error& e) {
            if (e.kind() != ellip::ErrorKind::strip_violation && e.kind() != ellip::ErrorKind::pole_proximity &&
                e.kind() != ellip::ErrorKind::division_degeneracy)
                throw;
        }
    }
    return done;
}

/// |a - b| / (1 + max(|a|, |b|)), the audit residual.
inline real residual(cplx a, cplx b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

/// |a - b| / max(|a|, |b|).
inline real relative(cplx a, cplx b) {
    const real s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

template <class F>
cplx central_difference(F f, cplx z, real h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace testing
