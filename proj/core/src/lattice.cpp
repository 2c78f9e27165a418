#include "ellip/lattice.hpp"

#include <cstdio>

namespace ellip {

LatticeTau::LatticeTau(cplx tau) : tau_(tau) {
    if (!is_finite(tau) || !(tau.imag() > 0.0))
        throw Error(ErrorKind::invalid_nome, "tau must have positive imaginary part");
    q_ = std::exp(kI * kPi * tau);
    q_abs_ = std::exp(-kPi * tau.imag());
    if (!(q_abs_ > 0.0))
        throw Error(ErrorKind::invalid_nome, "Im tau too large: nome underflows");
}

cplx LatticeTau::omega(int j) const {
    switch (j) {
        case 1: return 1.0;
        case 2: return 1.0 + tau_;
        case 3: return tau_;
    }
    throw Error(ErrorKind::invalid_argument, "half-period index must be 1, 2 or 3");
}

EvalPoint reduce_unchecked(cplx z, const LatticeTau& tau) {
    if (!is_finite(z)) throw Error(ErrorKind::non_finite, "argument is not finite");
    const cplx t = tau.tau();
    const real b = std::nearbyint(z.imag() / (2.0 * t.imag()));
    const real a = std::nearbyint((z.real() - 2.0 * b * t.real()) / 2.0);
    EvalPoint p;
    p.z = z;
    p.a = static_cast<long>(a);
    p.b = static_cast<long>(b);
    p.reduced = z - 2.0 * a - 2.0 * b * t;
    return p;
}

cplx nearest_lattice_point(cplx z, const LatticeTau& tau) {
    const EvalPoint p = reduce_unchecked(z, tau);
    const cplx t = tau.tau();
    cplx best = 0.0;
    real best_d = std::abs(p.reduced);
    for (int n = -1; n <= 1; ++n) {
        const real m0 = std::nearbyint((p.reduced.real() - 2.0 * n * t.real()) / 2.0);
        for (int dm = -1; dm <= 1; ++dm) {
            const cplx w = 2.0 * (m0 + dm) + 2.0 * static_cast<real>(n) * t;
            const real d = std::abs(p.reduced - w);
            if (d < best_d) {
                best_d = d;
                best = w;
            }
        }
    }
    return best + 2.0 * static_cast<real>(p.a) + 2.0 * static_cast<real>(p.b) * t;
}

real pole_distance(cplx z, const LatticeTau& tau) {
    return std::abs(z - nearest_lattice_point(z, tau));
}

EvalPoint reduce_to_cell(cplx z, const LatticeTau& tau, real guard) {
    EvalPoint p = reduce_unchecked(z, tau);
    const cplx w = nearest_lattice_point(p.reduced, tau);
    if (std::abs(p.reduced - w) < guard) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "argument within %.3g of lattice point %.6g%+.6gi", guard,
                      (w + p.z - p.reduced).real(), (w + p.z - p.reduced).imag());
        throw PoleProximityError(w + p.z - p.reduced, buf);
    }
    return p;
}

void require_off_lattice(cplx z, const LatticeTau& tau, cplx offset, const char* what,
                         real guard) {
    const cplx w = nearest_lattice_point(z - offset, tau) + offset;
    if (std::abs(z - w) < guard) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: argument within %.3g of singular point %.6g%+.6gi",
                      what, guard, w.real(), w.imag());
        throw PoleProximityError(w, buf);
    }
}

}  // namespace ellip
