// The twelve quotients xi_{bg} = sigma_b / sigma_g (index 0 meaning sigma
// itself), their derivatives and the moduli k, k'.
#pragma once

#include "ellip/weierstrass.hpp"

namespace ellip {

struct XiIndex {
    int beta;
    int gamma;
};

void validate(XiIndex idx);

/// sigma_beta(u)/sigma_gamma(u). The exponential gauge cancels, so this is
/// a pure theta quotient; no square root is taken.
cplx xi(XiIndex idx, cplx u, const Weierstrass& w);

/// Derivative from the closed form xi'_{a0} = -xi_{b0} xi_{g0} and the
/// quotient rule for every other index pair.
cplx xi_prime(XiIndex idx, cplx u, const Weierstrass& w);

struct Moduli {
    cplx k;       // xi_21(omega_3)
    cplx kprime;  // xi_23(omega_1)
};

/// Evaluated directly at the half-periods, where the sigma quotients are
/// analytic.
Moduli moduli(const Weierstrass& w);

}  // namespace ellip
