// Modular parameter, nome and reduction to the fundamental cell of the
// period lattice {2m + 2n tau}.
#pragma once

#include "ellip/numerics.hpp"

namespace ellip {

class LatticeTau {
public:
    explicit LatticeTau(cplx tau);

    cplx tau() const noexcept { return tau_; }
    /// q = exp(i pi tau).
    cplx q() const noexcept { return q_; }
    real q_abs() const noexcept { return q_abs_; }
    /// Half-period: omega(1) = 1, omega(2) = 1 + tau, omega(3) = tau.
    cplx omega(int j) const;

private:
    cplx tau_;
    cplx q_;
    real q_abs_;
};

struct EvalPoint {
    cplx z;
    cplx reduced;
    long a = 0;  // z = reduced + 2a + 2b tau
    long b = 0;
};

/// Reduction without the pole check.
EvalPoint reduce_unchecked(cplx z, const LatticeTau& tau);

/// Reduction into |Im| <= Im tau, |Re| <= 1 (for the row-aligned cell);
/// raises PoleProximityError when the reduced point is within `guard` of
/// a lattice point.
EvalPoint reduce_to_cell(cplx z, const LatticeTau& tau, real guard = kPoleGuard);

/// Nearest lattice point to z, searched over the 9 neighbours of the
/// reduced point.
cplx nearest_lattice_point(cplx z, const LatticeTau& tau);

real pole_distance(cplx z, const LatticeTau& tau);

/// Raises PoleProximityError if z is within `guard` of the shifted lattice
/// `offset + {2m + 2n tau}`; `what` names the singular function.
void require_off_lattice(cplx z, const LatticeTau& tau, cplx offset, const char* what,
                         real guard = kPoleGuard);

}  // namespace ellip
