// Jacobi theta functions in the period-1-in-v convention:
//   theta1 = 2 sum (-1)^k q^{(k+1/2)^2} sin((2k+1) pi v)
//   theta2 = 2 sum q^{(k+1/2)^2} cos((2k+1) pi v)
//   theta3 = 1 + 2 sum q^{k^2} cos(2k pi v)
//   theta4 = 1 + 2 sum (-1)^k q^{k^2} cos(2k pi v)
// q^{(k+1/2)^2} is always formed as exp(i pi tau (k+1/2)^2); no fractional
// power of q is ever taken.
#pragma once

#include "ellip/lattice.hpp"

namespace ellip {

/// Value plus the number of series terms that were summed.
struct SeriesValue {
    cplx value;
    int terms = 0;
};

SeriesValue theta_series(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy = {});

cplx theta(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy = {});

/// d/dv theta_j(v).
cplx theta_prime(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy = {});

/// theta_j(0) for j in {2, 3, 4} from its own series.
cplx theta_null(int j, const LatticeTau& tau, const TruncationPolicy& policy = {});

/// theta1'(0) = 2 pi sum (-1)^k (2k+1) q^{(k+1/2)^2}.
cplx theta1_prime0(const LatticeTau& tau, const TruncationPolicy& policy = {});

/// theta1'''(0) = -2 pi^3 sum (-1)^k (2k+1)^3 q^{(k+1/2)^2}.
cplx theta1_third0(const LatticeTau& tau, const TruncationPolicy& policy = {});

struct ThetaNulls {
    cplx t2, t3, t4;  // theta_j(0)
    cplx t1p;         // theta1'(0)
    cplx t1ppp;       // theta1'''(0)
};

ThetaNulls theta_nulls(const LatticeTau& tau, const TruncationPolicy& policy = {});

/// theta1 (j = 1) or theta2 (j = 2) rebuilt from the sine/cosine product
///   theta1(v) = theta1'(0)/pi sin(pi v) prod [1 - sin^2(pi v)/sin^2(k pi tau)]
///   theta2(v) = theta2(0) cos(pi v) prod [1 - sin^2(pi v)/cos^2(k pi tau)]
cplx theta_product(int j, cplx v, const LatticeTau& tau, const TruncationPolicy& policy = {});

}  // namespace ellip
