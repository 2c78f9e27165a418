// Theta-backed Weierstrass functions for the period lattice (2, 2 tau).
// These are the reference values every product and sum form is audited
// against.
#pragma once

#include <array>

#include "ellip/theta.hpp"

namespace ellip {

struct EValues {
    cplx e1, e2, e3;
    cplx operator[](int j) const;
};

/// e_j = pi^2/12 (theta3^4 + theta4^4), pi^2/12 (theta2^4 - theta4^4),
/// -pi^2/12 (theta2^4 + theta3^4) for j = 1, 2, 3.
EValues e_values(const LatticeTau& tau, const TruncationPolicy& policy = {});

/// eta = pi^2/2 (1/6 + sum_{n >= first} 1/sin^2(n pi tau)). A first index
/// of 0 hits the divergent n = 0 term and raises division_degeneracy.
cplx eta1(const LatticeTau& tau, const TruncationPolicy& policy = {}, int first = 1);

/// All functions of one lattice. Theta nulls, e_j and eta are computed
/// once at construction; the object is immutable afterwards.
class Weierstrass {
public:
    explicit Weierstrass(cplx tau, TruncationPolicy policy = {});
    explicit Weierstrass(const LatticeTau& tau, TruncationPolicy policy = {});

    const LatticeTau& lattice() const noexcept { return tau_; }
    cplx tau() const noexcept { return tau_.tau(); }
    const TruncationPolicy& policy() const noexcept { return policy_; }
    const ThetaNulls& nulls() const noexcept { return nulls_; }
    const EValues& e() const noexcept { return e_; }
    cplx e(int j) const { return e_[j]; }
    /// Quasi-period constant from theta nulls: -theta1'''(0) / (12 theta1'(0)).
    cplx eta() const noexcept { return eta_; }
    cplx omega(int j) const { return tau_.omega(j); }

    cplx wp(cplx z) const;
    cplx wp(const EvalPoint& z) const;
    cplx wp_prime(cplx z) const;
    cplx wp_prime(const EvalPoint& z) const;
    /// From the cubic: 2 [(wp-e2)(wp-e3) + (wp-e1)(wp-e3) + (wp-e1)(wp-e2)].
    cplx wp_second(cplx z) const;

    /// sigma (j = 0) and the co-sigma functions sigma_1..3 (j = 1..3).
    cplx sigma(cplx z) const { return sigma_j(0, z); }
    cplx sigma_j(int j, cplx z) const;
    cplx zeta(cplx z) const;
    /// sigma_j'/sigma_j; j = 0 gives zeta.
    cplx sigma_logderiv(int j, cplx z) const;

    /// Normalized theta quotients in the half argument v = z/2:
    /// g_0 = 2 theta1(v)/theta1'(0), g_j = theta_{j+1}(v)/theta_{j+1}(0).
    /// sigma_j(z) = exp(eta z^2 / 2) g_j(z/2).
    cplx g(int j, cplx v) const;

private:
    cplx theta_ratio(cplx v) const;  // (theta1'(0) theta2(v)) / (2 theta2(0) theta1(v))

    LatticeTau tau_;
    TruncationPolicy policy_;
    ThetaNulls nulls_;
    EValues e_;
    cplx eta_;
};

// Free-function forms.
cplx wp(const EvalPoint& z, const LatticeTau& tau, const TruncationPolicy& policy = {});
cplx wp_prime(const EvalPoint& z, const LatticeTau& tau, const TruncationPolicy& policy = {});
cplx sigma(cplx z, const LatticeTau& tau, const TruncationPolicy& policy = {});
cplx sigma_j(int j, cplx z, const LatticeTau& tau, const TruncationPolicy& policy = {});
cplx zeta_w(cplx z, const LatticeTau& tau, const TruncationPolicy& policy = {});

/// wp for an arbitrary period pair (2 w1, 2 w3) with Im(w3/w1) != 0. The
/// ratio is moved into the fundamental domain before evaluation.
cplx wp_periods(cplx z, cplx w1, cplx w3, const TruncationPolicy& policy = {});

}  // namespace ellip
