// Odd-order transformations: relations between elliptic data on the
// lattice (2, 2 tau) and on (2, 2 n tau), (2, 2 tau / n), (2, 2 (tau + 2p) / n).
//
// Every display is exposed with the knobs needed to evaluate it both as
// typeset and in its corrected form; the identity audit decides which reading
// holds. Defaults are the typeset readings.
#pragma once

#include <optional>

#include "ellip/trig_sums.hpp"
#include "ellip/xi.hpp"

namespace ellip {

struct TransformOrder {
    int n = 3;
    int p = 0;  // only used by tau_plus_2p_over_n
};

/// n odd, 1 <= n <= n_max.
void validate(const TransformOrder& order, int n_max = 15);

enum class TransformMode { n_tau, tau_over_n, tau_plus_2p_over_n };

/// n tau, tau / n or (tau + 2p) / n.
cplx transformed_tau(TransformMode mode, const TransformOrder& order, cplx tau);

enum class ShiftRule {
    m_over_n,        // m / n
    two_m_over_n,    // 2m / n, one period split in n
    two_m_pi_over_n  // 2 m pi / n
};

cplx shift_of(ShiftRule rule, int m, int n);

/// The lattices (2, 2 tau) and (2, 2 n tau) side by side.
class OrderPair {
public:
    OrderPair(cplx tau, int n, TruncationPolicy policy = {});
    int n() const noexcept { return n_; }
    const Weierstrass& base() const noexcept { return base_; }
    const Weierstrass& scaled() const noexcept { return scaled_; }

private:
    int n_;
    Weierstrass base_;
    Weierstrass scaled_;
};

// -- building blocks -------------------------------------------------------

/// wp(nz, n tau) - e_j(n tau).
cplx wp_minus_e_scaled(int j, cplx z, const OrderPair& p);
/// prod_{m=first}^{n-1} [wp(z + s_m) - e_j].
cplx shifted_wp_product(int j, cplx z, const OrderPair& p, ShiftRule rule, int first = 0);
/// [theta_a theta_b]^2(n tau) / ([theta_a theta_b]^2(tau))^n with (a, b) the two
/// nulls complementary to j: (3,4), (2,4), (2,3).
cplx null_pair_ratio(int j, const OrderPair& p);
/// theta_t^2(0, n tau) / (theta_t^2(0, tau))^n for t in 2..4; t = 1 uses theta1'.
cplx null_ratio(int t, const OrderPair& p);
/// prod_{k>=1} [cot^n(k pi tau) / cot(k n pi tau)]^4.
cplx cot_transform_product(const OrderPair& p);
/// prod_{k>=1} cot^{2n}(k pi / (2 tau)) / cot^2(k pi / (2 n tau)).
cplx modular_cot_product(const OrderPair& p);
/// prod_{k>=1} cot^{8n}(k pi / tau) / cot^8(k n pi / tau), as typeset.
cplx modular_cot_product_typeset(const OrderPair& p);

// -- wp(nz, n tau) - e_j(n tau) -------------------------------------------

struct WpNOptions {
    ShiftRule shift = ShiftRule::m_over_n;
    /// Exponent of pi in the (4/pi^p)^{n-1} theta-null prefactor; 2 is correct.
    int pi_power = 4;
};

struct WpNValues {
    cplx lhs;
    cplx rhs_theta;
    std::optional<cplx> rhs_cot;  // j = 1 only
};

WpNValues wp_n_identity(int j, cplx z, const OrderPair& p, WpNOptions opts = {});

struct WpRatioOptions {
    ShiftRule shift = ShiftRule::m_over_n;
    /// Multiply every right side by 1/n^2.
    bool inverse_n2 = false;
};

struct WpRatioValues {
    cplx lhs;            // [wp(nz, n tau) - e_j(n tau)] / [wp(z) - e_j]
    cplx squared_pairs;  // prod_{m=1}^{(n-1)/2} [(wp(z) - wp(s_m + w_j)) / (wp(z) - wp(s_m))]^2
    cplx plain_factors;  // prod_{m=1}^{n-1} (wp(z + s_m) - e_j) / (wp(s_m) - e_j)
    cplx sigma_factors;  // prod_{m=1}^{n-1} (wp(z + s_m) - e_j) (sigma / sigma_j)^2(s_m)
};

WpRatioValues wp_ratio_identity(int j, cplx z, const OrderPair& p, WpRatioOptions opts = {});

/// prod_{m=1}^{last} [(wp(z) - wp(s_m + w_j)) / (wp(z) - wp(s_m))]^2.
cplx squared_pair_product(int j, cplx z, const Weierstrass& w, ShiftRule rule, int n, int last);

// -- wp'(nz, n tau) --------------------------------------------------------

struct WpPrimeNOptions {
    ShiftRule theta_shift = ShiftRule::m_over_n;
    /// Replace (4/pi^4)^{n-1} by (-1)^{(n-1)/2} (4/pi)^{n-1}.
    bool signed_four_over_pi = false;
    ShiftRule sample_shift = ShiftRule::two_m_pi_over_n;
    /// Replace the 2^{1-n} prefactor by n^{-3}.
    bool inverse_n3 = false;
};

struct WpPrimeNValues {
    cplx lhs;
    cplx rhs_theta;    // prefactor * theta1'-null ratio * prod_{m=0}^{n-1} wp'(z + s_m)
    cplx rhs_samples;  // c wp'(z) prod_{m=1}^{n-1} wp'(z + s_m) / wp'(s_m)
};

WpPrimeNValues wp_prime_n_identity(cplx z, const OrderPair& p, WpPrimeNOptions opts = {});

// -- wp'/(wp - e_j) at (nz, n tau) ----------------------------------------

struct LogderivNOptions {
    ShiftRule shift = ShiftRule::two_m_over_n;
    /// Multiply the theta-null form by (-1)^{(n-1)/2} pi^{1-n}.
    bool signed_pi_power = false;
    /// Replace the 2^{1-n} prefactor of the sampled form by 1/n.
    bool inverse_n = false;
    /// Index set of the reciprocal-sine form at (nz, n tau), j = 1.
    IndexSet sum_index = IndexSet::nonzero;
};

struct LogderivNValues {
    cplx lhs;
    cplx rhs_product;  // theta_{j+1}-null ratio * prod_{m=0}^{n-1} wp'/(wp - e_j)(z + s_m)
    cplx rhs_samples;  // c prod_{m>=1} (wp(s_m) - e_j)/wp'(s_m) prod_{m>=0} wp'/(wp - e_j)(z + s_m)
    std::optional<cplx> rhs_sum;  // -2 pi sum 1/sin(2 k n pi tau + n pi z), j = 1
};

LogderivNValues logderiv_n_identity(int j, cplx z, const OrderPair& p, LogderivNOptions opts = {});

// -- sigma ----------------------------------------------------------------

struct SigmaNOptions {
    ShiftRule shift = ShiftRule::m_over_n;
    /// Drop the m = 0 factor of the constant product (it vanishes) and
    /// divide by n.
    bool skip_m0_over_n = false;
};

struct PairValues {
    cplx lhs;
    cplx rhs;
};

/// sigma_j/sigma (nu, n tau) against prod sigma/sigma_j (s_m) prod sigma_j/sigma (u + s_m).
PairValues sigma_quotient_n_transform(int j, cplx u, const OrderPair& p, SigmaNOptions opts = {});

struct SigmaRawOptions {
    ShiftRule shift = ShiftRule::m_over_n;
    /// Denominator product over m >= 1 only.
    bool skip_m0 = false;
    /// Use n exp(S u^2 / 2 - (n - 1) eta u), S = sum_{m>=1} wp(s_m), as the prefactor.
    bool derived_prefactor = false;
};

/// sigma(nu, n tau) against exp(...) prod sigma(u + s_m) / sigma(s_m). The
/// typeset prefactor is exp(sum_{m=1}^{n-1} (-n u (m/n) eta + n u wp(m/n))).
PairValues sigma_n_transform_raw(cplx u, const OrderPair& p, SigmaRawOptions opts = {});

// -- xi -------------------------------------------------------------------

struct XiNOptions {
    /// Multiply the right side by 1/n.
    bool over_n = false;
    /// Evaluate the left side at u instead of u/n (modes other than n_tau).
    bool lhs_argument_u = false;
};

/// xi_idx at the transformed (argument, lattice) against
/// xi(u) prod_{m=1}^{n-1} xi(u + s_m) / xi(s_m), s_m = 2m/n, 2m tau/n or 2m (tau + 2p)/n.
PairValues xi_n_transform(XiIndex idx, TransformMode mode, const TransformOrder& order, cplx u,
                          const Weierstrass& base, const Weierstrass& transformed, XiNOptions opts = {});

struct XiLogderivNValues {
    cplx lhs;                       // xi'/xi (nu, n tau), times n on request
    cplx rhs_xi;                    // sum_{m=0}^{n-1} xi'/xi (u + 2m/n)
    cplx rhs_wp;                    // the same through wp'/(2 (wp - e))
    std::optional<cplx> rhs_sine;   // -pi sum_m sum_k 1/sin(...), index (1, 0) only
};

XiLogderivNValues logderiv_xi_n_sum(XiIndex idx, cplx u, const OrderPair& p, bool lhs_times_n = false,
                                    IndexSet sine_index = IndexSet::all);

// -- moduli ---------------------------------------------------------------

struct PeriodRelations {
    cplx l;              // k(n tau) directly
    cplx l_shift;        // xi_21(tau) prod xi_21(tau + 2m/n) / xi_21(2m/n)
    cplx l_squares;      // k^n prod xi_12^2(2m/n)
    cplx lprime;         // k'(n tau) directly
    cplx lprime_typeset; // k'^n prod 1/xi_21^2(2m/n)
    cplx lprime_index23; // k'^n prod 1/xi_23^2(2m/n)
    cplx lprime_squares; // k'^n prod xi_32^2(2m/n)
    cplx zeros_ratio;    // (e1 - e3)(tau) / (e1 - e3)(n tau)
};

PeriodRelations modular_period_relations(const OrderPair& p);

struct ZerosOptions {
    /// Compare against the squared ratio instead of the ratio of square roots.
    bool no_sqrt = false;
    bool times_n2 = false;
    /// Odd numerators 1, 3, ..., 2n - 1 without n instead of 1, ..., 2n - 3.
    bool odd_shift_set = false;
};

/// The zeros relation: returns {left side, right side}.
PairValues zeros_relation(const OrderPair& p, ZerosOptions opts = {});

// -- reciprocal-sine forms at (nz, n tau) ---------------------------------

/// prod_{m=first}^{n-1} sum_{k in index} 1/sin(2 k pi tau + pi (z + s_m)).
cplx shifted_sine_sum_product(cplx z, const OrderPair& p, ShiftRule rule, IndexSet index, int first = 0);

/// sum_{k in index} prod_{m=first}^{n-1} 1/sin(2 k pi tau + pi (z + s_m)).
cplx sine_product_sum(cplx z, const OrderPair& p, ShiftRule rule, IndexSet index, int first = 0);

/// Exact per-term factorization check: sin(n x) / (2^{n-1} prod_m sin(x + m pi / n)).
cplx sine_multiplication_ratio(cplx x, int n);

}  // namespace ellip
