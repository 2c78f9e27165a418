// Infinite-product representations of wp - e_j, wp', the pairwise
// e-differences and the sigma functions. They are evaluated purely from
// trigonometric factors and are meant to be audited against the theta-backed
// reference functions, never used as references themselves.
#pragma once

#include <array>

#include "ellip/weierstrass.hpp"

namespace ellip {

/// (pi cot(pi v))^2/4 prod_{k>=1} [cot(k pi tau - pi v) cot(k pi tau + pi v) / cot^2(k pi tau)]^2,
/// v = z/2.
cplx wp_minus_e1_cot_product(cplx z, const Weierstrass& w);

/// (pi^p theta3(0) theta4(0) cot(pi v))^2/4 prod [cot(k pi tau - pi v) cot(k pi tau + pi v)]^2.
/// The normalized reading has p = 1.
cplx wp_minus_e1_null_product(cplx z, const Weierstrass& w, int pi_power);

/// (pi cot(pi v))^2/4 prod_{k != 0} [cot(k pi tau - pi v) / cot(k pi tau)]^2.
cplx wp_minus_e1_symmetric_product(cplx z, const Weierstrass& w);

/// wp(z) - e_j from trigonometric factors: j = 1 is the cotangent product,
/// j = 2, 3 are the half-shifted cosine/sine quotients with the trailing
/// ratio raised to `tail_exponent` (4 gives the true identity).
cplx wp_minus_e_product(int j, cplx z, const Weierstrass& w, int tail_exponent = 4);

/// wp(z + 1) = e1 + (pi tan(pi v))^2/4 prod_{k != 0} [tan(k pi tau - pi v)/cot(k pi tau)]^2.
cplx wp_shift_tan_product(cplx z, const Weierstrass& w);

enum class PairwiseForm {
    literal,            // prod 1/(16 cot^8)
    pi4_over_16,        // pi^4/16 prod cot^-8
    pi4_over_16_weight  // as above with the modular weight tau^-4, (1+tau)^-4
};

/// {(e1-e2)(e1-e3), (e3-e2)(e3-e1), (e2-e1)(e2-e3)} from cotangent products
/// at k pi tau, k pi / tau and k pi / (1 + tau).
std::array<cplx, 3> e_pairwise_products(const Weierstrass& w, PairwiseForm form);

/// prod_{k>=1} cot^{power}(k pi phase) for Im phase != 0.
cplx cot_power_product(cplx phase, int power, const TruncationPolicy& policy);

/// -C sin(2 pi v)/sin^4(pi v) prod sin(A+2B) sin(A-2B) sin^6 A / [sin(A+B) sin(A-B)]^4,
/// A = k pi tau, B = pi v. The true constant is pi^3/8.
cplx wp_prime_product(cplx z, const Weierstrass& w, cplx constant);

enum class SigmaGauge {
    eta_v2_half,  // exp(eta v^2 / 2)
    two_eta_v2    // exp(2 eta v^2) = exp(eta z^2 / 2)
};

/// sigma (j = 0) and sigma_1..3 (j = 1..3) from the Schwarz-type products.
/// For j = 2, 3 the factors use (k - 1/2) pi tau with k >= first.
cplx sigma_product(int j, cplx z, const Weierstrass& w, SigmaGauge gauge, int first = 1);

/// sigma_1/sigma = (pi cot(pi v))/2 prod cot(A - B) cot(A + B)/cot^2 A.
cplx sigma1_over_sigma_product(cplx z, const Weierstrass& w);

}  // namespace ellip
