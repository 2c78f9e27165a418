// Reciprocal-sine sums and the trigonometric series for the logarithmic
// derivatives of wp - e_j and of the sigma functions.
#pragma once

#include <array>

#include "ellip/weierstrass.hpp"

namespace ellip {

enum class IndexSet { all, nonzero };
enum class SineSign { plus, minus };

/// sum_{k in index} 1 / sin(2 k pi phase +/- pi w).
struct SineSumSpec {
    cplx phase;
    SineSign sign = SineSign::plus;
    IndexSet index = IndexSet::all;
    /// Require |Im w| < 2 Im phase.
    bool check_strip = true;
};

/// Symmetric partial sums with k and -k paired. Raises PoleProximityError
/// (carrying k) when a term's sine is within the pole guard of zero and
/// strip_violation outside the strip.
SeriesValue sin_reciprocal_series(cplx w, const SineSumSpec& spec, const TruncationPolicy& policy = {});
cplx sin_reciprocal_sum(cplx w, const SineSumSpec& spec, const TruncationPolicy& policy = {});

/// S(w; phase) = sum over all k of 1/sin(2 k pi phase + pi w).
cplx sine_sum(cplx w, cplx phase, const TruncationPolicy& policy = {},
              IndexSet index = IndexSet::all);

// -- wp'/(wp - e1) ---------------------------------------------------------

/// -2 pi / sin(pi z) + 2 pi sum_{k in rest} 1/sin(2 k pi tau - pi z).
cplx wp_logderiv_singleton_sum(cplx z, const Weierstrass& w, IndexSet rest = IndexSet::nonzero);
/// -2 pi / sin(pi z) + 2 pi sum_{k>=1} [1/sin(2k pi tau - pi z) - 1/sin(2k pi tau + pi z)].
cplx wp_logderiv_paired_sum(cplx z, const Weierstrass& w);
/// sum_{k in index} 2 pi / sin(2 k pi tau - pi z).
cplx wp_logderiv_full_sum(cplx z, const Weierstrass& w, IndexSet index = IndexSet::all);

// -- sigma log-derivatives -------------------------------------------------

enum class SigmaSeriesForm {
    cotangent,  // cot / tan differences
    quotient    // sin(pi z) / (cos^2 - cos^2) quotients
};

struct SigmaSeriesOptions {
    /// Lower summation index for the half-shifted (k - 1/2) pi tau forms.
    int first = 1;
    /// Evaluate the tangent difference exactly as typeset, with both terms
    /// at +pi z/2 (it then vanishes identically).
    bool literal_tangent = false;
};

/// sigma_j'/sigma_j for j in 0..3 from its trigonometric series; eta is the
/// lattice's quasi-period constant. The cotangent form exists for j = 0, 2.
cplx sigma_logderiv_sum(int j, cplx z, const Weierstrass& w, SigmaSeriesForm form,
                        SigmaSeriesOptions opts = {});

struct ComboOptions {
    /// Add the -pi/sin(pi z) singleton to the first combination.
    bool singleton = false;
    /// Lower index of the (2k - 1) pi tau sums.
    int first = 0;
};

/// {sigma_1'/sigma_1 - sigma'/sigma, sigma_2'/sigma_2 - sigma_3'/sigma_3,
///  sigma_1'/sigma_1 + sigma'/sigma, sigma_2'/sigma_2 + sigma_3'/sigma_3}.
std::array<cplx, 4> sigma_logderiv_combos(cplx z, const Weierstrass& w, ComboOptions opts = {});

// -- sums over the transformed moduli -1/tau and -1/(tau + 1) -------------

enum class ModularArgument {
    literal,  // pi z inside every sum, no weight factors
    rescaled  // pi z / tau, pi z / (tau + 1) with the matching 1/tau factors
};

/// wp - e_j as a product of two full-Z sine sums.
cplx wp_from_double_sum(int j, cplx z, const Weierstrass& w, ModularArgument arg);
/// wp' as -2 pi^3 times a product of three sine sums.
cplx wp_prime_from_triple_sum(cplx z, const Weierstrass& w, ModularArgument arg);
/// wp'/(wp - e_j) for j = 2, 3 as -2 pi times a transformed sine sum.
cplx wp_logderiv_modular_sum(int j, cplx z, const Weierstrass& w, ModularArgument arg);

/// xi_{a0}'/xi_{a0} as -pi times a sine sum with phase tau, -1/(tau + 1), -1/tau
/// for a = 1, 2, 3.
cplx xi_logderiv_sum(int alpha, cplx z, const Weierstrass& w, IndexSet index = IndexSet::all,
                     ModularArgument arg = ModularArgument::rescaled);

}  // namespace ellip
