#include "ellip/numerics.hpp"

#include <cstdio>

namespace ellip {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_nome: return "invalid-nome";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::pole_proximity: return "pole-proximity";
        case ErrorKind::truncation_overflow: return "truncation-overflow";
        case ErrorKind::strip_violation: return "strip-violation";
        case ErrorKind::division_degeneracy: return "division-degeneracy";
        case ErrorKind::non_finite: return "non-finite";
        case ErrorKind::empty_grid: return "empty-grid";
        case ErrorKind::registration: return "registration";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

cplx checked(cplx v, const char* what) {
    if (!is_finite(v)) throw Error(ErrorKind::non_finite, std::string(what) + ": non-finite result");
    return v;
}

void TruncationPolicy::validate() const {
    if (!(eps > 0.0) || !(eps < 1.0) || guard < 0 || k_max < guard)
        throw Error(ErrorKind::invalid_argument,
                    "truncation policy requires 0 < eps < 1, guard >= 0, k_max >= guard");
    if (fixed_terms && *fixed_terms < 0)
        throw Error(ErrorKind::invalid_argument, "fixed term count must be >= 0");
}

int truncation_terms(real q_abs, real eps, int guard, int k_max) {
    if (!(q_abs > 0.0 && q_abs < 1.0))
        throw Error(ErrorKind::invalid_nome, "nome modulus must lie in (0, 1)");
    if (!(eps > 0.0)) throw Error(ErrorKind::invalid_argument, "eps must be positive");
    const real raw = std::ceil(std::log(eps) / (2.0 * std::log(q_abs)));
    const real k = std::max(raw, 0.0) + guard;
    if (k > k_max) return k_max;
    return std::max(static_cast<int>(k), guard);
}

int product_terms(real q_abs, const TruncationPolicy& policy, real growth) {
    if (policy.fixed_terms) return *policy.fixed_terms;
    if (!(q_abs > 0.0 && q_abs < 1.0))
        throw Error(ErrorKind::invalid_nome, "nome modulus must lie in (0, 1)");
    const real raw = std::ceil((std::log(policy.eps) - growth) / (2.0 * std::log(q_abs)));
    const real k = std::max(raw, 0.0) + policy.guard;
    if (k > policy.k_max) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "series needs %.0f terms, above k_max = %d", k,
                      policy.k_max);
        throw Error(ErrorKind::truncation_overflow, buf);
    }
    return static_cast<int>(k);
}

}  // namespace ellip
