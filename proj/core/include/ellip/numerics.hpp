// Scalar contract, typed errors, truncation budgeting and compensated
// accumulation shared by every other part of the library.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace ellip {

using real = double;
using cplx = std::complex<real>;

inline constexpr real kPi = std::numbers::pi_v<real>;
inline constexpr cplx kI{0.0, 1.0};

/// Default pole guard, in units of the period-2 lattice.
inline constexpr real kPoleGuard = 1e-6;

enum class ErrorKind {
    invalid_nome,
    invalid_argument,
    pole_proximity,
    truncation_overflow,
    strip_violation,
    division_degeneracy,
    non_finite,
    empty_grid,
    registration,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when an argument lands within the guard of a pole or of a
/// vanishing denominator. `where` is the offending lattice point (or the
/// nearest singular argument); `term` is the series index when known.
class PoleProximityError : public Error {
public:
    PoleProximityError(cplx where, const std::string& what,
                       std::optional<long> term = std::nullopt)
        : Error(ErrorKind::pole_proximity, what), where_(where), term_(term) {}
    cplx where() const noexcept { return where_; }
    std::optional<long> term() const noexcept { return term_; }

private:
    cplx where_;
    std::optional<long> term_;
};

inline bool is_finite(cplx v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Returns v unchanged or raises a non_finite error naming `what`.
cplx checked(cplx v, const char* what);

struct TruncationPolicy {
    real eps = 1e-12;
    int guard = 10;
    int k_max = 4096;
    /// When set, every series and product uses exactly this many terms.
    /// Only the convergence study uses it.
    std::optional<int> fixed_terms;

    void validate() const;
};

/// K = ceil(ln eps / (2 ln q_abs)) + guard, clamped to [guard, k_max].
int truncation_terms(real q_abs, real eps, int guard = 10, int k_max = 4096);

/// Term budget for a tail bounded by exp(growth) * q_abs^(2k). Honors
/// `policy.fixed_terms`; raises truncation_overflow instead of clamping at
/// k_max, because a clamped product would be silently wrong.
int product_terms(real q_abs, const TruncationPolicy& policy, real growth = 0.0);

/// Neumaier-compensated complex accumulator.
class Accumulator {
public:
    void add(cplx v) noexcept {
        add_part(re_, cre_, v.real());
        add_part(im_, cim_, v.imag());
    }
    Accumulator& operator+=(cplx v) noexcept {
        add(v);
        return *this;
    }
    cplx value() const noexcept { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(real& s, real& c, real x) noexcept {
        const real t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    real re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

/// Product accumulator. Multiplies directly for short products and
/// switches to a compensated sum of logarithms beyond 64 factors.
class Product {
public:
    void mul(cplx f) {
        ++count_;
        if (count_ <= kDirect) {
            direct_ *= f;
            return;
        }
        if (f == cplx{0.0})
            zero_ = true;
        else
            logs_.add(std::log(f));
    }
    void mul_log(cplx log_f) {
        ++count_;
        logs_.add(log_f);
    }
    cplx value() const {
        if (zero_) return 0.0;
        return direct_ * std::exp(logs_.value());
    }

private:
    static constexpr int kDirect = 64;
    cplx direct_{1.0};
    Accumulator logs_;
    long count_ = 0;
    bool zero_ = false;
};

inline real sq(real x) noexcept { return x * x; }
inline cplx sq(cplx x) noexcept { return x * x; }

}  // namespace ellip
