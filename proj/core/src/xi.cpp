#include "ellip/xi.hpp"

namespace ellip {

void validate(XiIndex idx) {
    if (idx.beta < 0 || idx.beta > 3 || idx.gamma < 0 || idx.gamma > 3 || idx.beta == idx.gamma)
        throw Error(ErrorKind::invalid_argument, "xi indices must be distinct values in 0..3");
}

namespace {

void guard_denominator(int gamma, cplx u, const Weierstrass& w) {
    require_off_lattice(u, w.lattice(), gamma == 0 ? cplx{0.0} : w.omega(gamma), "xi");
}

// The two nonzero indices other than a.
std::pair<int, int> others(int a) {
    switch (a) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

cplx xi_a0_prime(int a, cplx u, const Weierstrass& w) {
    const auto [b, c] = others(a);
    return -xi({b, 0}, u, w) * xi({c, 0}, u, w);
}

}  // namespace

cplx xi(XiIndex idx, cplx u, const Weierstrass& w) {
    validate(idx);
    guard_denominator(idx.gamma, u, w);
    const cplx v = u / 2.0;
    return checked(w.g(idx.beta, v) / w.g(idx.gamma, v), "xi");
}

cplx xi_prime(XiIndex idx, cplx u, const Weierstrass& w) {
    validate(idx);
    guard_denominator(idx.gamma, u, w);
    const int b = idx.beta, c = idx.gamma;
    if (c == 0) return xi_a0_prime(b, u, w);
    if (b == 0) {
        const cplx x = xi({c, 0}, u, w);
        return -xi_a0_prime(c, u, w) / (x * x);
    }
    // xi_bc = xi_b0 / xi_c0
    const cplx xb = xi({b, 0}, u, w), xc = xi({c, 0}, u, w);
    return (xi_a0_prime(b, u, w) * xc - xb * xi_a0_prime(c, u, w)) / (xc * xc);
}

Moduli moduli(const Weierstrass& w) {
    return {xi({2, 1}, w.omega(3), w), xi({2, 3}, w.omega(1), w)};
}

}  // namespace ellip
