#include "ellip/catalog.hpp"

#include "ellip/products.hpp"
#include "ellip/transforms.hpp"
#include "ellip/trig.hpp"

namespace ellip::audit {

namespace {

using Pol = TruncationPolicy;

IndexSet index_of(const FlagSet& f, const char* flag = "full-Z") {
    return has(f, flag) ? IndexSet::all : IndexSet::nonzero;
}

// wp = -eta + (pi^2/4) csc^2(pi z / 2) - 2 pi^2 sum n q^{2n} / (1 - q^{2n}) cos(n pi z),
// valid for |Im z| < 2 Im tau. Independent of the theta quotient.
cplx wp_fourier(cplx z, const Weierstrass& w) {
    const real y = std::abs(z.imag());
    const real qa = w.lattice().q_abs();
    if (!(y < 2.0 * w.tau().imag())) throw Error(ErrorKind::strip_violation, "Fourier series: |Im z| outside the strip");
    const int K = product_terms(qa * std::exp(kPi * y / 2.0), w.policy());
    const cplx q2 = w.lattice().q() * w.lattice().q();
    Accumulator acc;
    cplx qn = 1.0;
    for (int n = 1; n <= K; ++n) {
        qn *= q2;
        acc += static_cast<real>(n) * qn / (1.0 - qn) * std::cos(static_cast<real>(n) * kPi * z);
    }
    const cplx c = trig::csc(kPi * z / 2.0);
    return -w.eta() + kPi * kPi / 4.0 * c * c - 2.0 * kPi * kPi * acc.value();
}

struct XiTheta {
    cplx value;
    cplx derivative;
};

// sigma_a / sigma (a = 0 gives 1) and its u-derivative from theta quotients at v = u/2.
XiTheta xi_a0_theta(int a, cplx u, const Weierstrass& w) {
    if (a == 0) return {1.0, 0.0};
    const LatticeTau& L = w.lattice();
    const Pol& P = w.policy();
    const ThetaNulls& t = w.nulls();
    const cplx v = u / 2.0;
    const cplx null = a == 1 ? t.t2 : a == 2 ? t.t3 : t.t4;
    const cplx ga = theta(a + 1, v, L, P) / null, dga = theta_prime(a + 1, v, L, P) / null;
    const cplx g0 = 2.0 * theta(1, v, L, P) / t.t1p, dg0 = 2.0 * theta_prime(1, v, L, P) / t.t1p;
    return {ga / g0, 0.5 * (dga * g0 - ga * dg0) / (g0 * g0)};
}

XiTheta xi_theta(XiIndex idx, cplx u, const Weierstrass& w) {
    const XiTheta b = xi_a0_theta(idx.beta, u, w), g = xi_a0_theta(idx.gamma, u, w);
    return {b.value / g.value, (b.derivative * g.value - b.value * g.derivative) / (g.value * g.value)};
}

cplx ell(int j, cplx z, const Weierstrass& w) { return w.wp_prime(z) / (w.wp(z) - w.e(j)); }

int other(int a, int b) { return 6 - a - b; }

// One-sided half-shifted expansion of wp - e_j (j = 2, 3), optionally with the
// mirrored factor and a tail exponent of 4.
cplx half_shift_expansion(int j, cplx z, const Weierstrass& w, bool paired, int tail) {
    const cplx B = kPi * z / 2.0;
    const cplx s = std::sin(B);
    const int K = product_terms(w.lattice().q_abs(), w.policy(), kPi * std::abs(z.imag()) + 2.0);
    auto ls = [j](cplx x) { return j == 3 ? trig::log_sin(x) : trig::log_cos(x); };
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx A = static_cast<real>(k) * kPi * w.tau();
        const cplx H = (k - 0.5) * kPi * w.tau();
        cplx l = 2.0 * (ls(H - B) - trig::log_sin(A - B));
        if (paired) l += 2.0 * (ls(H + B) - trig::log_sin(A + B));
        l += static_cast<real>(tail) * (trig::log_sin(A) - ls(H));
        p.mul_log(l);
    }
    return checked(kPi * kPi / sq(2.0 * s) * p.value(), "half-shift expansion");
}

// prod_{k>=1} f(k) with log f(k) supplied; truncated like the sigma products.
template <class F>
cplx log_product(const Weierstrass& w, cplx z, F&& log_factor) {
    const int K = product_terms(w.lattice().q_abs(), w.policy(), kPi * std::abs(z.imag()) + 2.0);
    Product p;
    for (int k = 1; k <= K; ++k) p.mul_log(log_factor(k));
    return p.value();
}

// prod (cos 2 pi v - cos 2 k pi tau)/(1 - cos 2 k pi tau), written with sec(2 k pi tau).
cplx cos_difference_product(cplx v, const Weierstrass& w) {
    const int K = product_terms(w.lattice().q_abs(), w.policy(), 2.0 * kPi * std::abs(v.imag()) + 2.0);
    const cplx c2 = std::cos(2.0 * kPi * v);
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx s = trig::sec(2.0 * k * kPi * w.tau());
        p.mul((c2 * s - 1.0) / (s - 1.0));
    }
    return p.value();
}

// prod [cos 4 pi v - C][1 - C]^3 / [cos 2 pi v - C]^4, C = cos 2 k pi tau.
cplx cos_quotient_product(cplx v, const Weierstrass& w) {
    const int K = product_terms(w.lattice().q_abs(), w.policy(), 4.0 * kPi * std::abs(v.imag()) + 2.0);
    const cplx c2 = std::cos(2.0 * kPi * v), c4 = std::cos(4.0 * kPi * v);
    Product p;
    for (int k = 1; k <= K; ++k) {
        const cplx s = trig::sec(2.0 * k * kPi * w.tau());
        const cplx b = c2 * s - 1.0;
        p.mul((c4 * s - 1.0) * std::pow(s - 1.0, 3) / (b * b * b * b));
    }
    return p.value();
}

cplx scaled_sine_sum(cplx z, const OrderPair& op, IndexSet index) {
    const real n = op.n();
    return sin_reciprocal_sum(n * z, {op.scaled().tau(), SineSign::plus, index, true}, op.base().policy());
}

real two_pow(int e) { return std::ldexp(1.0, e); }

// -- domains ----------------------------------------------------------------

// Joint strip of the sums at phases tau, -1/tau and -1/(tau + 1) with rescaled arguments.
bool modular_strip(cplx z, cplx tau) {
    const real margin = 0.95;
    const cplx m = tau + 1.0;
    return std::abs(z.imag()) < margin * 2.0 * tau.imag() &&
           std::abs((z / tau).imag()) < margin * 2.0 * std::abs((-1.0 / tau).imag()) &&
           std::abs((z / m).imag()) < margin * 2.0 * std::abs((-1.0 / m).imag());
}

Domain modular_domain() {
    Domain d;
    d.tau_re_lo = -0.5;
    d.tau_re_hi = 0.5;
    d.tau_im_lo = 0.9;
    d.tau_im_hi = 1.4;
    d.accept = [](const Sample& s) { return modular_strip(s.z, s.tau); };
    return d;
}

Domain tau_only_domain() {
    Domain d;
    d.critical = [](const Sample&) { return std::vector<Critical>{}; };
    return d;
}

// Every shift z + m/n (m < 2n) and z + 2 m pi / n stays off the half-lattice.
Domain order_domain() {
    Domain d;
    d.critical = [](const Sample& s) {
        std::vector<Critical> c;
        const real n = s.n;
        for (int m = 0; m < 2 * s.n; ++m) c.push_back({s.z + static_cast<real>(m) / n, s.tau});
        for (int m = 1; m < s.n; ++m) c.push_back({s.z + 2.0 * m * kPi / n, s.tau});
        return c;
    };
    return d;
}

Domain mode_domain(TransformMode mode) {
    Domain d;
    d.critical = [mode](const Sample& s) {
        const TransformOrder order{s.n, s.p};
        const cplx t2 = transformed_tau(mode, order, s.tau);
        const real n = s.n;
        const cplx step = mode == TransformMode::n_tau        ? cplx{2.0}
                          : mode == TransformMode::tau_over_n ? 2.0 * s.tau
                                                              : 2.0 * (s.tau + 2.0 * s.p);
        std::vector<Critical> c;
        for (int m = 0; m < s.n; ++m) c.push_back({s.z + static_cast<real>(m) * step / n, s.tau});
        if (mode == TransformMode::n_tau) {
            c.push_back({n * s.z, t2});
        } else {
            c.push_back({s.z, t2});
            c.push_back({s.z / n, t2});
        }
        return c;
    };
    return d;
}

// -- registry -----------------------------------------------------------------

class Registry {
public:
    IdentityRecord& add(std::string id, std::string anchor, std::vector<std::string> expressions,
                        std::vector<std::string> flags, Evaluator eval) {
        IdentityRecord r;
        r.id = std::move(id);
        r.anchor = std::move(anchor);
        r.expressions = std::move(expressions);
        r.flags = std::move(flags);
        r.eval = std::move(eval);
        records_.push_back(std::move(r));
        return records_.back();
    }

    IdentityRecord& add_n(std::string id, std::string anchor, std::vector<std::string> expressions,
                          std::vector<std::string> flags, Evaluator eval) {
        IdentityRecord& r = add(std::move(id), std::move(anchor), std::move(expressions), std::move(flags),
                                std::move(eval));
        r.uses_n = true;
        r.tolerance = 1e-8;
        r.domain = order_domain();
        return r;
    }

    std::vector<IdentityRecord> take() {
        validate_records(records_);
        return std::move(records_);
    }

private:
    std::vector<IdentityRecord> records_;
};

#define EVAL [](const Sample& s, const FlagSet& f, const Pol& pol) -> Values
#define EVAL_J(j) [j](const Sample& s, const FlagSet& f, const Pol& pol) -> Values

// -- products and the theta connection ----------------------------------------

void products_section(Registry& R) {
    {
        auto& r = R.add("sec2-1.connexion",
                        R"(\wp(z) = e_i +\frac{1}{4} \left [ \frac{\theta_{i+1}(v)}{\pi \theta_{i+1}(0)} \frac{ \theta'_{1}(0)}{\theta_{1}(v)}  \right]^2)",
                        {"wp (Fourier series)", "e_i + theta quotient squared / 4"}, {}, EVAL {
                            Weierstrass w(s.tau, pol);
                            const cplx v = s.z / 2.0;
                            const ThetaNulls& t = w.nulls();
                            const cplx c = has(f, "pi-numerator") ? kPi : has(f, "no-pi") ? 1.0 : 1.0 / kPi;
                            const cplx ref = wp_fourier(s.z, w);
                            const cplx th1 = theta(1, v, w.lattice(), pol);
                            const cplx nulls[3] = {t.t2, t.t3, t.t4};
                            Values out;
                            for (int i = 1; i <= 3; ++i) {
                                const cplx q = c * theta(i + 1, v, w.lattice(), pol) / nulls[i - 1] * t.t1p / th1;
                                out.push_back(ref);
                                out.push_back(w.e(i) + q * q / 4.0);
                            }
                            return out;
                        });
        r.group_size = 2;
        r.variants = {{"as-printed", {}}, {"pi-numerator", {"pi-numerator"}}, {"no-pi", {"no-pi"}}};
    }

    R.add("thm2-1.e1",
          R"(\wp(z) - e_1 = \frac{(\pi \cot \frac{\pi z}{2})^2}{4} \prod_{k\geq 1}  \left[ \frac{ \cot(k\pi \tau- \frac{\pi z}{2})\ \cot(k\pi \tau+ \frac{\pi z}{2})}{\left[\cot(k\pi \tau)\right ]^2}\right]^2)",
          {"wp - e1", "cotangent quotient product", "theta-null cotangent product"}, {"pi-not-pi-squared"}, EVAL {
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z) - w.e(1), wp_minus_e1_cot_product(s.z, w),
                      wp_minus_e1_null_product(s.z, w, has(f, "pi-not-pi-squared") ? 1 : 2)};
          });
    R.add("thm2-1.e3",
          R"(\wp(z) - e_3 = \frac{\pi^2}{\left(2 \sin \frac{\pi z}{2}\right)^2}\prod_{k\geq 1} \left[ \frac{\sin((k-\frac{1}{2})\pi \tau-\pi \frac{z}{2})}{\sin(k\pi \tau-\pi \frac{z}{2})})",
          {"wp - e3", "half-shifted sine product"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z) - w.e(3), wp_minus_e_product(3, s.z, w)};
          });
    R.add("thm2-1.e2",
          R"(\wp(z) - e_2 = \frac{\pi^2}{\left(2 \sin \frac{\pi z}{2}\right)^2}\prod_{k\geq 1} \left[ \frac{\cos((k-\frac{1}{2})\pi \tau-\pi \frac{z}{2})}{\sin(k\pi \tau-\pi \frac{z}{2})})",
          {"wp - e2", "half-shifted cosine product"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z) - w.e(2), wp_minus_e_product(2, s.z, w)};
          });

    R.add("thm2-1-proof.theta-quotient",
          R"(\wp(z) = e_1 +\frac{1}{4} \left [\pi \frac{\theta_{2}(v)}{ \theta_{2}(0)} \frac{\theta'_{1}(0)}{\theta_{1}(v)}  \right]^2)",
          {"wp (Fourier series)", "e1 + theta quotient squared / 4"}, {"no-pi"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx v = s.z / 2.0;
              const cplx c = has(f, "no-pi") ? 1.0 : kPi;
              const cplx q = c * theta(2, v, w.lattice(), pol) / w.nulls().t2 * w.nulls().t1p /
                             theta(1, v, w.lattice(), pol);
              return {wp_fourier(s.z, w), w.e(1) + q * q / 4.0};
          });
    R.add("thm2-1-proof.theta1-product",
          R"(\frac{ \theta_1(v,\tau)}{\pi ( \sin \pi v )\ \theta'_1(0,\tau)} =   \left[1 - \left(\frac{\sin \pi v}{\sin k\pi \tau} \right)^2 \right])",
          {"theta1 quotient", "prod [1 - sin^2/sin^2]", "prod sin sin / sin^2"}, {"pi-numerator"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx v = s.z / 2.0, B = kPi * v;
              const cplx th = theta(1, v, w.lattice(), pol), sp = std::sin(B), tp = w.nulls().t1p;
              const cplx lhs = has(f, "pi-numerator") ? kPi * th / (sp * tp) : th / (kPi * sp * tp);
              const cplx prod1 = theta_product(1, v, w.lattice(), pol) * kPi / (tp * sp);
              const cplx prod2 = log_product(w, s.z, [&](int k) {
                  const cplx A = static_cast<real>(k) * kPi * w.tau();
                  return trig::log_sin(A - B) + trig::log_sin(A + B) - 2.0 * trig::log_sin(A);
              });
              return {lhs, prod1, prod2};
          });
    R.add("thm2-1-proof.theta2-product",
          R"(\frac{\theta_2(v,\tau)}{ (\cos \pi v )\ \theta_2(0,\tau)} =  \left[1 - \left(\frac{\sin \pi v}{\cos k\pi \tau} \right)^2 \right])",
          {"theta2 quotient", "prod [1 - sin^2/cos^2]", "prod cos cos / cos^2"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx v = s.z / 2.0, B = kPi * v;
              const cplx c = std::cos(B), t2 = w.nulls().t2;
              const cplx prod2 = log_product(w, s.z, [&](int k) {
                  const cplx A = static_cast<real>(k) * kPi * w.tau();
                  return trig::log_cos(A - B) + trig::log_cos(A + B) - 2.0 * trig::log_cos(A);
              });
              return {theta(2, v, w.lattice(), pol) / (c * t2), theta_product(2, v, w.lattice(), pol) / (c * t2), prod2};
          });
    R.add("thm2-1-proof.cot-quotient",
          R"(\frac{\theta_{2}(v)}{ \theta_{2}(0)} \frac{\pi\theta'_{1}(0)}{\theta_{1}(v)} =  \cot \pi v  \prod_{k\geq 1})",
          {"theta quotient", "cot prod cos cos sin^2 / (sin sin cos^2)", "cot prod cot cot / cot^2"}, {"pi-on-right"},
          EVAL {
              Weierstrass w(s.tau, pol);
              const cplx v = s.z / 2.0, B = kPi * v;
              const bool right = has(f, "pi-on-right");
              const cplx q = theta(2, v, w.lattice(), pol) / w.nulls().t2 * w.nulls().t1p / theta(1, v, w.lattice(), pol);
              const cplx lead = (right ? kPi : 1.0) * trig::cot(B);
              const cplx p1 = log_product(w, s.z, [&](int k) {
                  const cplx A = static_cast<real>(k) * kPi * w.tau();
                  return trig::log_cos(A + B) + trig::log_cos(A - B) + 2.0 * trig::log_sin(A) - trig::log_sin(A + B) -
                         trig::log_sin(A - B) - 2.0 * trig::log_cos(A);
              });
              const cplx p2 = sigma1_over_sigma_product(s.z, w) * 2.0 / (kPi * trig::cot(B));
              return {(right ? 1.0 : kPi) * q, lead * p1, lead * p2};
          });
    {
        auto& r = R.add("thm2-1-proof.sigma-squares", R"(\wp(z) - e_1 = \left(\frac{\sigma_1 z}{\sigma z}\right)^2)",
                        {"wp - e_j (Fourier series)", "(sigma_j / sigma)^2"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx p = wp_fourier(s.z, w), sg = w.sigma(s.z);
                            Values out;
                            for (int j = 1; j <= 3; ++j) {
                                out.push_back(p - w.e(j));
                                out.push_back(sq(w.sigma_j(j, s.z) / sg));
                            }
                            return out;
                        });
        r.group_size = 2;
    }
    R.add("thm2-1-proof.sigma",
          R"(\sigma z = e^{\frac{\eta v^2}{2}}  \frac{(2 \sin \pi v)}{\pi} \prod_{k\geq 1})",
          {"sigma", "sine product"}, {"gauge-2-eta-v2"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto g = has(f, "gauge-2-eta-v2") ? SigmaGauge::two_eta_v2 : SigmaGauge::eta_v2_half;
              return {w.sigma(s.z), sigma_product(0, s.z, w, g)};
          });
    R.add("thm2-1-proof.sigma1",
          R"(\sigma_1 z = e^{\frac{\eta v^2}{2}}  {( \cos \pi v)} \prod_{k\geq 1})",
          {"sigma1", "cosine product"}, {"gauge-2-eta-v2"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto g = has(f, "gauge-2-eta-v2") ? SigmaGauge::two_eta_v2 : SigmaGauge::eta_v2_half;
              return {w.sigma_j(1, s.z), sigma_product(1, s.z, w, g)};
          });
    for (int j : {2, 3}) {
        const std::string anchor = j == 2 ? R"(\sigma_2 z = e^{\frac{\eta v^2}{2}}   \prod_{k\geq 0})"
                                          : R"(\sigma_3 z = e^{\frac{\eta v^2}{2}}   \prod_{k\geq 0})";
        R.add("thm2-1-proof.sigma" + std::to_string(j), anchor,
              {"sigma" + std::to_string(j), "half-shifted product"}, {"gauge-2-eta-v2", "k-from-1"}, EVAL_J(j) {
                  Weierstrass w(s.tau, pol);
                  const auto g = has(f, "gauge-2-eta-v2") ? SigmaGauge::two_eta_v2 : SigmaGauge::eta_v2_half;
                  return {w.sigma_j(j, s.z), sigma_product(j, s.z, w, g, has(f, "k-from-1") ? 1 : 0)};
              });
    }
    R.add("thm2-1-proof.sigma1-over-sigma",
          R"(\frac{\sigma_1 z}{\sigma z} = \frac{(\pi \cot \pi v)}{2} \prod_{k\geq 1})",
          {"sigma1 / sigma", "cotangent product"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.sigma_j(1, s.z) / w.sigma(s.z), sigma1_over_sigma_product(s.z, w)};
          });
    R.add("thm2-1-proof.cot-product-nonzero",
          R"(\frac{(\pi \cot \frac{\pi z}{2})^2}{4} \prod_{k\neq 0}  \left[ \frac{ \cot(k\pi \tau- \frac{\pi z}{2})}{\left[\cot k\pi \tau\right ]}\right]^2)",
          {"wp - e1", "paired cotangent product", "product over k != 0"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z) - w.e(1), wp_minus_e1_cot_product(s.z, w), wp_minus_e1_symmetric_product(s.z, w)};
          });

    R.add("remark2-2i.sigma",
          R"(\sigma z = \frac{2\omega}{\pi} \sin (\pi v) e^{2\eta \omega v^2} \prod_{n\geq 1})",
          {"sigma", "sine product, exp(2 eta v^2)"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.sigma(s.z), sigma_product(0, s.z, w, SigmaGauge::two_eta_v2)};
          });
    {
        auto& r = R.add("remark2-2i.eta",
                        R"(\eta = \frac{\pi^2}{2\omega} \left (\frac{1}{6} + \sum_{n\geq 0} \frac{1}{(\sin n\pi \tau)^2}\right))",
                        {"eta (theta nulls)", "reciprocal sine-squared series"}, {"eta-sum-from-1"}, EVAL {
                            Weierstrass w(s.tau, pol);
                            return {w.eta(), eta1(w.lattice(), pol, has(f, "eta-sum-from-1") ? 1 : 0)};
                        });
        r.domain = tau_only_domain();
    }
    R.add("remark2-2ii.shift",
          R"(\wp(z+1) = e_1 +\frac{(\pi \tan \pi \frac{z}{2})^2}{4} \prod_{k\neq 0})",
          {"wp(z + 1)", "tangent product"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z + 1.0), wp_shift_tan_product(s.z, w)};
          });
    R.add("remark2-2ii.e1",
          R"(\left(\wp(z+1) - e_1\right)\left(\wp(z) - e_1\right) =  \prod_{k\geq 1} \frac{1}{16\left(\cot k\pi \tau \right)^{8}})",
          {"(wp(z+1) - e1)(wp(z) - e1)", "cot^-8 product", "(e1 - e2)(e1 - e3)", "pi^4/16 theta3^4 theta4^4"},
          {"prefactor-pi4-over-16"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto form = has(f, "prefactor-pi4-over-16") ? PairwiseForm::pi4_over_16 : PairwiseForm::literal;
              const ThetaNulls& t = w.nulls();
              return {(w.wp(s.z + 1.0) - w.e(1)) * (w.wp(s.z) - w.e(1)), e_pairwise_products(w, form)[0],
                      (w.e(1) - w.e(2)) * (w.e(1) - w.e(3)),
                      std::pow(kPi, 4) / 16.0 * std::pow(t.t3, 4) * std::pow(t.t4, 4)};
          });
    for (int i : {1, 2}) {
        const std::string id = i == 1 ? "remark2-2ii.e3" : "remark2-2ii.e2";
        const std::string anchor =
            i == 1 ? R"((e_3 - e_2)(e_3 - e_1) = \prod_{k\geq 1} \frac{1}{16\left(\cot \frac{k\pi}{ \tau} \right)^{8}})"
                   : R"((e_2 - e_1)(e_2 - e_3) = \prod_{k\geq 1} \frac{1}{16\left(\cot \frac{k\pi}{ 1+\tau} \right)^{8}})";
        auto& r = R.add(id, anchor, {"e-difference product", "cot^-8 product"}, {"prefactor-pi4-over-16", "modular-weight"},
                        EVAL_J(i) {
                            Weierstrass w(s.tau, pol);
                            const auto form =
                                has(f, "prefactor-pi4-over-16") ? PairwiseForm::pi4_over_16 : PairwiseForm::literal;
                            cplx v = e_pairwise_products(w, form)[i];
                            if (has(f, "modular-weight")) v *= std::pow(i == 1 ? w.tau() : 1.0 + w.tau(), -4);
                            const cplx lhs = i == 1 ? (w.e(3) - w.e(2)) * (w.e(3) - w.e(1))
                                                    : (w.e(2) - w.e(1)) * (w.e(2) - w.e(3));
                            return {lhs, v};
                        });
        r.domain = tau_only_domain();
    }
}

// -- logarithmic derivatives ----------------------------------------------------

void logderiv_section(Registry& R) {
    R.add("cor2-3.main",
          R"(\frac{\wp'(z)}{\wp(z) - e_1} =  -\frac{2\pi}{\sin \pi z}+2\pi \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau-\pi z)}\right] = -\frac{\sigma(2z)}{\sigma^2(z) \sigma^2_1(z)})",
          {"sum form", "sigma form", "zeta form"}, {"full-Z"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx sg = w.sigma(s.z), s1 = w.sigma_j(1, s.z);
              return {wp_logderiv_singleton_sum(s.z, w, index_of(f)), -w.sigma(2.0 * s.z) / (sg * sg * s1 * s1),
                      2.0 * w.zeta(s.z + 1.0) - 2.0 * w.zeta(s.z) - 2.0 * w.eta()};
          });
    R.add("cor2-3.chain",
          R"(\frac{\wp'(z)}{\wp(z) - e_1} =  -\frac{4\pi}{2\sin \pi z} + \frac{4\pi}{2} \sum_{k\geq 1} \left[ \frac{1}{\sin(2k\pi \tau-\pi z)} - \frac{1}{\sin(2k\pi \tau+\pi z)}\right]= \sum_{k} \left[ \frac{2\pi}{\sin(2k\pi \tau-\pi z)}\right])",
          {"wp'/(wp - e1)", "paired sum", "sum over all k"}, {"k-nonzero"}, EVAL {
              Weierstrass w(s.tau, pol);
              return {ell(1, s.z, w), wp_logderiv_paired_sum(s.z, w),
                      wp_logderiv_full_sum(s.z, w, has(f, "k-nonzero") ? IndexSet::nonzero : IndexSet::all)};
          });
    R.add("cor2-3.lawden",
          R"(\frac{\wp'(z)}{\wp(z) - e_1} = 2 \left(\frac{\sigma'_1}{\sigma_1}(z) -\frac{\sigma'}{\sigma}(z)\right) = -2 \frac{\sigma_2(z) \sigma_3(z)}{\sigma(z) \sigma_1(z)} = -\frac{\sigma(2z)}{\sigma^2(z) \sigma^2_1(z)} =  2\zeta(z+1)-2\zeta(z)-2\eta)",
          {"wp'/(wp - e1)", "2 (sigma1'/sigma1 - zeta)", "-2 sigma2 sigma3 / (sigma sigma1)", "-sigma(2z)/(sigma sigma1)^2",
           "2 zeta(z+1) - 2 zeta(z) - 2 eta"},
          {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx z = s.z, sg = w.sigma(z), s1 = w.sigma_j(1, z);
              return {ell(1, z, w), 2.0 * (w.sigma_logderiv(1, z) - w.zeta(z)),
                      -2.0 * w.sigma_j(2, z) * w.sigma_j(3, z) / (sg * s1), -w.sigma(2.0 * z) / (sg * sg * s1 * s1),
                      2.0 * w.zeta(z + 1.0) - 2.0 * w.zeta(z) - 2.0 * w.eta()};
          });

    R.add("cor2-4.sigma",
          R"(\frac{\sigma'}{\sigma}(z) = \eta z + \frac{\pi}{2} \cot(\frac{\pi z}{2}) + \frac{\pi}{2}\sum_{k\geq 1} \left[\cot(k\pi \tau+\frac{\pi z}{2}) - \cot(k\pi \tau-\frac{\pi z}{2})  \right])",
          {"zeta", "cotangent series", "quotient series"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.zeta(s.z), sigma_logderiv_sum(0, s.z, w, SigmaSeriesForm::cotangent),
                      sigma_logderiv_sum(0, s.z, w, SigmaSeriesForm::quotient)};
          });
    R.add("cor2-4.sigma1",
          R"(\frac{\sigma'_1}{\sigma_1}(z) = \frac{\sigma'}{\sigma}(z+1) = \eta z -\frac{\pi}{2} \tan(\frac{\pi z}{2}))",
          {"sigma1'/sigma1", "zeta(z + 1)", "quotient series"}, {"minus-eta"}, EVAL {
              Weierstrass w(s.tau, pol);
              return {w.sigma_logderiv(1, s.z), w.zeta(s.z + 1.0) - (has(f, "minus-eta") ? w.eta() : 0.0),
                      sigma_logderiv_sum(1, s.z, w, SigmaSeriesForm::quotient)};
          });
    R.add("cor2-4.sigma2",
          R"(\frac{\sigma'_2}{\sigma_2}(z) = \eta z -\frac{\pi}{2} \sum_{k\geq 0} \left[\tan((k-\frac{1}{2})\pi \tau+\frac{\pi z}{2}) - \tan((k-\frac{1}{2})\pi \tau+\frac{\pi z}{2})  \right])",
          {"sigma2'/sigma2", "tangent series", "quotient series"}, {"tan-difference", "k-from-1"}, EVAL {
              Weierstrass w(s.tau, pol);
              SigmaSeriesOptions o;
              o.first = has(f, "k-from-1") ? 1 : 0;
              o.literal_tangent = !has(f, "tan-difference");
              return {w.sigma_logderiv(2, s.z), sigma_logderiv_sum(2, s.z, w, SigmaSeriesForm::cotangent, o),
                      sigma_logderiv_sum(2, s.z, w, SigmaSeriesForm::quotient)};
          });
    R.add("cor2-4.sigma3",
          R"(\frac{\sigma'_3}{\sigma_3}(z) = \frac{\sigma'_2}{\sigma_2}(z+1) = \eta z + \frac{\pi}{2}\sum_{k\geq 1})",
          {"sigma3'/sigma3", "sigma2'/sigma2 (z + 1)", "quotient series"}, {"minus-eta"}, EVAL {
              Weierstrass w(s.tau, pol);
              return {w.sigma_logderiv(3, s.z), w.sigma_logderiv(2, s.z + 1.0) - (has(f, "minus-eta") ? w.eta() : 0.0),
                      sigma_logderiv_sum(3, s.z, w, SigmaSeriesForm::quotient)};
          });

    R.add("cor2-5.e1",
          R"(\frac{\wp'(z)}{2(\wp(z) - e_1)} = \frac{\sigma'_1}{\sigma_1}(z) - \frac{\sigma'}{\sigma}(z) =  \pi \sum_{k\geq 1})",
          {"wp'/(2 (wp - e1))", "sigma1'/sigma1 - zeta", "paired sine series"}, {"include-singleton"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto c = sigma_logderiv_combos(s.z, w, {has(f, "include-singleton"), 0});
              return {ell(1, s.z, w) / 2.0, w.sigma_logderiv(1, s.z) - w.zeta(s.z), c[0]};
          });
    R.add("cor2-5.s2-minus-s3",
          R"(\frac{\sigma'_2}{\sigma_2}(z) - \frac{\sigma'_3}{\sigma_3}(z) = \pi \sum_{k\geq 0})",
          {"sigma2'/sigma2 - sigma3'/sigma3", "odd-shift sine series"}, {"k-from-1"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto c = sigma_logderiv_combos(s.z, w, {false, has(f, "k-from-1") ? 1 : 0});
              return {w.sigma_logderiv(2, s.z) - w.sigma_logderiv(3, s.z), c[1]};
          });
    R.add("cor2-5.s1-plus-s",
          R"(\frac{\sigma'_1}{\sigma_1}(z) + \frac{\sigma'}{\sigma}(z) = 2\eta z + {\pi} \cot({\pi z}))",
          {"sigma1'/sigma1 + zeta", "cotangent series"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.sigma_logderiv(1, s.z) + w.zeta(s.z), sigma_logderiv_combos(s.z, w, {})[2]};
          });
    R.add("cor2-5.s2-plus-s3",
          R"(\frac{\sigma'_2}{\sigma_2}(z) + \frac{\sigma'_3}{\sigma_3}(z) =  2\eta z + {\pi}\sum_{k\geq 0})",
          {"sigma2'/sigma2 + sigma3'/sigma3", "odd-shift cotangent series"}, {"k-from-1"}, EVAL {
              Weierstrass w(s.tau, pol);
              const auto c = sigma_logderiv_combos(s.z, w, {false, has(f, "k-from-1") ? 1 : 0});
              return {w.sigma_logderiv(2, s.z) + w.sigma_logderiv(3, s.z), c[3]};
          });

    // Modular double and triple sums.
    const char* double_anchor[4] = {
        R"(\wp(z,\tau)-e_2(\tau) = \pi^2 \sum_{k} \left[ \frac{1}{\sin(2k\pi \tau+\pi z)}\right]\ \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau}+\pi z)}\right])",
        R"(\wp(z,\tau)-e_3(\tau) = \pi^2 \sum_{k} \left[ \frac{1}{\sin(2k\pi \tau+\pi z)}\right]\ \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau+1}+\pi z)}\right])",
        R"(\wp(z,\tau)-e_1\tau) = \pi^2 \sum_{k} \left[ \frac{1}{\sin(\frac{2k\pi}{ \tau+1}+\pi z)}\right]\ \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau}+\pi z)}\right])",
        R"(\wp'(z,\tau) = -2\pi^3 \sum_{k} \left[ \frac{1}{\sin(2k\pi \tau+\pi z)}\right]\ \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau}+\pi z)}\right] \sum_{k})"};
    const int double_j[3] = {2, 3, 1};
    for (int i = 0; i < 3; ++i) {
        const int j = double_j[i];
        auto& r = R.add("cor2-6.e" + std::to_string(j), double_anchor[i],
                        {"wp - e" + std::to_string(j), "product of two sine sums"}, {"rescaled"}, EVAL_J(j) {
                            Weierstrass w(s.tau, pol);
                            const auto arg = has(f, "rescaled") ? ModularArgument::rescaled : ModularArgument::literal;
                            return {w.wp(s.z) - w.e(j), wp_from_double_sum(j, s.z, w, arg)};
                        });
        r.domain = modular_domain();
        r.tolerance = 1e-8;
    }
    {
        auto& r = R.add("cor2-6.wp-prime", double_anchor[3], {"wp'", "product of three sine sums"}, {"rescaled"}, EVAL {
            Weierstrass w(s.tau, pol);
            const auto arg = has(f, "rescaled") ? ModularArgument::rescaled : ModularArgument::literal;
            return {w.wp_prime(s.z), wp_prime_from_triple_sum(s.z, w, arg)};
        });
        r.domain = modular_domain();
        r.tolerance = 1e-8;
    }
    for (int j : {3, 2}) {
        const std::string anchor =
            j == 3 ? R"(\frac{\wp'(z)}{\wp(z) - e_3} = -2\pi \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau}+\pi z)}\right])"
                   : R"(\frac{\wp'(z)}{\wp(z) - e_2} = -2\pi \sum_{k} \left[ \frac{1}{\sin(\frac{-2k\pi}{ \tau+1}+\pi z)}\right])";
        auto& r = R.add("cor2-6-proof.logderiv-e" + std::to_string(j), anchor,
                        {"wp'/(wp - e" + std::to_string(j) + ")", "modular sine sum"}, {"rescaled"}, EVAL_J(j) {
                            Weierstrass w(s.tau, pol);
                            const auto arg = has(f, "rescaled") ? ModularArgument::rescaled : ModularArgument::literal;
                            return {ell(j, s.z, w), wp_logderiv_modular_sum(j, s.z, w, arg)};
                        });
        r.domain = modular_domain();
        r.tolerance = 1e-8;
    }
    R.add("cor2-6-proof.factorization",
          R"(\frac{\wp'^2(z)}{(\wp(z) - e_1) (\wp(z) - e_3)} = \left[\frac{\wp'(z)}{(\wp(z) - e_1)}\right] \ \left[\frac{\wp'(z)}{(\wp(z) - e_3)}\right] = 4 \left[\wp(z) - e_2\right])",
          {"wp'^2 / ((wp - e1)(wp - e3))", "product of log-derivatives", "4 (wp - e2)"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx p = w.wp(s.z), d = w.wp_prime(s.z);
              return {d * d / ((p - w.e(1)) * (p - w.e(3))), ell(1, s.z, w) * ell(3, s.z, w), 4.0 * (p - w.e(2))};
          });
    {
        auto& r = R.add("cor2-6-proof.e1-inverse", R"(e_1(\frac{-1}{\tau}) = e_3(\tau))", {"e1(-1/tau)", "e3(tau)"},
                        {"weight-2"}, EVAL {
                            Weierstrass w(s.tau, pol), m(-1.0 / s.tau, pol);
                            return {m.e(1), (has(f, "weight-2") ? s.tau * s.tau : 1.0) * w.e(3)};
                        });
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add("cor2-6-proof.e1-inverse-shift", R"(e_1(\frac{-1}{\tau+1}) = e_2(\tau))",
                        {"e1(-1/(tau+1))", "e2(tau)"}, {"weight-2"}, EVAL {
                            Weierstrass w(s.tau, pol), m(-1.0 / (s.tau + 1.0), pol);
                            const cplx t1 = s.tau + 1.0;
                            return {m.e(1), (has(f, "weight-2") ? t1 * t1 : 1.0) * w.e(2)};
                        });
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add("cor2-6-proof.e2-shift", R"(e_2(1+\tau) = e_3(\tau))", {"e2(tau + 1)", "e3(tau)"}, {}, EVAL {
            (void)f;
            Weierstrass w(s.tau, pol), m(s.tau + 1.0, pol);
            return {m.e(2), w.e(3)};
        });
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add("sec4-1.e3-shift", R"(e_3(1+\tau) = e_2(\tau))", {"e3(tau + 1)", "e2(tau)"}, {}, EVAL {
            (void)f;
            Weierstrass w(s.tau, pol), m(s.tau + 1.0, pol);
            return {m.e(3), w.e(2)};
        });
        r.domain = tau_only_domain();
    }

    // Sigma, theta and the addition theorem.
    R.add("sec2-2.sigma-theta", R"(\sigma(u) = \frac{2}{\pi \theta'_1(0,\tau)} e^{\eta u^2/2} \theta_1(\frac{u}{2},\tau))",
          {"sigma (sine product)", "theta1 form"}, {"no-pi"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx c = has(f, "no-pi") ? 1.0 : kPi;
              return {sigma_product(0, s.z, w, SigmaGauge::two_eta_v2),
                      2.0 / (c * w.nulls().t1p) * std::exp(w.eta() * s.z * s.z / 2.0) * theta(1, s.z / 2.0, w.lattice(), pol)};
          });
    {
        auto& r = R.add("sec2-2.addition-sigma",
                        R"(-\frac{\sigma(u+v) \sigma(u-v)}{\sigma^2(u) \sigma^2(v)} = \wp(u)-\wp(v))",
                        {"wp(u) - wp(v) (Fourier series)", "sigma quotient"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z, v = s.z2;
                            return {wp_fourier(u, w) - wp_fourier(v, w),
                                    -w.sigma(u + v) * w.sigma(u - v) / sq(w.sigma(u) * w.sigma(v))};
                        });
        r.domain.uses_z2 = true;
    }
    {
        auto& r = R.add("sec2-2.addition-theta",
                        R"(\wp(u)-\wp(v) = (\pi \theta'_1(0,\tau))^2 \frac{\theta_1(\frac{u+v}{2},\tau) \theta_1(\frac{u-v}{2},\tau)}{\left(\theta_1(\frac{u}{2},\tau) \theta_1(\frac{v}{2},\tau)\right)^2})",
                        {"wp(u) - wp(v) (Fourier series)", "theta1 quotient"}, {"minus-quarter"}, EVAL {
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z, v = s.z2, tp = w.nulls().t1p;
                            auto th = [&](cplx x) { return theta(1, x, w.lattice(), pol); };
                            const cplx c = has(f, "minus-quarter") ? -tp * tp / 4.0 : sq(kPi * tp);
                            return {wp_fourier(u, w) - wp_fourier(v, w),
                                    c * th((u + v) / 2.0) * th((u - v) / 2.0) / sq(th(u / 2.0) * th(v / 2.0))};
                        });
        r.domain.uses_z2 = true;
    }
    R.add("sec2-2.wp-prime-sigma",
          R"(\wp'(u) = - \frac{\sigma(2u)}{\sigma^4(u)} = - [\pi \theta'_1(0,\tau)]^3 \frac{\theta_1(2u,\tau)}{[\theta_1(u,\tau)]^4})",
          {"wp'", "-sigma(2u)/sigma^4(u)", "theta1 quotient"}, {"half-arguments", "eighth"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx u = s.z, tp = w.nulls().t1p;
              const bool half = has(f, "half-arguments");
              const cplx a = half ? u : 2.0 * u, b = half ? u / 2.0 : u;
              const cplx c = has(f, "eighth") ? tp * tp * tp / 8.0 : std::pow(kPi * tp, 3);
              const cplx sg = w.sigma(u);
              return {w.wp_prime(u), -w.sigma(2.0 * u) / (sg * sg * sg * sg),
                      -c * theta(1, a, w.lattice(), pol) / std::pow(theta(1, b, w.lattice(), pol), 4)};
          });

    {
        auto& r = R.add("thm2-7.main",
                        R"(\wp'(u) = -\frac{\sin 2\pi v}{ (\sin\pi v)^4} \prod_{k\geq 1} \frac{\sin(k\pi \tau+2\pi v) \sin(k\pi \tau-2\pi v) (\sin(k\pi \tau))^6}{[\sin(k\pi \tau+\pi v) \sin(k\pi \tau-\pi v)]^4})",
                        {"wp'", "sine product"}, {}, EVAL {
                            Weierstrass w(s.tau, pol);
                            const cplx c = has(f, "pi-cubed-over-8") ? std::pow(kPi, 3) / 8.0
                                           : has(f, "pi-cubed")      ? std::pow(kPi, 3)
                                                                     : 1.0;
                            return {w.wp_prime(s.z), wp_prime_product(s.z, w, c)};
                        });
        r.variants = {{"as-printed", {}}, {"pi-cubed", {"pi-cubed"}}, {"pi-cubed-over-8", {"pi-cubed-over-8"}}};
        r.tolerance = 1e-8;
    }
    {
        auto& r = R.add("thm2-7-proof.theta1-cos",
                        R"(\frac{\theta_1(v,\tau)}{ (\pi \sin \pi v )\ \theta'_1(0,\tau)} =  \ \prod_{k\geq 1} \left[1 - \left(\frac{\sin \pi v}{\sin k\pi \tau} \right)^2 \right] = \prod_{k\geq 1} \frac{\cos 2\pi v - \cos 2k\pi \tau}{1 - \cos 2k\pi \tau})",
                        {"theta1 quotient", "prod [1 - sin^2/sin^2]", "cosine-difference product"}, {"pi-numerator"},
                        EVAL {
                            Weierstrass w(s.tau, pol);
                            const cplx v = s.z / 2.0;
                            const cplx th = theta(1, v, w.lattice(), pol), sp = std::sin(kPi * v), tp = w.nulls().t1p;
                            const cplx lhs = has(f, "pi-numerator") ? kPi * th / (sp * tp) : th / (kPi * sp * tp);
                            return {lhs, theta_product(1, v, w.lattice(), pol) * kPi / (tp * sp),
                                    cos_difference_product(v, w)};
                        });
        r.tolerance = 1e-8;
    }
    {
        auto& r = R.add("thm2-7-proof.theta-form",
                        R"(\frac{\theta_1(2v,\tau)}{ \theta'_1(0,\tau)}\frac{(\theta'_1(0,\tau))^4}{[\theta_1(v,\tau)]^4} = - \pi^3 \ \wp'(z))",
                        {"theta1 quotient", "multiple of wp'", "cosine quotient product", "sine product"}, {"minus-8"},
                        EVAL {
                            Weierstrass w(s.tau, pol);
                            const cplx v = s.z / 2.0, tp = w.nulls().t1p;
                            const cplx lhs = theta(1, 2.0 * v, w.lattice(), pol) * tp * tp * tp /
                                             std::pow(theta(1, v, w.lattice(), pol), 4);
                            const cplx c = has(f, "minus-8") ? -8.0 : -std::pow(kPi, 3);
                            const cplx lead = std::pow(kPi, 3) * std::sin(2.0 * kPi * v) / std::pow(std::sin(kPi * v), 4);
                            return {lhs, c * w.wp_prime(s.z), lead * cos_quotient_product(v, w),
                                    wp_prime_product(s.z, w, -std::pow(kPi, 3))};
                        });
        r.tolerance = 1e-8;
    }
}

// -- the quotients xi ---------------------------------------------------------------

void xi_section(Registry& R) {
    R.add("sec3.wp-prime-xi",
          R"(\wp'(u) = - 2 \frac{\sigma_1}{\sigma}(u)\ \frac{\sigma_2}{\sigma}(u)\ \frac{\sigma_3}{\sigma}(u) = -2 \xi_{\alpha 0}(u)\ \xi_{\beta 0}(u)\ \xi_{ \gamma 0}(u))",
          {"wp'", "-2 sigma quotients", "-2 xi product"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx u = s.z, sg = w.sigma(u);
              return {w.wp_prime(u), -2.0 * w.sigma_j(1, u) * w.sigma_j(2, u) * w.sigma_j(3, u) / (sg * sg * sg),
                      -2.0 * xi({1, 0}, u, w) * xi({2, 0}, u, w) * xi({3, 0}, u, w)};
          });
    {
        auto& r = R.add("sec3.xi-prime-a0",
                        R"(\xi'_{\alpha 0}(u) = \frac{\wp'(u)}{2\sqrt{\wp(u) - e_\alpha}} = - {\sqrt{\wp(u) - e_\beta}}\ {\sqrt{\wp(u) - e_\gamma}} = - \xi_{\beta 0}(u)\  \xi_{\gamma 0}(u))",
                        {"xi'_a0 (theta)", "wp' / (2 xi_a0)", "-xi_b0 xi_g0"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z;
                            Values out;
                            for (int a = 1; a <= 3; ++a) {
                                const int b = a % 3 + 1, g = other(a, b);
                                const XiTheta x = xi_a0_theta(a, u, w);
                                out.insert(out.end(), {x.derivative, w.wp_prime(u) / (2.0 * x.value),
                                                       -xi({b, 0}, u, w) * xi({g, 0}, u, w)});
                            }
                            return out;
                        });
        r.group_size = 3;
    }
    {
        auto& r = R.add("sec3.xi-0a-prime", R"(\xi'_{0 \alpha}(u) = \xi_{\beta \alpha}(u)\ \xi_{\gamma \alpha}(u))",
                        {"xi'_0a (theta)", "-wp' / (2 xi_a0^3)", "xi_ba xi_ga"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z;
                            Values out;
                            for (int a = 1; a <= 3; ++a) {
                                const int b = a % 3 + 1, g = other(a, b);
                                const XiTheta x = xi_theta({0, a}, u, w);
                                const cplx xa = xi({a, 0}, u, w);
                                out.insert(out.end(), {x.derivative, -w.wp_prime(u) / (2.0 * xa * xa * xa),
                                                       xi({b, a}, u, w) * xi({g, a}, u, w)});
                            }
                            return out;
                        });
        r.group_size = 3;
    }
    {
        auto& r = R.add("sec3.xi-bg-prime",
                        R"(\xi'_{\beta \gamma}(u) =  - (e_\beta - e_\gamma) \xi_{0 \gamma}(u)\  \xi_{\alpha \gamma}(u))",
                        {"xi'_bg (theta)", "wp' (e_b - e_g) / (2 xi_bg (wp - e_g)^2)", "-(e_b - e_g) xi_0g xi_ag"}, {},
                        EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z, p = w.wp(u);
                            Values out;
                            for (int b = 1; b <= 3; ++b)
                                for (int g = 1; g <= 3; ++g) {
                                    if (b == g) continue;
                                    const int a = other(b, g);
                                    const XiTheta x = xi_theta({b, g}, u, w);
                                    const cplx d = w.e(b) - w.e(g);
                                    out.insert(out.end(), {x.derivative, w.wp_prime(u) * d / (2.0 * x.value * sq(p - w.e(g))),
                                                           -d * xi({0, g}, u, w) * xi({a, g}, u, w)});
                                }
                            return out;
                        });
        r.group_size = 3;
    }
    {
        auto& r = R.add("sec3.xi-product", R"(\xi_{\beta 0}(u) \ \xi_{\gamma 1}(u) = \frac{-\wp'(u)}{2(\wp(u)- e_1)})",
                        {"xi_b0 xi_g1", "-wp' / (2 (wp - e1))"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const cplx u = s.z, r1 = -ell(1, u, w) / 2.0;
                            return {xi({2, 0}, u, w) * xi({3, 1}, u, w), r1, xi({3, 0}, u, w) * xi({2, 1}, u, w), r1};
                        });
        r.group_size = 2;
    }
    {
        auto& r = R.add("sec3.diff-eq",
                        R"(\left(\frac{dy}{du}\right)^2 = (e_\alpha - e_\beta + y^2)\ (e_\alpha - e_\gamma + y^2))",
                        {"(xi'_a0)^2 (theta)", "(e_a - e_b + y^2)(e_a - e_g + y^2)"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            Values out;
                            for (int a = 1; a <= 3; ++a) {
                                const int b = a % 3 + 1, g = other(a, b);
                                const XiTheta x = xi_a0_theta(a, s.z, w);
                                const cplx y2 = x.value * x.value;
                                out.push_back(x.derivative * x.derivative);
                                out.push_back((w.e(a) - w.e(b) + y2) * (w.e(a) - w.e(g) + y2));
                            }
                            return out;
                        });
        r.group_size = 2;
    }
    R.add("sec3.three-wp",
          R"(3 \wp(u) = \xi^2_{\alpha 0}(u) + \xi^2_{\beta 0}(u) + \xi^2_{\gamma 0}(u))",
          {"3 wp (Fourier series)", "sum of xi_a0^2"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx u = s.z;
              return {3.0 * wp_fourier(u, w), sq(xi({1, 0}, u, w)) + sq(xi({2, 0}, u, w)) + sq(xi({3, 0}, u, w))};
          });
    R.add("sec3.wp-second",
          R"(\frac{\wp''(u)}{\wp'(u)} = 2\xi'_{\alpha 0}(u) + 2\xi'_{\beta 0}(u) + 2\xi'_{\gamma 0}(u))",
          {"wp''/wp'", "sum of xi terms"}, {"log-derivative-sum"}, EVAL {
              Weierstrass w(s.tau, pol);
              const cplx u = s.z;
              Accumulator acc;
              for (int a = 1; a <= 3; ++a) {
                  const XiTheta x = xi_a0_theta(a, u, w);
                  acc += has(f, "log-derivative-sum") ? x.derivative / x.value : 2.0 * x.derivative;
              }
              return {w.wp_second(u) / w.wp_prime(u), acc.value()};
          });
    {
        auto& r = R.add("sec3.half-period-a0", R"(\xi_{\alpha 0}(\omega_\beta) = \sqrt{e_\beta-e_\alpha})",
                        {"xi_a0(w_b)^2", "e_b - e_a"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            Values out;
                            for (int a = 1; a <= 3; ++a)
                                for (int b = 1; b <= 3; ++b) {
                                    if (a == b) continue;
                                    out.push_back(sq(xi({a, 0}, w.omega(b), w)));
                                    out.push_back(w.e(b) - w.e(a));
                                }
                            return out;
                        });
        r.group_size = 2;
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add("sec3.half-period-bg",
                        R"(\xi_{\beta \gamma}(\omega_\alpha) = \frac{\sqrt{e_\alpha-e_\beta}}{\sqrt{e_\alpha-e_\gamma}})",
                        {"xi_bg(w_a)^2", "(e_a - e_b)/(e_a - e_g)"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            Values out;
                            for (int b = 1; b <= 3; ++b)
                                for (int g = 1; g <= 3; ++g) {
                                    if (b == g) continue;
                                    const int a = other(b, g);
                                    out.push_back(sq(xi({b, g}, w.omega(a), w)));
                                    out.push_back((w.e(a) - w.e(b)) / (w.e(a) - w.e(g)));
                                }
                            return out;
                        });
        r.group_size = 2;
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add("sec3.moduli", R"(k = \xi_{2 1}(\omega_3), \qquad k' = \xi_{2 3}(\omega_1))",
                        {"k^2 + k'^2 | k^2 | k'^2", "1 | e-ratio"}, {}, EVAL {
                            (void)f;
                            Weierstrass w(s.tau, pol);
                            const Moduli m = moduli(w);
                            const cplx k2 = m.k * m.k, kp2 = m.kprime * m.kprime;
                            return {k2 + kp2, 1.0, k2, (w.e(3) - w.e(2)) / (w.e(3) - w.e(1)), kp2,
                                    (w.e(1) - w.e(2)) / (w.e(1) - w.e(3))};
                        });
        r.group_size = 2;
        r.domain = tau_only_domain();
    }

    const char* thm31_anchor[3] = {
        R"(\frac{\xi'_{1 0}(u)}{\xi_{1 0}(u)} = \sqrt{\left(\frac{e_1 - e_2}{\xi^2_{1 0}(u)} + 1\right)\ \left(\frac{e_1 - e_3}{\xi^2_{1 0}(u)} + 1\right)} = -\pi \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau+\pi z)}\right])",
        R"(\frac{\xi'_{2 0}(u)}{\xi_{2 0}(u)} = \sqrt{\left(\frac{e_2 - e_1}{\xi^2_{2 0}(u)} + 1\right)\ \left(\frac{e_2 - e_3}{\xi^2_{2 0}(u)} + 1\right)} = -\pi \sum_{k\neq 0} \left[ \frac{1}{\sin(\frac{-2k\pi}{\tau+1}+\pi z)}\right])",
        R"(\frac{\xi'_{3 0}(u)}{\xi_{3 0}(u)} = \sqrt{\left(\frac{e_3 - e_2}{\xi^2_{3 0}(u)} + 1\right)\ \left(\frac{e_3 - e_1}{\xi^2_{3 0}(u)} + 1\right)} = -\pi \sum_{k\neq 0} \left[ \frac{1}{\sin(\frac{-2k\pi}{\tau}+\pi z)}\right])"};
    for (int a = 1; a <= 3; ++a) {
        std::vector<std::string> flags{"full-Z"};
        if (a != 1) flags.push_back("rescaled");
        flags.push_back("extra-xi-squared");
        auto& r = R.add("thm3-1.a" + std::to_string(a), thm31_anchor[a - 1],
                        {"xi'/xi (theta) | its square", "-pi sine sum | radical squared"}, flags, EVAL_J(a) {
                            Weierstrass w(s.tau, pol);
                            const int b = a % 3 + 1, g = other(a, b);
                            const XiTheta x = xi_a0_theta(a, s.z, w);
                            const cplx ld = x.derivative / x.value, y2 = x.value * x.value;
                            const auto arg = (a == 1 || has(f, "rescaled")) ? ModularArgument::rescaled
                                                                           : ModularArgument::literal;
                            cplx radical = ((w.e(a) - w.e(b)) / y2 + 1.0) * ((w.e(a) - w.e(g)) / y2 + 1.0);
                            if (has(f, "extra-xi-squared")) radical *= y2;
                            return {ld, xi_logderiv_sum(a, s.z, w, index_of(f), arg), ld * ld, radical};
                        });
        r.group_size = 2;
        if (a != 1) r.domain = modular_domain();
    }
}

// -- order-n transformations ------------------------------------------------------------

ShiftRule shift_flag(const FlagSet& f, ShiftRule printed = ShiftRule::m_over_n) {
    return has(f, "shift-2m-over-n") ? ShiftRule::two_m_over_n : printed;
}

void transform_section(Registry& R) {
    for (int j = 1; j <= 3; ++j) {
        R.add_n("eq1.e" + std::to_string(j),
                R"(\wp(nz,n\tau) - e_j(n\tau) = [\wp(z,\tau) - e_j(\tau)] \prod_{m=1}^{\frac{n-1}{2}}\left[ \frac{\wp(z) - \wp(\frac{m}{n}+\omega_j)}{\wp(z) - \wp(\frac{m}{n})} \right]^2)",
                {"wp(nz, n tau) - e_j(n tau)", "(wp - e_j) times squared pairs"}, {"shift-2m-over-n", "inv-n2"}, EVAL_J(j) {
                    OrderPair op(s.tau, s.n, pol);
                    const Weierstrass& w = op.base();
                    const real n = s.n;
                    const cplx pairs = squared_pair_product(j, s.z, w, shift_flag(f), s.n, (s.n - 1) / 2);
                    return {wp_minus_e_scaled(j, s.z, op),
                            (has(f, "inv-n2") ? 1.0 / (n * n) : 1.0) * (w.wp(s.z) - w.e(j)) * pairs};
                });
    }
    R.add_n("thm4-1.e1",
            R"(\wp(nz,n\tau) - e_1(n\tau) = \left(\frac{4}{\pi^2}\right)^{n-1} \prod_{k\geq 1} \left[\frac{(\cot k\pi \tau)^n}{\cot (k n\pi \tau)} \right]^{4}\ \prod^{n-1}_{m=0}  \left[\wp(z+\frac{m}{n},\tau) - e_1(\tau)\right])",
            {"wp(nz, n tau) - e1(n tau)", "cotangent prefactor form", "theta-null prefactor form"},
            {"shift-2m-over-n", "prefactor-4-over-pi2"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const WpNValues v = wp_n_identity(1, s.z, op, {shift_flag(f), has(f, "prefactor-4-over-pi2") ? 2 : 4});
                return {v.lhs, *v.rhs_cot, v.rhs_theta};
            });
    for (int j : {2, 3}) {
        const std::string anchor =
            j == 2 ? R"(\wp(nz,n\tau) - e_2(n\tau) = \left(\frac{4}{\pi^4}\right)^{n-1} \frac{\theta_2^2(0,n\tau) \theta_4^2(0,n\tau)}{\left[\theta_2^2(0,\tau) \theta_4^2(0,\tau)\right]^n})"
                   : R"(\wp(nz,n\tau) - e_3(n\tau) = \left(\frac{4}{\pi^4}\right)^{n-1} \frac{\theta_2^2(0,n\tau) \theta_3^2(0,n\tau)}{\left[\theta_2^2(0,\tau) \theta_3^2(0,\tau)\right]^n})";
        R.add_n("thm4-1.e" + std::to_string(j), anchor,
                {"wp(nz, n tau) - e_j(n tau)", "theta-null prefactor form"}, {"shift-2m-over-n", "prefactor-4-over-pi2"},
                EVAL_J(j) {
                    OrderPair op(s.tau, s.n, pol);
                    const WpNValues v =
                        wp_n_identity(j, s.z, op, {shift_flag(f), has(f, "prefactor-4-over-pi2") ? 2 : 4});
                    return {v.lhs, v.rhs_theta};
                });
    }
    R.add_n("thm4-1.chain",
            R"(\frac{\wp(nz,n\tau) - e_1(n\tau) }{ [\wp(z,\tau) - e_1(\tau)]} = \left(\frac{4}{\pi^4}\right)^{n-1})",
            {"ratio", "theta-null form", "squared pairs", "cotangent form"},
            {"shift-2m-over-n", "prefactor-4-over-pi2", "half-range-over-n2"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const Weierstrass& w = op.base();
                const int n = s.n;
                const ShiftRule rule = shift_flag(f);
                const cplx ratio = wp_minus_e_scaled(1, s.z, op) / (w.wp(s.z) - w.e(1));
                const cplx rest = shifted_wp_product(1, s.z, op, rule, 1);
                const real pp = has(f, "prefactor-4-over-pi2") ? 2.0 : 4.0;
                const cplx theta_form = std::pow(4.0 / std::pow(kPi, pp), n - 1) * null_pair_ratio(1, op) * rest;
                const cplx pairs = has(f, "half-range-over-n2")
                                       ? squared_pair_product(1, s.z, w, rule, n, (n - 1) / 2) / static_cast<real>(n * n)
                                       : squared_pair_product(1, s.z, w, rule, n, n - 1);
                const cplx cot_form = std::pow(4.0 / (kPi * kPi), n - 1) * cot_transform_product(op) * rest;
                return {ratio, theta_form, pairs, cot_form};
            });
    R.add_n("thm4-1-proof.cot-collect",
            R"(\left(\frac{4}{\pi^2}\right)^n \prod_{k\geq 1} \left[\frac{(\cot k\pi \tau)^n}{\cot (k n\pi \tau)} \right]^{4}\ \prod^{n-1}_{m=0}  \left[\wp(z+\frac{m}{n},\tau) - e_1(\tau)\right] = \frac{4}{\pi^2} \left[\wp(nz,n\tau) - e_1(n\tau)\right])",
            {"(4/pi^2) (wp(nz, n tau) - e1(n tau))", "collected cotangent product"}, {"shift-2m-over-n"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const real c = 4.0 / (kPi * kPi);
                return {c * wp_minus_e_scaled(1, s.z, op),
                        std::pow(c, s.n) * cot_transform_product(op) * shifted_wp_product(1, s.z, op, shift_flag(f))};
            });
    {
        const char* anchors[3] = {
            R"(\sin(nz) = 2^{n-1} \sin(z) \sin(z+\frac{\pi}{n})  \sin(z+\frac{2\pi}{n}))",
            R"(\cos(nz) = (-1)^{\frac{n-1}{2}}\ 2^{n-1} \prod^{n-1}_{m=0} \cos(z+\frac{m\pi}{n}))",
            R"(\cot(nz) = (-1)^{\frac{n-1}{2}}\  \prod^{n-1}_{m=0} \cot(z+\frac{m\pi}{n}))"};
        const char* names[3] = {"sine", "cos", "cot"};
        for (int i = 0; i < 3; ++i) {
            auto& r = R.add_n(std::string("thm4-1-proof.") + names[i] + "-multiplication", anchors[i],
                              {std::string(names[i]) + "(nz)", "shifted product"}, {}, EVAL_J(i) {
                                  (void)f;
                                  (void)pol;
                                  const int n = s.n;
                                  const real sign = ((n - 1) / 2) % 2 ? -1.0 : 1.0;
                                  Product p;
                                  for (int m = 0; m < n; ++m) {
                                      const cplx x = s.z + static_cast<real>(m) * kPi / n;
                                      p.mul(i == 0 ? std::sin(x) : i == 1 ? std::cos(x) : trig::cot(x));
                                  }
                                  const cplx nz = static_cast<real>(n) * s.z;
                                  if (i == 0) return {std::sin(nz), two_pow(n - 1) * p.value()};
                                  if (i == 1) return {std::cos(nz), sign * two_pow(n - 1) * p.value()};
                                  return {trig::cot(nz), sign * p.value()};
                              });
            r.tolerance = 1e-12;
            r.domain = Domain{};
            r.domain.critical = [](const Sample& s) {
                // cot(z + m pi / n) and cot(nz) poles: keep z / pi off (1/n) Z.
                return std::vector<Critical>{{static_cast<real>(s.n) * s.z / kPi / 2.0, s.tau}};
            };
        }
    }
    for (int j : {3, 2}) {
        const std::string anchor =
            j == 3 ? R"(\wp(z) = e_3 + \frac{\pi^2}{\left(2\sin \frac{\pi z}{2}\right)^2}\prod_{k\geq 1} \left[ \frac{\sin((k-\frac{1}{2})\pi \tau-\pi \frac{z}{2})}{\sin(k\pi \tau-\pi \frac{z}{2})}\right]^2 \left [\frac{\sin(k\pi \tau)}{\sin((k-\frac{1}{2})\pi \tau)}\right]^2)"
                   : R"(\wp(z) = e_2 + \frac{\pi^2}{\left(2\sin \frac{\pi z}{2}\right)^2}\prod_{k\geq 1} \left[ \frac{\cos((k-\frac{1}{2})\pi \tau-\pi \frac{z}{2})}{\sin(k\pi \tau-\pi \frac{z}{2})}\right]^2 \left [\frac{\sin(k\pi \tau)}{\cos((k-\frac{1}{2})\pi \tau)}\right]^2)";
        R.add("thm4-1-proof.e" + std::to_string(j) + "-expansion", anchor, {"wp - e_j", "one-sided expansion"},
              {"paired-factors", "tail-exponent-4"}, EVAL_J(j) {
                  Weierstrass w(s.tau, pol);
                  return {w.wp(s.z) - w.e(j),
                          half_shift_expansion(j, s.z, w, has(f, "paired-factors"), has(f, "tail-exponent-4") ? 4 : 2)};
              });
    }
    R.add_n("cor4-2.main",
            R"(\wp'(nz,n\tau) = \left(\frac{4}{\pi^4}\right)^{n-1}\frac{{\theta'}_1^2(0,n\tau)}{\left[{\theta'}_1^2(0,\tau)\right]^n} \ \prod^{n-1}_{m=0}  \wp'(z+\frac{m}{n},\tau))",
            {"wp'(nz, n tau)", "theta1' prefactor form"}, {"shift-2m-over-n", "signed-4-over-pi"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                WpPrimeNOptions o;
                o.theta_shift = shift_flag(f);
                o.signed_four_over_pi = has(f, "signed-4-over-pi");
                const WpPrimeNValues v = wp_prime_n_identity(s.z, op, o);
                return {v.lhs, v.rhs_theta};
            });
    for (int j = 1; j <= 3; ++j) {
        R.add_n("cor4-3.i.e" + std::to_string(j),
                R"((i) \quad \frac{\wp(nz,n\tau) - e_j(n\tau)}{\wp(z,\tau) - e_j(\tau)} = \prod^{n-1}_{m=1} \left[\frac{\wp(z+\frac{2m}{n}) - e_j(\tau)}{\wp(\frac{2m}{n}) - e_j(\tau)}\right])",
                {"ratio", "normalized factors", "sigma-weighted factors"}, {"inv-n2"}, EVAL_J(j) {
                    OrderPair op(s.tau, s.n, pol);
                    const WpRatioValues v = wp_ratio_identity(j, s.z, op, {ShiftRule::two_m_over_n, has(f, "inv-n2")});
                    return {v.lhs, v.plain_factors, v.sigma_factors};
                });
    }
    R.add_n("cor4-3.ii",
            R"((ii)  \quad \wp'(nz,n\tau) = 2^{1-n} \wp'(z,\tau) \prod^{n-1}_{m=1} \frac{\wp'(z+\frac{2m\pi}{n})}{\wp'(\frac{2m\pi}{n})})",
            {"wp'(nz, n tau)", "sampled wp' product"}, {"shift-2m-over-n", "prefactor-inv-n3"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                WpPrimeNOptions o;
                o.sample_shift = shift_flag(f, ShiftRule::two_m_pi_over_n);
                o.inverse_n3 = has(f, "prefactor-inv-n3");
                const WpPrimeNValues v = wp_prime_n_identity(s.z, op, o);
                return {v.lhs, v.rhs_samples};
            });
    for (int j = 1; j <= 3; ++j) {
        R.add_n("cor4-3.iii.e" + std::to_string(j),
                R"((iii)\quad \frac{\wp'(nz,n\tau)}{\wp(nz,n\tau) - e_j(n\tau)} = 2^{1-n} \prod^{n-1}_{m=1} \frac{\wp(\frac{2m}{n},\tau) - e_j(\tau)}{\wp'(\frac{2m}{n},\tau)})",
                {"wp'/(wp - e_j) at (nz, n tau)", "sampled form"}, {"prefactor-inv-n"}, EVAL_J(j) {
                    OrderPair op(s.tau, s.n, pol);
                    LogderivNOptions o;
                    o.inverse_n = has(f, "prefactor-inv-n");
                    const LogderivNValues v = logderiv_n_identity(j, s.z, op, o);
                    return {v.lhs, v.rhs_samples};
                });
    }
    {
        auto& r = R.add_n("cor4-3-proof.sigma-quotient",
                          R"(\frac{\sigma_j}{\sigma}(nz,n\tau) = \prod^{n-1}_{m=0} \frac{\sigma_j}{\sigma}(z+\frac{2m\pi}{n},\tau) \prod^{n-1}_{m=0}  \frac{\sigma}{\sigma_j}(\frac{2m\pi}{n},\tau))",
                          {"sigma_j/sigma (nz, n tau)", "shifted quotient product"}, {"shift-2m-over-n", "skip-m0-over-n"},
                          EVAL {
                              OrderPair op(s.tau, s.n, pol);
                              Values out;
                              for (int j = 1; j <= 3; ++j) {
                                  const PairValues v = sigma_quotient_n_transform(
                                      j, s.z, op, {shift_flag(f, ShiftRule::two_m_pi_over_n), has(f, "skip-m0-over-n")});
                                  out.push_back(v.lhs);
                                  out.push_back(v.rhs);
                              }
                              return out;
                          });
        r.group_size = 2;
    }
    for (int j = 1; j <= 3; ++j) {
        R.add_n("cor4-4.i.e" + std::to_string(j),
                R"((i) \ \frac{\wp'(nz,n\tau)}{\wp(nz,n\tau) - e_j(n\tau)} = \frac{\theta_{j+1}^2(0,n\tau)}{\left[\theta_{j+1}^2(0,\tau)\right]^n}\ \prod^{n-1}_{m=0} \frac{\wp'(z+\frac{2m}{n},\tau)}{\wp(z+\frac{2m}{n},\tau) - e_j(\tau)})",
                {"wp'/(wp - e_j) at (nz, n tau)", "theta-null form"}, {"signed-pi-power"}, EVAL_J(j) {
                    OrderPair op(s.tau, s.n, pol);
                    LogderivNOptions o;
                    o.signed_pi_power = has(f, "signed-pi-power");
                    const LogderivNValues v = logderiv_n_identity(j, s.z, op, o);
                    return {v.lhs, v.rhs_product};
                });
    }
    R.add_n("cor4-4.ii",
            R"((ii)  \ \sum_{k\neq 0} \left[ \frac{1}{\sin(2kn\pi \tau+n\pi z)}\right] = \frac{\theta_{2}^2(0,n\tau)}{\left[\theta_{2}^2(0,\tau)\right]^n}\ \prod^{n-1}_{m=0} \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau+\pi z+ \frac{m\pi}{n})}\right])",
            {"sine sum at (nz, n tau)", "theta2-null times shifted sums"}, {"full-Z", "times-2-pow-n-minus-1"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const IndexSet I = index_of(f);
                const real c = has(f, "times-2-pow-n-minus-1") ? two_pow(s.n - 1) : 1.0;
                return {scaled_sine_sum(s.z, op, I),
                        c * null_ratio(2, op) * shifted_sine_sum_product(s.z, op, ShiftRule::m_over_n, I)};
            });

    R.add_n("sec4-2.sigma-raw",
            R"(\sigma(nu,n\tau) = e^{-nu\sum_{1}^{n-1} \frac{m}{n}\eta_1+nu\wp(\frac{m}{n})}\ \prod_{0\leq m\leq n-1} \frac{\sigma(u+\frac{m}{n},\tau)}{\sigma(\frac{m}{n},\tau)})",
            {"sigma(nu, n tau)", "exponential times sigma quotients"}, {"shift-2m-over-n", "skip-m0", "derived-prefactor"},
            EVAL {
                OrderPair op(s.tau, s.n, pol);
                const PairValues v =
                    sigma_n_transform_raw(s.z, op, {shift_flag(f), has(f, "skip-m0"), has(f, "derived-prefactor")});
                return {v.lhs, v.rhs};
            });
    {
        auto& r = R.add_n("sec4-2.sigma-quotient",
                          R"(\frac{\sigma_j(nu,n\tau)}{\sigma(nu,n\tau)} = \prod_{0\leq m\leq n-1}[ \frac{\sigma(\frac{m}{n},\tau)}{\sigma_j(\frac{m}{n},\tau)}] \ \prod_{0\leq m\leq n-1} \frac{\sigma_j(u+\frac{m}{n},\tau)}{\sigma(u+\frac{m}{n},\tau)})",
                          {"sigma_j/sigma (nu, n tau)", "shifted quotient product"}, {"shift-2m-over-n", "skip-m0-over-n"},
                          EVAL {
                              OrderPair op(s.tau, s.n, pol);
                              Values out;
                              for (int j = 1; j <= 3; ++j) {
                                  const PairValues v =
                                      sigma_quotient_n_transform(j, s.z, op, {shift_flag(f), has(f, "skip-m0-over-n")});
                                  out.push_back(v.lhs);
                                  out.push_back(v.rhs);
                              }
                              return out;
                          });
        r.group_size = 2;
    }

    struct ModeSpec {
        const char* suffix;
        TransformMode mode;
        int p;
        const char* anchor_a0;
        const char* anchor_bg;
    };
    const ModeSpec modes[4] = {
        {"ntau", TransformMode::n_tau, 0,
         R"(\xi_{\alpha 0}(nu,n\tau) = \xi_{\alpha 0}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\alpha 0}(u+\frac{2m}{n}) }{\xi_{\alpha 0}(\frac{2m}{n}) })",
         R"(\xi_{\beta \gamma}(nu,n\tau) = \xi_{\beta \gamma}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\beta \gamma}(u+\frac{2m}{n}) }{\xi_{\beta \gamma}(\frac{2m}{n}) })"},
        {"tau-over-n", TransformMode::tau_over_n, 0,
         R"(\xi_{\alpha 0}(\frac{u}{n},\frac{\tau}{n}) = \xi_{\alpha 0}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\alpha 0}(u+\frac{2m\tau}{n}) }{\xi_{\alpha 0}(\frac{2m\tau}{n}) })",
         R"(\xi_{\beta \gamma}(\frac{u}{n},\frac{\tau}{n}) = \xi_{\beta \gamma}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\beta \gamma}(u+\frac{2m\tau}{n}) }{\xi_{\beta \gamma}(\frac{2m\tau}{n}) })"},
        {"tau-plus-2p.p0", TransformMode::tau_plus_2p_over_n, 0,
         R"(\xi_{\alpha 0}(\frac{u}{n},\frac{\tau+2p}{n}) = \xi_{\alpha 0}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\alpha 0}(u+\frac{2m(\tau+2p)}{n}) }{\xi_{\alpha 0}(\frac{2m(\tau+2p)}{n}) })",
         R"(\xi_{\beta \gamma}(\frac{u}{n},\frac{\tau+2p}{n}) = \xi_{\beta \gamma}(u)  \prod_{m=1}^{n-1} \frac{\xi_{\beta \gamma}(u+\frac{2m(\tau+2p)}{n}) }{\xi_{\beta \gamma}(\frac{2m(\tau+2p)}{n}) })"},
        {"tau-plus-2p.p1", TransformMode::tau_plus_2p_over_n, 1, nullptr, nullptr},
    };
    for (int i = 0; i < 4; ++i) {
        const ModeSpec& ms = modes[i];
        const char* a0 = ms.anchor_a0 ? ms.anchor_a0 : modes[2].anchor_a0;
        const char* bg = ms.anchor_bg ? ms.anchor_bg : modes[2].anchor_bg;
        const std::vector<std::string> flags =
            ms.mode == TransformMode::n_tau ? std::vector<std::string>{"over-n"} : std::vector<std::string>{"lhs-argument-u"};
        for (bool zero_index : {true, false}) {
            const TransformMode mode = ms.mode;
            auto& r = R.add_n(std::string("sec4-2.xi-") + (zero_index ? "a0." : "bg.") + ms.suffix, zero_index ? a0 : bg,
                              {"xi at the transformed lattice", "shifted xi product"}, flags,
                              [mode, zero_index](const Sample& s, const FlagSet& f, const Pol& pol) -> Values {
                                  const TransformOrder order{s.n, s.p};
                                  Weierstrass base(s.tau, pol), tr(transformed_tau(mode, order, s.tau), pol);
                                  const XiNOptions o{has(f, "over-n"), has(f, "lhs-argument-u")};
                                  const XiIndex a0_idx[3] = {{1, 0}, {2, 0}, {3, 0}};
                                  const XiIndex bg_idx[3] = {{1, 2}, {1, 3}, {2, 3}};
                                  Values out;
                                  for (const XiIndex& idx : zero_index ? a0_idx : bg_idx) {
                                      const PairValues v = xi_n_transform(idx, mode, order, s.z, base, tr, o);
                                      out.push_back(v.lhs);
                                      out.push_back(v.rhs);
                                  }
                                  return out;
                              });
            r.group_size = 2;
            r.p = ms.p;
            r.domain = mode_domain(mode);
        }
    }
    for (bool zero_index : {true, false}) {
        const std::string anchor =
            zero_index
                ? R"(\frac{\xi'_{\alpha 0}(nu,n\tau)}{\xi_{\alpha 0}(nu,n\tau)} = \frac{\xi'_{\alpha 0}(u,\tau)}{\xi_{\alpha 0}(u,\tau)} + \sum_{m=1}^{n-1})"
                : R"(\frac{\xi'_{\beta \gamma}(nu,n\tau)}{\xi_{\beta \gamma}(nu,n\tau)} = \frac{\xi'_{\beta \gamma}(u,\tau)}{\xi_{\beta \gamma}(u,\tau)} + \sum_{m=1}^{n-1})";
        auto& r = R.add_n(std::string("sec4-2.xi-logderiv.") + (zero_index ? "a0" : "bg"), anchor,
                          {"xi'/xi (nu, n tau)", "sum of shifted xi'/xi", "sum of wp'/(2 (wp - e))"}, {"lhs-times-n"},
                          [zero_index](const Sample& s, const FlagSet& f, const Pol& pol) -> Values {
                              OrderPair op(s.tau, s.n, pol);
                              const XiIndex a0_idx[3] = {{1, 0}, {2, 0}, {3, 0}};
                              const XiIndex bg_idx[3] = {{1, 2}, {1, 3}, {2, 3}};
                              Values out;
                              for (const XiIndex& idx : zero_index ? a0_idx : bg_idx) {
                                  const XiLogderivNValues v = logderiv_xi_n_sum(idx, s.z, op, has(f, "lhs-times-n"));
                                  out.insert(out.end(), {v.lhs, v.rhs_xi, v.rhs_wp});
                              }
                              return out;
                          });
        r.group_size = 3;
    }
    {
        auto& r = R.add_n("sec4-2.period-l",
                          R"(l = \xi_{2 1}(\tau, n\tau) = \xi_{2 1}(\omega_3) \prod_{m=1}^{n-1} \frac{\xi_{2 1}(\tau+\frac{2m}{n}) }{\xi_{2 1}(\frac{2m}{n}) } = k^n \prod_{m=1}^{n-1} {\xi^2_{1 2}(\frac{2m}{n}) })",
                          {"k(n tau)", "shifted xi_21 product", "k^n prod xi_12^2"}, {}, EVAL {
                              (void)f;
                              OrderPair op(s.tau, s.n, pol);
                              const PeriodRelations p = modular_period_relations(op);
                              return {p.l, p.l_shift, p.l_squares};
                          });
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add_n("sec4-2.period-lprime",
                          R"(l' = k'^n \prod_{m=1}^{n-1} \frac{1}{\xi^2_{2 1}(\frac{2m}{n})} = k'^n \prod_{m=1}^{n-1} {\xi^2_{3 2}(\frac{2m}{n})})",
                          {"k'(n tau)", "k'^n prod 1/xi^2", "k'^n prod xi_32^2"}, {"index-23"}, EVAL {
                              OrderPair op(s.tau, s.n, pol);
                              const PeriodRelations p = modular_period_relations(op);
                              return {p.lprime, has(f, "index-23") ? p.lprime_index23 : p.lprime_typeset, p.lprime_squares};
                          });
        r.domain = tau_only_domain();
    }
    {
        auto& r = R.add_n("sec4-2.zeros",
                          R"(\frac{\sqrt{e_1(\tau)-e_3(\tau)}}{\sqrt{e_1(n\tau)-e_3(n\tau)}} = \prod_{m=1}^{n-1} \frac{\xi^2_{0 3}(\frac{2m-1}{n})}{\xi^2_{0 3}(\frac{2m}{n})})",
                          {"e1 - e3 ratio", "xi_03 product"}, {"no-sqrt", "times-n2", "odd-shift-set"}, EVAL {
                              OrderPair op(s.tau, s.n, pol);
                              const PairValues v =
                                  zeros_relation(op, {has(f, "no-sqrt"), has(f, "times-n2"), has(f, "odd-shift-set")});
                              return {v.lhs, v.rhs};
                          });
        r.domain = tau_only_domain();
    }

    R.add_n("cor4-5.chain",
            R"(\frac{\xi'_{1 0}(nz,n\tau)}{\xi_{1 0}(nz,n\tau)} = \frac{\wp'(nz,n\tau)}{2[\wp(nz,n\tau)-e_1(n\tau)]} = \sum_{m=0}^{n-1} \frac{\wp'(z+\frac{2m}{n})}{2(\wp(z+\frac{2m}{n}) - e_1)}=)",
            {"xi'/xi (nz, n tau)", "wp'/(2 (wp - e1)) at (nz, n tau)", "sum over shifts", "sine sum at (nz, n tau)",
             "sine sums over shifts"},
            {"full-Z", "sums-over-n"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const IndexSet I = index_of(f);
                const real n = s.n;
                const real c = has(f, "sums-over-n") ? 1.0 / n : 1.0;
                const XiLogderivNValues v = logderiv_xi_n_sum({1, 0}, s.z, op, false, I);
                const Weierstrass& sc = op.scaled();
                return {v.lhs, ell(1, n * s.z, sc) / 2.0, c * v.rhs_wp, -kPi * scaled_sine_sum(s.z, op, I),
                        c * *v.rhs_sine};
            });
    R.add_n("cor4-5-proof.logderiv",
            R"(\frac{\xi'_{1 0}(nz,n\tau)}{\xi_{1 0}(nz,n\tau)} = \frac{\xi'_{1 0}(z,\tau)}{\xi_{1 0}(z,\tau)} \sum_{m=1}^{n-1})",
            {"xi'/xi (nz, n tau)", "combination of shifted xi'/xi"}, {"sum-not-product", "lhs-times-n"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                const Weierstrass& w = op.base();
                const real n = s.n;
                const XiTheta lhs = xi_a0_theta(1, n * s.z, op.scaled());
                const XiTheta x0 = xi_a0_theta(1, s.z, w);
                Accumulator rest;
                for (int m = 1; m < s.n; ++m) {
                    const XiTheta x = xi_a0_theta(1, s.z + 2.0 * m / n, w);
                    rest += x.derivative / x.value;
                }
                const cplx first = x0.derivative / x0.value;
                const cplx rhs = has(f, "sum-not-product") ? first + rest.value() : first * rest.value();
                return {(has(f, "lhs-times-n") ? n : 1.0) * lhs.derivative / lhs.value, rhs};
            });

    // The reciprocal-sine chain.
    auto chain_e1 = [](const Sample& s, const FlagSet& f, const OrderPair& op, IndexSet I) {
        const int n = s.n;
        const cplx pre = has(f, "modular-cot-prefactor")
                             ? two_pow(n - 1) / static_cast<real>(n) * std::pow(-kI * s.tau, n - 1) * modular_cot_product(op)
                             : std::pow(4.0 * kPi, n - 1) * modular_cot_product_typeset(op);
        return pre * shifted_sine_sum_product(s.z, op, ShiftRule::m_over_n, I);
    };
    auto chain_e2 = [](const Sample& s, const FlagSet& f, const OrderPair& op, IndexSet I) {
        const bool all_m = has(f, "all-m-shift-m-over-n");
        return two_pow(1 - s.n) * sine_product_sum(s.z, op, all_m ? ShiftRule::m_over_n : ShiftRule::two_m_over_n, I,
                                                   all_m ? 0 : 1);
    };
    auto chain_e3 = [](const Sample& s, const FlagSet& f, const OrderPair& op, IndexSet I) {
        const real c = has(f, "times-2-pow-n-minus-1") ? two_pow(s.n - 1) : 1.0;
        return c * null_ratio(2, op) * shifted_sine_sum_product(s.z, op, ShiftRule::m_over_n, I);
    };
    R.add_n("cor4-6.chain",
            R"(\sum_{k\neq 0} \left[ \frac{1}{\sin(2kn\pi \tau+n\pi z)}\right] = \left(4\pi\right)^{n-1} \left[ \prod_{k\geq 1} \frac{ (\cot \frac{k\pi}{\tau})^{8n}}{  \cot (\frac{k n\pi}{\tau})^8}\right])",
            {"sine sum at (nz, n tau)", "modular cotangent prefactor form", "sum of shifted sine products",
             "theta2-null form"},
            {"full-Z", "modular-cot-prefactor", "all-m-shift-m-over-n", "times-2-pow-n-minus-1"},
            [chain_e1, chain_e2, chain_e3](const Sample& s, const FlagSet& f, const Pol& pol) -> Values {
                OrderPair op(s.tau, s.n, pol);
                const IndexSet I = index_of(f);
                return {scaled_sine_sum(s.z, op, I), chain_e1(s, f, op, I), chain_e2(s, f, op, I), chain_e3(s, f, op, I)};
            });
    {
        auto& r = R.add_n("cor4-6.sine-multiplication",
                          R"(\sin(2kn\pi \tau+n\pi z) = 2^{n-1} \prod_{m=0}^{n-1} \sin(2k\pi \tau+\pi (z+\frac{m}{n})))",
                          {"sin(2 k n pi tau + n pi z)", "shifted sine product"}, {}, EVAL {
                              (void)f;
                              (void)pol;
                              const int n = s.n;
                              Values out;
                              for (int k : {1, -1}) {
                                  const cplx a = 2.0 * k * kPi * s.tau;
                                  Product p;
                                  for (int m = 0; m < n; ++m) p.mul(std::sin(a + kPi * (s.z + static_cast<real>(m) / n)));
                                  out.push_back(std::sin(static_cast<real>(n) * (a + kPi * s.z)));
                                  out.push_back(two_pow(n - 1) * p.value());
                              }
                              return out;
                          });
        r.group_size = 2;
        r.tolerance = 1e-12;
    }
    {
        auto& r = R.add("cor4-6-proof.logderiv",
                        R"(\frac{\wp'(z)}{\wp(z) - e_1} =  -2\pi \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau+\pi z)}\right])",
                        {"wp'/(wp - e1)", "-2 pi sine sum"}, {"full-Z"}, EVAL {
                            Weierstrass w(s.tau, pol);
                            return {ell(1, s.z, w), -2.0 * kPi * sine_sum(s.z, s.tau, pol, index_of(f))};
                        });
        (void)r;
    }
    R.add_n("cor4-6-proof.n-chain",
            R"(\frac{\wp'(nz,n\tau)}{\wp(nz,\tau) - e_1(n\tau)} =  (-2\pi) \sum_{k\neq 0} \left[ \frac{1}{\sin(2kn\pi \tau+n\pi z)}\right] = \frac{\theta_{j+1}^2(0,n\tau)}{\left[\theta_{j+1}^2(0,\tau)\right]^n})",
            {"wp'/(wp - e1) at (nz, n tau)", "-2 pi sine sum at (nz, n tau)", "theta-null form"},
            {"full-Z", "signed-pi-power"}, EVAL {
                OrderPair op(s.tau, s.n, pol);
                LogderivNOptions o;
                o.signed_pi_power = has(f, "signed-pi-power");
                o.sum_index = index_of(f);
                const LogderivNValues v = logderiv_n_identity(1, s.z, op, o);
                return {v.lhs, *v.rhs_sum, v.rhs_product};
            });
    R.add_n("cor4-6-proof.exchange",
            R"(2^{1-n}\sum_{k\neq 0} \prod_{m=1}^{n-1} \left[ \frac{1}{\sin(2k\pi \tau+\pi (z+\frac{2m}{n}))}\right] =  \frac{\theta_{2}^2(0,n\tau)}{\left[\theta_{2}^2(0,\tau)\right]^n}\ \prod^{n-1}_{m=0} \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau+\pi z+ \frac{m\pi}{n})}\right])",
            {"sum of shifted sine products", "theta2-null form"},
            {"full-Z", "all-m-shift-m-over-n", "times-2-pow-n-minus-1"},
            [chain_e2, chain_e3](const Sample& s, const FlagSet& f, const Pol& pol) -> Values {
                OrderPair op(s.tau, s.n, pol);
                const IndexSet I = index_of(f);
                return {chain_e2(s, f, op, I), chain_e3(s, f, op, I)};
            });
    R.add_n("intro.sine-sum-chain",
            R"(\sum_{k\neq 0} \left[ \frac{1}{\sin(2kn\pi \tau+n\pi z)}\right] = \sum_{m=0}^{n-1} \sum_{k\neq 0} \left[ \frac{1}{\sin(2k\pi \tau+\pi (z+\frac{2m}{n}))}\right] =)",
            {"sine sum at (nz, n tau)", "sum over shifts", "sum of shifted sine products", "theta2-null form"},
            {"full-Z", "sums-over-n", "all-m-shift-m-over-n", "times-2-pow-n-minus-1"},
            [chain_e2, chain_e3](const Sample& s, const FlagSet& f, const Pol& pol) -> Values {
                OrderPair op(s.tau, s.n, pol);
                const IndexSet I = index_of(f);
                const real n = s.n;
                Accumulator acc;
                for (int m = 0; m < s.n; ++m) acc += sine_sum(s.z + 2.0 * m / n, s.tau, pol, I);
                return {scaled_sine_sum(s.z, op, I), (has(f, "sums-over-n") ? 1.0 / n : 1.0) * acc.value(),
                        chain_e2(s, f, op, I), chain_e3(s, f, op, I)};
            });
}

}  // namespace

std::vector<IdentityRecord> register_catalog() {
    Registry R;
    products_section(R);
    logderiv_section(R);
    xi_section(R);
    transform_section(R);
    return R.take();
}

std::vector<IdentityRecord> catalog(const std::vector<int>& orders) { return expand_orders(register_catalog(), orders); }

IdentityRecord lookup(const std::string& id, const std::vector<int>& orders) {
    for (auto& r : catalog(orders))
        if (r.id == id) return r;
    throw Error(ErrorKind::invalid_argument, "no identity with id '" + id + "'");
}

Sample smoke_sample() {
    Sample s;
    s.tau = {0.0, 1.1};
    s.z = {0.31, 0.17};
    s.z2 = {-0.23, 0.11};
    s.n = 3;
    return s;
}

std::vector<IdentityRecord> planted_faults() {
    Registry R;
    R.add("fault.prefactor-x2", "planted: doubled prefactor", {"wp - e1", "2 x cotangent product"}, {}, EVAL {
        (void)f;
        Weierstrass w(s.tau, pol);
        return {w.wp(s.z) - w.e(1), 2.0 * wp_minus_e1_cot_product(s.z, w)};
    });
    R.add("fault.sign", "planted: flipped sign", {"wp'", "negated sine product"}, {}, EVAL {
        (void)f;
        Weierstrass w(s.tau, pol);
        return {w.wp_prime(s.z), -wp_prime_product(s.z, w, std::pow(kPi, 3) / 8.0)};
    });
    R.add("fault.index-set", "planted: k = 0 dropped from a full sum", {"wp'/(wp - e1)", "sum over k != 0"}, {}, EVAL {
        (void)f;
        Weierstrass w(s.tau, pol);
        return {ell(1, s.z, w), wp_logderiv_full_sum(s.z, w, IndexSet::nonzero)};
    });
    R.add("fault.extra-pi", "planted: extra pi inside the squared theta quotient",
          {"wp (Fourier series)", "e1 + (pi theta quotient)^2 / 4"}, {}, EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              const cplx v = s.z / 2.0;
              const cplx q = kPi * theta(2, v, w.lattice(), pol) / w.nulls().t2 * w.nulls().t1p /
                             theta(1, v, w.lattice(), pol);
              return {wp_fourier(s.z, w), w.e(1) + q * q / 4.0};
          });
    R.add("fault.wrong-half-period", "planted: e3 product used for e2", {"wp - e2", "half-shifted sine product"}, {},
          EVAL {
              (void)f;
              Weierstrass w(s.tau, pol);
              return {w.wp(s.z) - w.e(2), wp_minus_e_product(3, s.z, w)};
          });
    return R.take();
}

}  // namespace ellip::audit
