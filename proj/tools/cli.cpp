#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "ellip/catalog.hpp"
#include "ellip/products.hpp"
#include "ellip/theta.hpp"
#include "ellip/xi.hpp"

namespace ellip::cli {

namespace {

int exit_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::invalid_argument: return usage;
        case ErrorKind::empty_grid: return empty_grid;
        case ErrorKind::io: return usage;
        default: return domain;
    }
}

std::optional<XiIndex> xi_name(const std::string& name) {
    static const std::regex re(R"(xi\.([0-3])\.([0-3]))");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    return XiIndex{m[1].str()[0] - '0', m[2].str()[0] - '0'};
}

bool known(const std::string& name) {
    if (xi_name(name)) return true;
    for (const auto& f : function_names())
        if (f == name) return true;
    return false;
}

bool backend_ok(std::ostream& err) {
    const char* p = std::getenv("WP_PRODUCTS_PRECISION");
    if (!p || std::string(p).empty() || std::string(p) == "binary64") return true;
    err << "error: WP_PRODUCTS_PRECISION=" << p << " is not available; the only backend is binary64\n";
    return false;
}

struct Point {
    std::string function;
    std::string z = "0";
    std::string tau;
    real eps = 1e-12;
};

std::optional<std::pair<cplx, cplx>> parse_point(const Point& p, std::ostream& err) {
    const auto z = parse_complex(p.z);
    const auto tau = parse_complex(p.tau);
    if (!z) err << "error: cannot parse z = '" << p.z << "'\n";
    if (!tau) err << "error: cannot parse tau = '" << p.tau << "'\n";
    if (!z || !tau) return std::nullopt;
    if (!known(p.function)) {
        err << "error: unknown function '" << p.function << "'\n";
        return std::nullopt;
    }
    return std::pair{*z, *tau};
}

int cmd_eval(const Point& p, std::ostream& out, std::ostream& err) {
    const auto pt = parse_point(p, err);
    if (!pt) return usage;
    TruncationPolicy pol;
    pol.eps = p.eps;
    pol.validate();
    const cplx v = evaluate(p.function, pt->first, pt->second, pol);
    out << format_complex(v) << "\nK = " << reported_terms(p.function, pt->first, pt->second, pol) << '\n';
    return ok;
}

int cmd_convergence(const Point& p, int kmin, int kmax, std::ostream& out, std::ostream& err) {
    const auto pt = parse_point(p, err);
    if (!pt) return usage;
    if (kmin < 1 || kmax < kmin) {
        err << "error: need 1 <= --kmin <= --kmax\n";
        return usage;
    }
    std::vector<cplx> vals;
    for (int k = kmin; k <= kmax; ++k) {
        TruncationPolicy pol;
        pol.fixed_terms = k;
        vals.push_back(evaluate(p.function, pt->first, pt->second, pol));
    }
    out << "K,value_re,value_im,abs_delta\n";
    char buf[160];
    for (int k = kmin; k <= kmax; ++k) {
        const cplx v = vals[k - kmin];
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", k, v.real(), v.imag(), std::abs(v - vals.back()));
        out << buf;
    }
    return ok;
}

struct AuditArgs {
    std::string ids = "*";
    std::uint64_t seed = 7;
    int samples = 50;
    real eps = 1e-12;
    std::vector<int> orders{3, 5};
    std::string format = "json";
    std::string out_path;
    int threads = 0;
    bool planted = false;
};

int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
    auto records = audit::catalog(a.orders);
    if (a.planted) {
        auto f = audit::planted_faults();
        records.insert(records.end(), f.begin(), f.end());
    }
    records = audit::filter(records, a.ids);
    if (records.empty()) {
        err << "error: no identities matched '" << a.ids << "'\n";
        return usage;
    }
    audit::GridConfig grid;
    grid.seed = a.seed;
    grid.n_samples = a.samples;
    grid.policy.eps = a.eps;
    grid.policy.validate();
    const auto results = audit::audit_all(records, grid, a.threads);

    const audit::ReportMeta meta{a.seed, a.samples, a.eps, a.orders};
    const std::string doc = a.format == "csv" ? audit::to_csv(results) : audit::to_json(meta, results);
    std::ostream& summary = a.out_path.empty() ? err : out;
    if (a.out_path.empty()) {
        out << doc;
    } else {
        std::ofstream f(a.out_path, std::ios::binary);
        f << doc;
        if (!f) throw Error(ErrorKind::io, "cannot write " + a.out_path);
    }
    bool failed = false;
    for (const auto& r : results) {
        summary << audit::summary_line(r) << '\n';
        failed = failed || r.status == audit::Status::fail;
    }
    return failed ? audit_failed : ok;
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& text) {
    static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex real_only("^([+-]?" + num + ")$");
    static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
    static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
    std::smatch m;
    auto coef = [](const std::ssub_match& sign, const std::ssub_match& mag) {
        const real v = mag.matched ? std::stod(mag.str()) : 1.0;
        return sign.str() == "-" ? -v : v;
    };
    if (std::regex_match(text, m, real_only)) return cplx{std::stod(m[1].str()), 0.0};
    if (std::regex_match(text, m, imag_only)) return cplx{0.0, coef(m[1], m[2])};
    if (std::regex_match(text, m, both)) return cplx{std::stod(m[1].str()), coef(m[2], m[3])};
    return std::nullopt;
}

std::string format_complex(cplx v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real(), v.imag());
    return buf;
}

const std::vector<std::string>& function_names() {
    static const std::vector<std::string> names{
        "wp",     "wp_prime", "sigma",  "sigma1", "sigma2", "sigma3", "zeta", "theta1", "theta2",
        "theta3", "theta4",   "e1",     "e2",     "e3",     "eta",    "k",    "kprime", "xi.<b>.<g>", "wp.product"};
    return names;
}

cplx evaluate(const std::string& name, cplx z, cplx tau, const TruncationPolicy& policy) {
    if (name.rfind("theta", 0) == 0 && name.size() == 6 && name[5] >= '1' && name[5] <= '4')
        return theta(name[5] - '0', z, LatticeTau(tau), policy);
    const Weierstrass w(tau, policy);
    if (name == "wp") return w.wp(z);
    if (name == "wp.product") return w.e(1) + wp_minus_e_product(1, z, w);
    if (name == "wp_prime") return w.wp_prime(z);
    if (name == "sigma") return w.sigma(z);
    if (name == "sigma1" || name == "sigma2" || name == "sigma3") return w.sigma_j(name[5] - '0', z);
    if (name == "zeta") return w.zeta(z);
    if (name == "e1" || name == "e2" || name == "e3") return w.e(name[1] - '0');
    if (name == "eta") return w.eta();
    if (name == "k") return moduli(w).k;
    if (name == "kprime") return moduli(w).kprime;
    if (const auto idx = xi_name(name)) return xi(*idx, z, w);
    throw Error(ErrorKind::invalid_argument, "unknown function '" + name + "'");
}

int reported_terms(const std::string& name, cplx z, cplx tau, const TruncationPolicy& policy) {
    const LatticeTau L(tau);
    if (name.rfind("theta", 0) == 0) return theta_series(name[5] - '0', z, L, policy).terms;
    return product_terms(L.q_abs(), policy);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weierstrass and theta evaluation, identity audit and convergence tables"};
    app.require_subcommand(1);

    Point ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one function");
    eval->add_option("function", ev.function, "wp, wp.product, wp_prime, sigma, sigma1..3, zeta, theta1..4, xi.b.g, e1..3, eta, k, kprime")
        ->required();
    eval->add_option("--z", ev.z, "Argument, e.g. 0.3+0.1i");
    eval->add_option("--tau", ev.tau, "Period ratio, e.g. 1i")->required();
    eval->add_option("--eps", ev.eps, "Truncation tolerance");

    AuditArgs au;
    auto* aud = app.add_subcommand("audit", "Audit the identity catalog");
    aud->add_option("--ids", au.ids, "Glob over identity ids");
    aud->add_option("--seed", au.seed, "Sampler seed");
    aud->add_option("--samples", au.samples, "Samples per identity")->check(CLI::PositiveNumber);
    aud->add_option("--eps", au.eps, "Truncation tolerance");
    aud->add_option("--n", au.orders, "Transformation orders")->delimiter(',');
    aud->add_option("--format", au.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    aud->add_option("--out", au.out_path, "Report path (default: standard output)");
    aud->add_option("--threads", au.threads, "Worker threads (0: hardware)");
    aud->add_flag("--planted", au.planted, "Also audit the planted faults");

    Point cv;
    int kmin = 1, kmax = 30;
    auto* conv = app.add_subcommand("convergence", "Value against a fixed term count");
    conv->add_option("function", cv.function)->required();
    conv->add_option("--z", cv.z);
    conv->add_option("--tau", cv.tau)->required();
    conv->add_option("--kmin", kmin);
    conv->add_option("--kmax", kmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    if (!backend_ok(err)) return usage;

    try {
        if (*eval) return cmd_eval(ev, out, err);
        if (*aud) return cmd_audit(au, out, err);
        return cmd_convergence(cv, kmin, kmax, out, err);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace ellip::cli
