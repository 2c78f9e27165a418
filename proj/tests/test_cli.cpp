#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ellip/catalog.hpp"
#include "ellip/weierstrass.hpp"
#include "ellip/xi.hpp"

using namespace ellip;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ellip");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

struct Row {
    int k;
    cplx value;
    real delta;
};

std::vector<Row> table(const std::string& csv) {
    std::vector<Row> rows;
    const auto ls = lines(csv);
    for (size_t i = 1; i < ls.size(); ++i) {
        Row r{};
        real re = 0, im = 0;
        REQUIRE(std::sscanf(ls[i].c_str(), "%d,%lf,%lf,%lf", &r.k, &re, &im, &r.delta) == 4);
        r.value = {re, im};
        rows.push_back(r);
    }
    return rows;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("complex literal grammar") {
    const std::vector<std::pair<std::string, cplx>> good{
        {"1", {1, 0}},         {"-2.5", {-2.5, 0}},     {"1i", {0, 1}},          {"i", {0, 1}},
        {"-i", {0, -1}},       {"0.3+0.1i", {0.3, 0.1}}, {"1e-3-2i", {1e-3, -2}}, {".5i", {0, 0.5}},
        {"+2-i", {2, -1}},     {"3.", {3, 0}}};
    for (const auto& [text, v] : good) {
        const auto p = cli::parse_complex(text);
        REQUIRE_MESSAGE(p.has_value(), text);
        CHECK(*p == v);
    }
    for (const std::string bad : {"", "1 + i", "abc", "1+", "i1", "1+2", "1i+2", "--1", "1e", "0x10"})
        CHECK_MESSAGE(!cli::parse_complex(bad).has_value(), bad);
}

TEST_CASE("eval prints the library value") {
    const auto r = invoke({"eval", "wp", "--z", "0.5", "--tau", "1i"});
    CHECK(r.code == 0);
    const cplx lib = Weierstrass(kI).wp(0.5);
    CHECK(cli::evaluate("wp", 0.5, kI, {}) == lib);
    CHECK(lines(r.out).at(0) == cli::format_complex(lib));
    CHECK(lines(r.out).at(1).rfind("K = ", 0) == 0);
}

TEST_CASE("eval examples") {
    CHECK(lines(invoke({"eval", "theta1", "--z", "0", "--tau", "1i"}).out).at(0) == "0+0i");
    CHECK(lines(invoke({"eval", "k", "--tau", "1i"}).out).at(0).rfind("0.707106781186548", 0) == 0);
    const Weierstrass w(cplx{0.1, 1.2});
    for (const auto& name : {"wp_prime", "sigma", "sigma2", "zeta", "e3", "eta", "kprime"}) {
        const cplx lib = cli::evaluate(name, {0.3, 0.2}, w.tau(), {});
        CHECK(lines(invoke({"eval", name, "--z", "0.3+0.2i", "--tau", "0.1+1.2i"}).out).at(0) == cli::format_complex(lib));
    }
    CHECK(cli::evaluate("xi.2.3", {0.3, 0.2}, w.tau(), {}) == xi({2, 3}, {0.3, 0.2}, w));
    CHECK(cli::evaluate("sigma1", {0.3, 0.2}, w.tau(), {}) == w.sigma_j(1, {0.3, 0.2}));
}

TEST_CASE("exit codes") {
    CHECK(invoke({"eval", "wp", "--z", "0", "--tau", "1i"}).code == cli::domain);
    CHECK(invoke({"eval", "wp", "--z", "0.5", "--tau", "-1i"}).code == cli::domain);
    CHECK(invoke({"eval", "wp", "--z", "0.5+", "--tau", "1i"}).code == cli::usage);
    CHECK(invoke({"eval", "nosuch", "--z", "0.5", "--tau", "1i"}).code == cli::usage);
    CHECK(invoke({"eval", "wp", "--z", "0.5"}).code == cli::usage);
    CHECK(invoke({}).code == cli::usage);
    CHECK(invoke({"audit", "--format", "xml"}).code == cli::usage);
    CHECK(invoke({"eval", "--help"}).code == cli::ok);
}

TEST_CASE("audit by glob") {
    const auto r = invoke({"audit", "--ids", "thm2-1.*", "--seed", "7", "--samples", "50"});
    CHECK(r.code == 0);
    CHECK(lines(r.err).size() == 3);
    const auto results = audit::results_from_json(r.out);
    CHECK(results.size() == 3);
}

TEST_CASE("audit filter miss") {
    const auto r = invoke({"audit", "--ids", "nosuch*"});
    CHECK(r.code == cli::usage);
    CHECK(r.err.find("no identities matched") != std::string::npos);
}

TEST_CASE("audit with a failing record exits 1") {
    const auto r = invoke({"audit", "--planted", "--ids", "fault.*", "--samples", "20", "--format", "csv"});
    CHECK(r.code == cli::audit_failed);
    CHECK(lines(r.out).size() == 6);
}

TEST_CASE("repeated audits write identical reports") {
    const std::string a = "cli_report_a.json", b = "cli_report_b.json";
    const auto ra = invoke({"audit", "--seed", "7", "--ids", "cor*", "--samples", "20", "--out", a});
    const auto rb = invoke({"audit", "--seed", "7", "--ids", "cor*", "--samples", "20", "--out", b, "--threads", "1"});
    CHECK(ra.code == 0);
    CHECK(rb.code == 0);
    CHECK(!slurp(a).empty());
    CHECK(slurp(a) == slurp(b));
    CHECK(ra.out == rb.out);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("precision backend selection") {
    ::setenv("WP_PRODUCTS_PRECISION", "binary128", 1);
    CHECK(invoke({"eval", "wp", "--z", "0.5", "--tau", "1i"}).code == cli::usage);
    ::setenv("WP_PRODUCTS_PRECISION", "binary64", 1);
    CHECK(invoke({"eval", "wp", "--z", "0.5", "--tau", "1i"}).code == cli::ok);
    ::unsetenv("WP_PRODUCTS_PRECISION");
}

TEST_CASE("convergence table") {
    const auto r = invoke({"convergence", "wp", "--z", "0.3+0.1i", "--tau", "1.5i", "--kmin", "1", "--kmax", "30"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(0) == "K,value_re,value_im,abs_delta");
    CHECK(r.out.find("nan") == std::string::npos);
    const auto rows = table(r.out);
    REQUIRE(rows.size() == 30);
    CHECK(rows.back().delta == 0.0);
    // theta-backed: at least |q|^2 per term until roundoff
    const real q2 = std::exp(-2.0 * kPi * 1.5);
    for (size_t i = 0; i + 1 < rows.size() && rows[i + 1].delta > 0.0; ++i)
        CHECK(rows[i + 1].delta <= 1.2 * q2 * rows[i].delta);
}

TEST_CASE("product tail shrinks by |q|^2 per factor") {
    const real im_tau = 0.8;
    const auto r = invoke({"convergence", "wp.product", "--z", "0.3+0.1i", "--tau", "0.8i", "--kmax", "30"});
    CHECK(r.code == 0);
    const auto rows = table(r.out);
    REQUIRE(rows.size() == 30);
    CHECK(rows.back().delta == 0.0);
    const real expected = -2.0 * kPi * im_tau;
    int measured = 0;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i + 1].delta < 1e-11 * std::abs(rows.back().value)) break;
        CHECK(std::log(rows[i + 1].delta / rows[i].delta) == doctest::Approx(expected).epsilon(0.2));
        ++measured;
    }
    CHECK(measured >= 3);
    const cplx direct = Weierstrass(cplx{0.0, im_tau}).wp(cplx{0.3, 0.1});
    CHECK(std::abs(rows.back().value - direct) < 1e-10 * std::abs(direct));
}

TEST_CASE("convergence near the strip edge needs more terms") {
    const auto count_above = [](const std::vector<Row>& rows) {
        int n = 0;
        for (const auto& r : rows) n += r.delta > 1e-10 * std::abs(rows.back().value);
        return n;
    };
    const auto centre = invoke({"convergence", "sigma", "--z", "0.3", "--tau", "0.8i", "--kmax", "40"});
    const auto edge = invoke({"convergence", "sigma", "--z", "0.3+1.5i", "--tau", "0.8i", "--kmax", "40"});
    CHECK(edge.code == 0);
    CHECK(edge.out.find("nan") == std::string::npos);
    CHECK(count_above(table(edge.out)) > count_above(table(centre.out)));
}
