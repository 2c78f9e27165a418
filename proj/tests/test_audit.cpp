#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ellip/catalog.hpp"

using namespace ellip;
using namespace ellip::audit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

IdentityRecord synthetic(const std::string& id, std::function<cplx(cplx, const FlagSet&)> rhs,
                         std::vector<std::string> flags = {}) {
    IdentityRecord r;
    r.id = id;
    r.anchor = id;
    r.expressions = {"z", "rhs"};
    r.flags = std::move(flags);
    r.eval = [rhs](const Sample& s, const FlagSet& f, const TruncationPolicy&) {
        return Values{s.z, rhs(s.z, f)};
    };
    return r;
}

GridConfig small_grid(int n = 20) {
    GridConfig g;
    g.n_samples = n;
    return g;
}

const AuditResult& find(const std::vector<AuditResult>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::runtime_error("missing " + id);
}

}  // namespace

TEST_CASE("catalog size and lookup") {
    CHECK(register_catalog().size() >= 40);
    CHECK(catalog().size() >= 40);
    CHECK(lookup("cor2-3.main").expressions.size() == 3);
    CHECK(lookup("thm4-1.e1@n5").n == 5);
    try {
        lookup("nosuch");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_argument);
    }
}

TEST_CASE("registration rejects duplicates") {
    auto recs = register_catalog();
    CHECK_NOTHROW(validate_records(recs));
    recs.push_back(recs.front());
    try {
        validate_records(recs);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::registration);
    }
    auto r = synthetic("dup-variants", [](cplx z, const FlagSet&) { return z; });
    r.variants = {{"as-printed", {}}, {"as-printed", {"x"}}};
    CHECK_THROWS_AS(validate_records({r}), Error);
}

TEST_CASE("every record evaluates on the smoke sample") {
    for (const auto& r : catalog({3})) {
        Sample s = smoke_sample();
        s.n = r.n;
        s.p = r.p;
        bool any = false;
        for (const auto& v : variants_of(r)) {
            try {
                const Values vals = r.eval(s, v.flags, {});
                bool finite = !vals.empty();
                for (cplx x : vals) finite = finite && is_finite(x);
                any = any || finite;
            } catch (const Error&) {
            }
        }
        CHECK_MESSAGE(any, r.id);
    }
}

TEST_CASE("anchors are verbatim excerpts of the source document") {
    const std::string doc = read_file(std::string(ELLIP_SOURCE_DIR) + "/paper.md");
    REQUIRE(!doc.empty());
    for (const auto& r : register_catalog()) CHECK_MESSAGE(doc.find(r.anchor) != std::string::npos, r.id);
}

TEST_CASE("status ladder on synthetic records") {
    const auto grid = small_grid();
    const auto exact = audit::audit(synthetic("s.exact", [](cplx z, const FlagSet&) { return z; }), grid);
    CHECK(exact.status == Status::pass_as_printed);
    CHECK(exact.variant == "as-printed");

    const auto fixed = audit::audit(synthetic(
                                 "s.fixed", [](cplx z, const FlagSet& f) { return has(f, "fix") ? z : z + 0.5; },
                                 {"fix", "noise"}),
                             grid);
    CHECK(fixed.status == Status::pass_corrected);
    CHECK(fixed.variant == "fix");

    const auto scaled = audit::audit(synthetic("s.scaled", [](cplx z, const FlagSet&) { return 3.0 * z; }), grid);
    CHECK(scaled.status == Status::pass_up_to_constant);
    REQUIRE(scaled.fitted_constant.has_value());
    CHECK(std::abs(*scaled.fitted_constant - 3.0) < 1e-12);

    const auto wrong = audit::audit(synthetic("s.wrong", [](cplx z, const FlagSet&) { return z * z + 1.0; }), grid);
    CHECK(wrong.status == Status::fail);
}

TEST_CASE("residuals use 1 + max |E| in the denominator") {
    const auto r = audit::audit(synthetic("s.offset", [](cplx z, const FlagSet&) { return z + 1e-3; }), small_grid());
    REQUIRE(r.max_rel_residual.has_value());
    CHECK(*r.max_rel_residual <= 1e-3);
    CHECK(*r.max_rel_residual > 1e-3 / 4.0);
}

TEST_CASE("empty grid") {
    auto r = synthetic("s.empty", [](cplx z, const FlagSet&) { return z; });
    r.domain.accept = [](const Sample&) { return false; };
    try {
        audit::audit(r, small_grid());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_grid);
    }
}

TEST_CASE("sampling is seeded per record") {
    const auto r = lookup("thm2-1.e1");
    const auto a = draw_samples(r, small_grid());
    const auto b = draw_samples(r, small_grid());
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].z == b[i].z);
    CHECK(record_seed(7, "a") != record_seed(7, "b"));
    CHECK(record_seed(7, "a") != record_seed(8, "a"));
}

TEST_CASE("glob filter and order expansion") {
    const auto all = catalog({3, 5});
    CHECK(filter(all, "thm2-1.*").size() == 3);
    CHECK(filter(all, "nosuch*").empty());
    const auto n3 = filter(all, "thm4-1.e1@n3");
    REQUIRE(n3.size() == 1);
    CHECK(n3.front().n == 3);
}

TEST_CASE("spot verdicts") {
    const auto rs = audit_all({lookup("thm2-1.e1"), lookup("remark2-2ii.e1")}, {});
    const auto& t = find(rs, "thm2-1.e1");
    CHECK((t.status == Status::pass_as_printed || t.status == Status::pass_corrected));
    CHECK(*t.max_rel_residual < 1e-9);
    const auto& r = find(rs, "remark2-2ii.e1");
    CHECK(r.status == Status::pass_corrected);
    CHECK(r.variant == "prefactor-pi4-over-16");
}

TEST_CASE("planted faults never pass as printed") {
    const auto rs = audit_all(planted_faults(), {});
    CHECK(rs.size() == 5);
    for (const auto& r : rs) CHECK_MESSAGE(r.status != Status::pass_as_printed, r.id);
    const auto& x2 = find(rs, "fault.prefactor-x2");
    CHECK(x2.status == Status::pass_up_to_constant);
    REQUIRE(x2.fitted_constant.has_value());
    CHECK(std::abs(*x2.fitted_constant - 2.0) < 1e-9);
}

TEST_CASE("reports are deterministic, round-trip and keep the CSV schema") {
    const auto recs = filter(catalog({3}), "cor2-*");
    GridConfig g = small_grid(15);
    const auto a = audit_all(recs, g, 1);
    const auto b = audit_all(recs, g, 4);
    CHECK(a == b);
    const ReportMeta meta{g.seed, g.n_samples, g.policy.eps, {3}};
    const std::string json = to_json(meta, a);
    CHECK(json == to_json(meta, b));
    ReportMeta back_meta;
    const auto back = results_from_json(json, &back_meta);
    CHECK(back == a);
    CHECK(back_meta == meta);
    CHECK(json.find('\r') == std::string::npos);
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].id < a[i].id);

    const std::string csv = to_csv(a);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "id,anchor,variant,max_rel_residual,median_rel_residual,fitted_constant_re,fitted_constant_im,status,"
          "n_samples,seed");
    CHECK(static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')) >= a.size() + 1);
}

TEST_CASE("tightening eps never turns a pass into a fail") {
    const auto recs = filter(catalog({3}), "thm*");
    GridConfig loose = small_grid(10), tight = small_grid(10);
    loose.policy.eps = 1e-8;
    tight.policy.eps = 1e-9;
    const auto a = audit_all(recs, loose);
    const auto b = audit_all(recs, tight);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].status != Status::fail) CHECK_MESSAGE(b[i].status != Status::fail, a[i].id);
}

TEST_CASE("status names round-trip") {
    for (Status s : {Status::pass_as_printed, Status::pass_corrected, Status::pass_up_to_constant, Status::fail})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK(std::string(to_string(Status::pass_up_to_constant)) == "PASS_UP_TO_CONSTANT");
}
