#include "ellip/audit.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>

#include "ellip/lattice.hpp"

namespace ellip::audit {

namespace {

real uniform(std::mt19937_64& rng, real lo, real hi) {
    const real u = static_cast<real>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

// Distance from c to {a + b tau}, i.e. half the distance of 2c to {2a + 2b tau}.
real half_lattice_distance(cplx c, cplx tau) {
    return 0.5 * pole_distance(2.0 * c, LatticeTau(tau));
}

std::string join(const FlagSet& flags) {
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty()) out += '+';
        out += f;
    }
    return out;
}

real median(std::vector<real> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Evaluated {
    Variant variant;
    std::vector<Values> values;  // per sample; empty when invalid
    std::vector<real> residuals;
    int n_valid = 0;
};

real group_residual(const Values& v, size_t g) {
    real worst = 0.0;
    for (size_t off = 0; off + g <= v.size(); off += g) {
        real scale = 0.0, diff = 0.0;
        for (size_t i = 0; i < g; ++i) scale = std::max(scale, std::abs(v[off + i]));
        for (size_t i = 1; i < g; ++i) diff = std::max(diff, std::abs(v[off + i] - v[off]));
        worst = std::max(worst, diff / (1.0 + scale));
    }
    return worst;
}

struct ConstantFit {
    cplx c;
    real dispersion;  // max |E_i / E_0 - c| / |c|
    real residual;    // max |E_i - c E_0| / (1 + max |E|)
};

// Least-squares constant carried by every non-reference value: E_i ~ c E_0.
std::optional<ConstantFit> fit_constant(const Evaluated& e, size_t g) {
    Accumulator num;
    real den = 0.0;
    for (const auto& v : e.values) {
        for (size_t off = 0; off + g <= v.size(); off += g)
            for (size_t i = 1; i < g; ++i) {
                num += v[off + i] * std::conj(v[off]);
                den += std::norm(v[off]);
            }
    }
    if (!(den > 0.0)) return std::nullopt;
    const cplx c = num.value() / den;
    if (!(std::abs(c) > 0.0) || !is_finite(c)) return std::nullopt;
    real disp = 0.0, res = 0.0;
    for (const auto& v : e.values) {
        for (size_t off = 0; off + g <= v.size(); off += g) {
            const cplx fitted = c * v[off];
            real scale = std::abs(fitted);
            for (size_t i = 0; i < g; ++i) scale = std::max(scale, std::abs(v[off + i]));
            for (size_t i = 1; i < g; ++i) {
                res = std::max(res, std::abs(v[off + i] - fitted) / (1.0 + scale));
                if (std::abs(v[off]) > 0.0)
                    disp = std::max(disp, std::abs(v[off + i] / v[off] - c) / std::abs(c));
            }
        }
    }
    return ConstantFit{c, disp, res};
}

}  // namespace

std::vector<Variant> variants_of(const IdentityRecord& record) {
    if (!record.variants.empty()) return record.variants;
    const size_t f = record.flags.size();
    if (f > 16) throw Error(ErrorKind::registration, record.id + ": too many flags");
    std::vector<unsigned> masks(size_t{1} << f);
    for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Variant> out;
    for (unsigned m : masks) {
        Variant v;
        for (size_t i = 0; i < f; ++i)
            if (m & (1u << i)) v.flags.insert(record.flags[i]);
        v.label = v.flags.empty() ? "as-printed" : join(v.flags);
        out.push_back(std::move(v));
    }
    return out;
}

void validate_records(const std::vector<IdentityRecord>& records) {
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (!seen.insert(r.id).second) throw Error(ErrorKind::registration, "duplicate identity id " + r.id);
        if (r.expressions.size() < 2) throw Error(ErrorKind::registration, r.id + ": fewer than two expressions");
        if (!r.eval) throw Error(ErrorKind::registration, r.id + ": no evaluator");
        std::set<std::string> labels;
        for (const auto& v : variants_of(r))
            if (!labels.insert(v.label).second)
                throw Error(ErrorKind::registration, r.id + ": duplicate variant label " + v.label);
    }
}

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::pass_as_printed: return "PASS_AS_PRINTED";
        case Status::pass_corrected: return "PASS_CORRECTED";
        case Status::pass_up_to_constant: return "PASS_UP_TO_CONSTANT";
        case Status::fail: return "FAIL";
    }
    return "FAIL";
}

Status status_from_string(const std::string& s) {
    for (Status st : {Status::pass_as_printed, Status::pass_corrected, Status::pass_up_to_constant, Status::fail})
        if (s == to_string(st)) return st;
    throw Error(ErrorKind::invalid_argument, "unknown status '" + s + "'");
}

std::uint64_t record_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::vector<Sample> draw_samples(const IdentityRecord& record, const GridConfig& grid) {
    if (grid.n_samples < 1) throw Error(ErrorKind::invalid_argument, "n_samples must be positive");
    const Domain& d = record.domain;
    std::mt19937_64 rng(record_seed(grid.seed, record.id));
    std::vector<Sample> out;
    const long budget = 10L * grid.n_samples;
    for (long draw = 0; draw < budget && static_cast<int>(out.size()) < grid.n_samples; ++draw) {
        Sample s;
        s.n = record.n;
        s.p = record.p;
        s.tau = {uniform(rng, d.tau_re_lo, d.tau_re_hi), uniform(rng, d.tau_im_lo, d.tau_im_hi)};
        const real h = d.z_im_fraction * s.tau.imag();
        s.z = {uniform(rng, -1.0, 1.0), uniform(rng, -h, h)};
        s.z2 = {uniform(rng, -1.0, 1.0), uniform(rng, -h, h)};
        std::vector<Critical> crit;
        if (d.critical) {
            crit = d.critical(s);
        } else {
            crit.push_back({s.z, s.tau});
            if (d.uses_z2) {
                crit.push_back({s.z2, s.tau});
                crit.push_back({s.z + s.z2, s.tau});
                crit.push_back({s.z - s.z2, s.tau});
            }
        }
        bool ok = true;
        for (const auto& c : crit)
            if (half_lattice_distance(c.point, c.tau) < d.guard) {
                ok = false;
                break;
            }
        if (ok && d.accept && !d.accept(s)) ok = false;
        if (ok) out.push_back(s);
    }
    if (static_cast<int>(out.size()) < (grid.n_samples + 1) / 2) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s: only %zu of %d samples inside the domain after %ld draws",
                      record.id.c_str(), out.size(), grid.n_samples, budget);
        throw Error(ErrorKind::empty_grid, buf);
    }
    return out;
}

AuditResult audit(const IdentityRecord& record, const GridConfig& grid) {
    if (!record.eval) throw Error(ErrorKind::registration, record.id + ": no evaluator");
    const size_t g = record.group_size > 0 ? static_cast<size_t>(record.group_size) : record.expressions.size();
    if (g < 2) throw Error(ErrorKind::registration, record.id + ": needs at least two expressions");

    const std::vector<Sample> samples = draw_samples(record, grid);
    const int need = (static_cast<int>(samples.size()) + 1) / 2;

    std::vector<Evaluated> evaluated;
    for (auto& v : variants_of(record)) {
        Evaluated e{std::move(v), {}, {}, 0};
        for (const auto& s : samples) {
            try {
                Values vals = record.eval(s, e.variant.flags, grid.policy);
                if (vals.empty() || vals.size() % g != 0)
                    throw Error(ErrorKind::registration, record.id + ": evaluator returned a ragged value list");
                bool finite = true;
                for (cplx x : vals) finite = finite && is_finite(x);
                if (!finite) continue;
                e.residuals.push_back(group_residual(vals, g));
                e.values.push_back(std::move(vals));
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::registration) throw;
            }
        }
        e.n_valid = static_cast<int>(e.values.size());
        evaluated.push_back(std::move(e));
    }

    AuditResult r;
    r.id = record.id;
    r.anchor = record.anchor;
    r.expressions = record.expressions;
    r.tolerance = record.tolerance;
    r.n_samples = static_cast<int>(samples.size());
    r.seed = grid.seed;

    auto eligible = [&](const Evaluated& e) { return e.n_valid >= need && e.n_valid > 0; };
    auto max_res = [](const Evaluated& e) { return *std::max_element(e.residuals.begin(), e.residuals.end()); };

    for (const auto& e : evaluated) {
        VariantStats st;
        st.label = e.variant.label;
        st.flags.assign(e.variant.flags.begin(), e.variant.flags.end());
        st.n_valid = e.n_valid;
        if (e.n_valid > 0) {
            st.max_rel_residual = max_res(e);
            st.median_rel_residual = median(e.residuals);
        }
        r.variants.push_back(std::move(st));
    }

    auto pick = [&](const Evaluated& e, Status s) {
        r.status = s;
        r.variant = e.variant.label;
        r.max_rel_residual = max_res(e);
        r.median_rel_residual = median(e.residuals);
    };

    // Passing readings within roundoff of the best one compete on the number of
    // flags; a reading that passes only by a wide margin over the best does not.
    const Evaluated& printed = evaluated.front();
    real best = std::numeric_limits<real>::infinity();
    for (const auto& e : evaluated)
        if (eligible(e) && max_res(e) < record.tolerance) best = std::min(best, max_res(e));
    const real cutoff = std::max(100.0 * best, 1e-12);
    const Evaluated* chosen = nullptr;
    for (const auto& e : evaluated) {
        if (!eligible(e) || !(max_res(e) < record.tolerance) || max_res(e) > cutoff) continue;
        if (!chosen || e.variant.flags.size() < chosen->variant.flags.size() ||
            (e.variant.flags.size() == chosen->variant.flags.size() && max_res(e) < max_res(*chosen)))
            chosen = &e;
    }
    if (chosen == &printed) pick(printed, Status::pass_as_printed);
    else if (chosen) pick(*chosen, Status::pass_corrected);
    if (!chosen) {
        for (const auto& e : evaluated) {
            if (!eligible(e)) continue;
            const auto fit = fit_constant(e, g);
            if (fit && fit->dispersion < record.tolerance && fit->residual < record.tolerance) {
                pick(e, Status::pass_up_to_constant);
                r.fitted_constant = fit->c;
                r.constant_dispersion = fit->dispersion;
                return r;
            }
        }
        for (const auto& e : evaluated) {
            if (!eligible(e)) continue;
            if (!chosen || max_res(e) < max_res(*chosen)) chosen = &e;
        }
        if (!chosen) {
            r.status = Status::fail;
            r.variant = printed.variant.label;
            return r;
        }
        pick(*chosen, Status::fail);
    }
    if (const auto fit = fit_constant(*chosen, g)) {
        r.fitted_constant = fit->c;
        r.constant_dispersion = fit->dispersion;
    }
    return r;
}

std::vector<AuditResult> audit_all(const std::vector<IdentityRecord>& records, const GridConfig& grid,
                                   int threads) {
    std::vector<AuditResult> out(records.size());
    std::vector<std::exception_ptr> errors(records.size());
    int t = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    t = std::min<int>(t, static_cast<int>(std::max<size_t>(records.size(), 1)));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < records.size();) {
            try {
                out[i] = audit(records[i], grid);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::sort(out.begin(), out.end(), [](const AuditResult& a, const AuditResult& b) { return a.id < b.id; });
    return out;
}

std::vector<IdentityRecord> expand_orders(const std::vector<IdentityRecord>& records,
                                          const std::vector<int>& orders) {
    std::vector<IdentityRecord> out;
    for (const auto& r : records) {
        if (!r.uses_n) {
            out.push_back(r);
            continue;
        }
        for (int n : orders) {
            if (n < 3 || n % 2 == 0 || n > 15)
                throw Error(ErrorKind::invalid_argument, "transformation orders must be odd, 3..15");
            IdentityRecord c = r;
            c.n = n;
            c.id += "@n" + std::to_string(n);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<IdentityRecord> filter(const std::vector<IdentityRecord>& records, const std::string& glob) {
    std::vector<IdentityRecord> out;
    for (const auto& r : records)
        if (fnmatch(glob.c_str(), r.id.c_str(), 0) == 0) out.push_back(r);
    return out;
}

std::string summary_line(const AuditResult& r) {
    std::string s = r.id + " " + to_string(r.status);
    if (r.status != Status::pass_as_printed) s += " (" + r.variant + ")";
    char buf[64];
    if (r.max_rel_residual)
        std::snprintf(buf, sizeof buf, " max=%.3e", *r.max_rel_residual);
    else
        std::snprintf(buf, sizeof buf, " max=n/a");
    s += buf;
    if (r.status == Status::pass_up_to_constant && r.fitted_constant) {
        std::snprintf(buf, sizeof buf, " c=%.12g%+.12gi", r.fitted_constant->real(), r.fitted_constant->imag());
        s += buf;
    }
    return s;
}

}  // namespace ellip::audit
