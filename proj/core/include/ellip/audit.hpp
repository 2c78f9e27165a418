// Identity audit: records of displayed identities, a seeded sampler over
// (tau, z, n), residual statistics per reading of a display, and verdicts.
#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ellip/numerics.hpp"

namespace ellip::audit {

struct Sample {
    cplx tau;
    cplx z;
    cplx z2;
    int n = 1;
    int p = 0;
};

using FlagSet = std::set<std::string>;

/// Values of all expressions at one sample, laid out as consecutive groups
/// of `group_size` values; the first value of each group is the reference.
using Values = std::vector<cplx>;
using Evaluator = std::function<Values(const Sample&, const FlagSet&, const TruncationPolicy&)>;

inline bool has(const FlagSet& f, const char* flag) { return f.count(flag) != 0; }

struct Variant {
    std::string label;
    FlagSet flags;
};

/// Point that must stay away from the half-lattice {a + b tau_c}.
struct Critical {
    cplx point;
    cplx tau;
};

struct Domain {
    real tau_re_lo = -1.0, tau_re_hi = 1.0;
    real tau_im_lo = 0.8, tau_im_hi = 2.0;
    /// |Im z| <= fraction * Im tau.
    real z_im_fraction = 0.9;
    bool uses_z2 = false;
    real guard = 0.02;
    /// Defaults to {z} (and z2) against tau.
    std::function<std::vector<Critical>(const Sample&)> critical;
    std::function<bool(const Sample&)> accept;
};

struct IdentityRecord {
    std::string id;
    std::string anchor;
    std::vector<std::string> expressions;
    /// Values per group; 0 means expressions.size().
    int group_size = 0;
    /// Correction flags; with no explicit variants every subset is tried.
    std::vector<std::string> flags;
    std::vector<Variant> variants;
    Domain domain;
    real tolerance = 1e-9;
    /// Expanded once per transformation order.
    bool uses_n = false;
    int n = 1;
    int p = 0;
    Evaluator eval;
};

/// Explicit variants, or every subset of the flags ordered by size; the empty
/// set is labelled "as-printed", others join their flags with '+'.
std::vector<Variant> variants_of(const IdentityRecord& record);

/// Raises a registration error on a duplicate id, a duplicate variant label,
/// fewer than two expressions or a missing evaluator.
void validate_records(const std::vector<IdentityRecord>& records);

enum class Status { pass_as_printed, pass_corrected, pass_up_to_constant, fail };

const char* to_string(Status s) noexcept;
Status status_from_string(const std::string& s);

struct VariantStats {
    std::string label;
    std::vector<std::string> flags;
    std::optional<real> max_rel_residual;
    std::optional<real> median_rel_residual;
    int n_valid = 0;

    bool operator==(const VariantStats&) const = default;
};

struct AuditResult {
    std::string id;
    std::string anchor;
    std::vector<std::string> expressions;
    Status status = Status::fail;
    std::string variant;
    std::optional<real> max_rel_residual;
    std::optional<real> median_rel_residual;
    std::optional<cplx> fitted_constant;
    std::optional<real> constant_dispersion;
    real tolerance = 0.0;
    int n_samples = 0;
    std::uint64_t seed = 0;
    std::vector<VariantStats> variants;

    bool operator==(const AuditResult&) const = default;
};

struct GridConfig {
    std::uint64_t seed = 7;
    int n_samples = 50;
    TruncationPolicy policy;
};

/// Deterministic per-record stream: seeded from (seed, FNV-1a of the id).
std::uint64_t record_seed(std::uint64_t seed, const std::string& id);

/// Draws up to 10x n_samples candidates and keeps those inside the domain.
/// Raises empty_grid when fewer than n_samples/2 survive.
std::vector<Sample> draw_samples(const IdentityRecord& record, const GridConfig& grid);

AuditResult audit(const IdentityRecord& record, const GridConfig& grid);

/// Audits records in parallel; results are sorted by id.
std::vector<AuditResult> audit_all(const std::vector<IdentityRecord>& records, const GridConfig& grid,
                                   int threads = 0);

/// One copy per n for records that use n, with "@n<n>" appended to the id.
std::vector<IdentityRecord> expand_orders(const std::vector<IdentityRecord>& records,
                                          const std::vector<int>& orders);

/// Records whose id matches the fnmatch-style glob.
std::vector<IdentityRecord> filter(const std::vector<IdentityRecord>& records, const std::string& glob);

// -- reports --------------------------------------------------------------

struct ReportMeta {
    std::uint64_t seed = 7;
    int n_samples = 50;
    real eps = 1e-12;
    std::vector<int> orders;

    bool operator==(const ReportMeta&) const = default;
};

std::string to_json(const ReportMeta& meta, const std::vector<AuditResult>& results);
/// Inverse of to_json.
std::vector<AuditResult> results_from_json(const std::string& text, ReportMeta* meta = nullptr);

/// Header: id,anchor,variant,max_rel_residual,median_rel_residual,
/// fitted_constant_re,fitted_constant_im,status,n_samples,seed
std::string to_csv(const std::vector<AuditResult>& results);

/// "<id> <STATUS>[ (<variant>)] max=<r>"
std::string summary_line(const AuditResult& r);

}  // namespace ellip::audit
