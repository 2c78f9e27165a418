// Command-line front end: eval, audit, convergence.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ellip/numerics.hpp"

namespace ellip::cli {

enum ExitCode { ok = 0, audit_failed = 1, usage = 2, domain = 3, empty_grid = 4 };

/// `a`, `ai`, `a+bi`, `a-bi` (also `i`, `-i`); no spaces.
std::optional<cplx> parse_complex(const std::string& text);

/// "%.15g%+.15gi"
std::string format_complex(cplx v);

/// Names accepted by eval and convergence. "wp.product" is e1 plus the
/// cotangent product for wp - e1; the others are theta-backed.
const std::vector<std::string>& function_names();

/// Value of a named function; z is ignored by the tau-only names.
cplx evaluate(const std::string& name, cplx z, cplx tau, const TruncationPolicy& policy);

/// Term budget reported next to an evaluated value.
int reported_terms(const std::string& name, cplx z, cplx tau, const TruncationPolicy& policy);

/// Full command line (argv[0] included). Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellip::cli
