// The registry of audited identities.
#pragma once

#include "ellip/audit.hpp"

namespace ellip::audit {

/// Every registered display, ids unique. Records that depend on the
/// transformation order are returned once, unexpanded (see expand_orders).
std::vector<IdentityRecord> register_catalog();

/// register_catalog() expanded over the given orders.
std::vector<IdentityRecord> catalog(const std::vector<int>& orders = {3, 5});

/// Record by id (expanded ids such as "thm4-1.e1@n3" included); raises
/// invalid_argument when absent.
IdentityRecord lookup(const std::string& id, const std::vector<int>& orders = {3, 5});

/// Deliberately corrupted copies of true identities: a doubled prefactor, a
/// flipped sign, a wrong index set, an extra pi and a wrong half-period.
std::vector<IdentityRecord> planted_faults();

/// Fixed evaluation point used for smoke runs: tau = 1.1i, z = 0.31 + 0.17i, n = 3.
Sample smoke_sample();

}  // namespace ellip::audit
