#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hallforge {

/// Thrown when an enumeration would exceed its configured size cap.
/// Check runners report the affected check as skipped.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration limits. HALL_FORGE_CAP_OVERRIDE (an integer) replaces every limit below.
namespace caps {

std::optional<int> override_value();

/// Largest total dimension of a representation whose subrepresentations are enumerated.
int subspace_total_dim(int p);
/// Largest endomorphism-space dimension for brute-force automorphism counting
/// and for cocycle-space enumeration.
int brute_force_dim(int p);
/// Largest partition size for Jordan-category Hall numbers.
int jordan_size(int p);
/// Largest endomorphism dimension for brute-force unit counting of nilpotent modules.
int jordan_end_dim(int p);
/// Largest variable count for Hall-Littlewood symmetrization.
int hall_littlewood_vars();

void require(bool within, const std::string& what);

} // namespace caps
} // namespace hallforge
