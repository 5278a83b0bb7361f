#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hyperzeta {

struct CheckOutcome {
    enum class Status { pass, fail, skip };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

struct VerifyOptions {
    /// Skip the quadrature-heavy checks; golden tables still run.
    bool fast = false;
    /// Golden file to check against instead of the built-in copy.
    std::optional<std::filesystem::path> golden_path;
};

/// Cross-module self-check: golden tables, the conformal-scalar
/// specialization, Bernoulli sign pattern, tanh series against quadrature,
/// Bessel-form Mellin transform against t-quadrature, and s -> 0 scaling of
/// the hyperbolic zeta contribution.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options);

}  // namespace hyperzeta
