#pragma once

#include <optional>
#include <string>

#include "dahaknots/invariants.hpp"
#include "dahaknots/joracle.hpp"

namespace dahaknots {

// Outcome of checking a two-variable value against the one-variable
// oracle at t -> -q^2.
struct VerifyReport {
    bool match = false;
    int sign = 0;                            // +1/-1 when matched
    std::optional<std::int64_t> monomial_k;  // set for the Newton route
    LaurentQ specialized;                    // lhs after substitution
    LaurentQ oracle;                         // rhs
    std::string diff;                        // term diff when mismatched
};

// Substitutes t -> -q^2 in f; the result must be Laurent in q alone.
LaurentQ specialize_to_jones(const RatQT& f);

// Core comparison: specializes the two-variable value and checks it
// against the oracle value, exactly up to sign (monomial = false) or up
// to sign and a power of q (monomial = true).
VerifyReport verify_values(const RatQT& two_variable, const LaurentQ& oracle, bool monomial);

// Topological route: the specialized iterated-cable value must equal the
// oracle exactly up to one overall sign.
VerifyReport verify_iterated(std::int64_t n, const CableSpec& spec,
                             const InvariantOptions& opts = {});

// Newton route: the specialized Newton-variant value must equal the
// oracle up to one overall sign and one power of q.
VerifyReport verify_cd(std::int64_t n, const CableSpec& spec,
                       const InvariantOptions& opts = {});

// Named self-checks runnable from the CLI; prints one line per check to
// stdout and returns true when all pass.
bool run_selftest();

}  // namespace dahaknots
