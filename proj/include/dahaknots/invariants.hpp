#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dahaknots/macdonald.hpp"

namespace dahaknots {

enum class Convention { Topological, Newton };

// A sequence of coprime integer pairs describing an iterated cable of
// the unknot, plus the convention the pairs are written in.
struct CableSpec {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    Convention convention = Convention::Topological;

    void validate() const;  // nonempty; every pair coprime
    std::string to_text() const;
};

enum class Family { Cherednik, Sign, Iterated, CD };

struct InvariantResult {
    RatQT value;
    Family family;
    std::int64_t n = 0;
    CableSpec spec;
};

// Options for the modular-group word choices; extra stabilizer
// generators must not change any value.
struct InvariantOptions {
    int extra_tau_minus = 0;
};

// Converts Newton pairs (r_i, s_i) to the cabling pairs (r_i, a_i) with
// a_1 = s_1 and a_{i+1} = s_{i+1} + r_i r_{i+1} a_i.
std::vector<std::pair<std::int64_t, std::int64_t>> newton_to_topological(
    const CableSpec& spec);

// Two-variable torus-knot polynomial from the standard polynomial
// representation: (-q)^{rs(n^2-1)} times the evaluation of
// gamma_{r,s}(p_{n-1}(Y + Y^{-1})) acting on 1.
RatQT cherednik_torus(std::int64_t n, std::int64_t r, std::int64_t s,
                      const InvariantOptions& opts = {});

// Same construction through the sign representation acting on delta_t,
// built from the sign Macdonald polynomials.
RatQT sign_torus(std::int64_t n, std::int64_t r, std::int64_t s,
                 const InvariantOptions& opts = {});

// Iterated-cable polynomial: stages run from the innermost pair outward;
// each stage expands in the Macdonald basis, applies
// (-q)^{r s k(k+2)} gamma_{r,s} to each p_k through the right module,
// and the final value evaluates the module variable at t.
RatQT iterated_topological(std::int64_t n, const CableSpec& spec,
                           const InvariantOptions& opts = {});

// Newton-pair variant: no prefactors, each stage transports the whole
// symmetric element through gamma_{r_i,s_i}.
RatQT cd_newton(std::int64_t n, const CableSpec& spec,
                const InvariantOptions& opts = {});

}  // namespace dahaknots
