#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dahaknots/invariants.hpp"
#include "dahaknots/laurent_x.hpp"

namespace dahaknots {

// Colored Jones polynomial of the unknot,
//   (-1)^{m-1} (q^{2m} - q^{-2m}) / (q^2 - q^{-2}),
// realized division-free as a signed geometric sum; extends to all
// integers with J_0 = 0 and J_{-m} = -J_m.
LaurentQ unknot_jones(std::int64_t m);

// One cabling stage: given the colored Jones values of the companion
// knot, produces the color-n value of its (r,s) cable via
//   (-q)^{rs(n^2-1)} * sum over u = 2j in {-(n-1), -(n-3), ..., n-1} of
//   q^{-(r s u^2 + 2 r u)} * inner(s u + 1).
// All inner colors in one stage share a parity (asserted).
LaurentQ cable_step(std::int64_t r, std::int64_t s,
                    const std::function<LaurentQ(std::int64_t)>& inner, std::int64_t n);

// Colored Jones polynomial of the iterated cable described by spec.
// Newton-convention specs are first converted to cabling pairs; depth
// zero is the unknot. Colors are memoized per depth.
LaurentQ oracle_jones(std::int64_t n, const CableSpec& spec);

// Memo table for one oracle run; entry (0, m) is the unknot value.
class ColorTable {
  public:
    explicit ColorTable(std::vector<std::pair<std::int64_t, std::int64_t>> pairs);

    LaurentQ jones(std::size_t depth, std::int64_t color);

  private:
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs_;
    std::vector<std::map<std::int64_t, LaurentQ>> memo_;
};

}  // namespace dahaknots
