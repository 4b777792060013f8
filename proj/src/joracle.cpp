#include "dahaknots/joracle.hpp"

#include "dahaknots/errors.hpp"

namespace dahaknots {

LaurentQ unknot_jones(std::int64_t m) {
    if (m == 0) return LaurentQ::zero();
    if (m < 0) return -unknot_jones(-m);
    LaurentQ r;
    BigRat sign((m - 1) % 2 != 0 ? -1 : 1);
    // (q^{2m} - q^{-2m})/(q^2 - q^{-2}) = q^{2(m-1)} + q^{2(m-3)} + ...
    for (std::int64_t d = -(m - 1); d <= m - 1; d += 2) r.add_term(2 * d, sign);
    return r;
}

LaurentQ cable_step(std::int64_t r, std::int64_t s,
                    const std::function<LaurentQ(std::int64_t)>& inner, std::int64_t n) {
    if (n < 1) throw usage_error("cable_step: n must be >= 1");
    LaurentQ sum;
    bool have_parity = false;
    std::int64_t parity = 0;
    for (std::int64_t u = -(n - 1); u <= n - 1; u += 2) {
        std::int64_t color = s * u + 1;
        std::int64_t par = ((color % 2) + 2) % 2;
        if (!have_parity) {
            parity = par;
            have_parity = true;
        } else if (par != parity) {
            throw internal_error("cable_step: inner colors changed parity");
        }
        // exponent -4 r j (s j + 1) with u = 2j
        std::int64_t e = -(r * s * u * u + 2 * r * u);
        sum += inner(color).shifted(e);
    }
    std::int64_t pre = r * s * (n * n - 1);
    LaurentQ out = sum.shifted(pre);
    if (pre % 2 != 0) out = -out;
    return out;
}

ColorTable::ColorTable(std::vector<std::pair<std::int64_t, std::int64_t>> pairs)
    : pairs_(std::move(pairs)), memo_(pairs_.size() + 1) {}

LaurentQ ColorTable::jones(std::size_t depth, std::int64_t color) {
    if (color == 0) return LaurentQ::zero();
    if (color < 0) return -jones(depth, -color);
    auto& level = memo_[depth];
    auto it = level.find(color);
    if (it != level.end()) return it->second;
    LaurentQ value;
    if (depth == 0) {
        value = unknot_jones(color);
    } else {
        auto [r, s] = pairs_[depth - 1];
        value = cable_step(
            r, s, [this, depth](std::int64_t m) { return jones(depth - 1, m); }, color);
    }
    level.emplace(color, value);
    return value;
}

LaurentQ oracle_jones(std::int64_t n, const CableSpec& spec) {
    if (n < 1) throw usage_error("oracle_jones: n must be >= 1");
    spec.validate();
    auto pairs = (spec.convention == Convention::Newton) ? newton_to_topological(spec)
                                                         : spec.pairs;
    ColorTable table(pairs);
    return table.jones(pairs.size(), n);
}

}  // namespace dahaknots
