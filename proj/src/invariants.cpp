#include "dahaknots/invariants.hpp"

#include <numeric>
#include <sstream>

#include "dahaknots/errors.hpp"

namespace dahaknots {

void CableSpec::validate() const {
    if (pairs.empty()) throw usage_error("cable spec: empty pair list");
    for (const auto& [r, s] : pairs) {
        if (std::gcd(r, s) != 1)
            throw usage_error("cable spec: gcd(" + std::to_string(r) + "," +
                              std::to_string(s) + ") != 1");
    }
}

std::string CableSpec::to_text() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, s] : pairs) {
        if (!first) out << ";";
        first = false;
        out << r << "," << s;
    }
    out << (convention == Convention::Topological ? " (topological)" : " (newton)");
    return out.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> newton_to_topological(
    const CableSpec& spec) {
    spec.validate();
    // Pairs are (meridian, longitude) windings; the longitude entry is the
    // strand multiplicity. Twist coordinates accumulate as
    //   a_1 = m_1,  a_{i+1} = m_{i+1} + l_i l_{i+1} a_i,
    // and the cabling pairs are (a_i, l_i).
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(spec.pairs.size());
    std::int64_t prev_a = 0;
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        auto [m, l] = spec.pairs[i];
        std::int64_t a = (i == 0) ? m : m + spec.pairs[i - 1].second * l * prev_a;
        out.emplace_back(a, l);
        prev_a = a;
    }
    return out;
}

namespace {

// m_k -> Y^k + Y^{-k}; the unit basis element maps to the empty word.
HElement sympoly_to_ywords(const SymPoly& f) {
    HElement out;
    for (const auto& [k, c] : f.coeffs()) {
        if (k == 0) {
            out += HElement::unit().scaled(c);
        } else {
            out += (HElement::generator(Gen::Y, k) + HElement::generator(Gen::Y, -k)).scaled(c);
        }
    }
    return out;
}

LaurentX assert_symmetric(LaurentX v, const char* where) {
    if (!v.is_symmetric())
        throw internal_error(std::string(where) + ": value left the symmetric subspace: " +
                             v.to_text());
    return v;
}

}  // namespace

RatQT cherednik_torus(std::int64_t n, std::int64_t r, std::int64_t s,
                      const InvariantOptions& opts) {
    if (n < 1) throw usage_error("cherednik_torus: n must be >= 1");
    HElement w = gamma_apply(r, s, sympoly_to_ywords(macdonald_poly(n - 1)),
                             opts.extra_tau_minus);
    LaurentX v = assert_symmetric(act(w, LaurentX::one(), RepFlavor::standard()),
                                  "cherednik_torus");
    return RatQT::signed_q_power(r * s * (n * n - 1)) * eval_at(v, RatQT::t());
}

RatQT sign_torus(std::int64_t n, std::int64_t r, std::int64_t s,
                 const InvariantOptions& opts) {
    if (n < 1) throw usage_error("sign_torus: n must be >= 1");
    HElement w = gamma_apply(r, s, sympoly_to_ywords(sign_macdonald_poly(n - 1)),
                             opts.extra_tau_minus);
    LaurentX v = act(w, delta_t(), RepFlavor::sign_rep());
    return RatQT::signed_q_power(r * s * (n * n - 1)) * eval_sign(v);
}

RatQT iterated_topological(std::int64_t n, const CableSpec& spec,
                           const InvariantOptions& opts) {
    if (n < 1) throw usage_error("iterated_topological: n must be >= 1");
    spec.validate();
    auto pairs = (spec.convention == Convention::Newton) ? newton_to_topological(spec)
                                                         : spec.pairs;
    SymPoly g = macdonald_poly(n - 1);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [r, s] = *it;
        SymPoly next;
        for (const auto& [k, c] : expand_in_macdonald(g)) {
            HElement w =
                gamma_apply(r, s, sympoly_to_ywords(macdonald_poly(k)), opts.extra_tau_minus);
            LaurentX u = assert_symmetric(
                right_act(LaurentX::one(), w, RepFlavor::standard()), "iterated_topological");
            next += SymPoly::from_laurent_x(u).scaled(
                c * RatQT::signed_q_power(r * s * k * (k + 2)));
        }
        g = next;
    }
    return eval_at(g.to_laurent_x(), RatQT::t());
}

RatQT cd_newton(std::int64_t n, const CableSpec& spec, const InvariantOptions& opts) {
    if (n < 1) throw usage_error("cd_newton: n must be >= 1");
    spec.validate();
    SymPoly g = macdonald_poly(n - 1);
    for (auto it = spec.pairs.rbegin(); it != spec.pairs.rend(); ++it) {
        auto [r, s] = *it;
        HElement w = gamma_apply(r, s, sympoly_to_ywords(g), opts.extra_tau_minus);
        LaurentX u = assert_symmetric(right_act(LaurentX::one(), w, RepFlavor::standard()),
                                      "cd_newton");
        g = SymPoly::from_laurent_x(u);
    }
    return eval_at(g.to_laurent_x(), RatQT::t());
}

}  // namespace dahaknots
