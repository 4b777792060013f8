#include "dahaknots/polyrep.hpp"

#include "dahaknots/errors.hpp"

namespace dahaknots {

RepFlavor RepFlavor::standard() { return RepFlavor{false, RatQT::t()}; }

RepFlavor RepFlavor::sign_rep() { return RepFlavor{true, -RatQT::t(-1)}; }

LaurentX delta_t() {
    LaurentX d;
    d.add_term(-1, RatQT::t());
    d.add_term(1, -RatQT::t(-1));
    return d;
}

namespace {

const LaurentX& x_squared_minus_one() {
    static const LaurentX v = [] {
        LaurentX p;
        p.add_term(2, RatQT::one());
        p.add_term(0, -RatQT::one());
        return p;
    }();
    return v;
}

LaurentX demazure_lusztig(const LaurentX& v, const RatQT& t_eff) {
    LaurentX sv = v.reversed();
    // (s-1)v is divisible by X^2-1 in the Laurent ring; if it is not,
    // the representation is broken.
    LaurentX quotient;
    try {
        quotient = exact_divide_X(sv - v, x_squared_minus_one());
    } catch (const inexact_division&) {
        throw internal_error("demazure_lusztig: (s-1)v not divisible by X^2-1");
    }
    return sv.scaled(t_eff) + quotient.scaled(t_eff - t_eff.inverse());
}

LaurentX demazure_lusztig_inverse(const LaurentX& v, const RatQT& t_eff) {
    return demazure_lusztig(v, t_eff) + v.scaled(t_eff.inverse() - t_eff);
}

}  // namespace

LaurentX act_letter(const Letter& l, const LaurentX& v, const RepFlavor& flavor) {
    const RatQT& te = flavor.t_eff;
    switch (l.gen) {
        case Gen::X:
            return v.shifted(l.exp);
        case Gen::T: {
            LaurentX r = v;
            if (l.exp > 0)
                for (std::int64_t i = 0; i < l.exp; ++i) r = demazure_lusztig(r, te);
            else
                for (std::int64_t i = 0; i < -l.exp; ++i) r = demazure_lusztig_inverse(r, te);
            return r;
        }
        case Gen::Y: {
            LaurentX r = v;
            if (l.exp > 0) {
                // Y = y_hat . s . T, rightmost factor first.
                for (std::int64_t i = 0; i < l.exp; ++i)
                    r = demazure_lusztig(r, te).reversed().q_dilated(-1);
            } else {
                // Y^{-1} = T^{-1} . s . y_hat^{-1}
                for (std::int64_t i = 0; i < -l.exp; ++i)
                    r = demazure_lusztig_inverse(r.q_dilated(1).reversed(), te);
            }
            return r;
        }
    }
    throw internal_error("act_letter: bad generator");
}

LaurentX act(const HElement& a, const LaurentX& v, const RepFlavor& flavor) {
    LaurentX out;
    for (const auto& [w, c] : a.terms()) {
        LaurentX cur = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_letter(*it, cur, flavor);
        out += cur.scaled(c);
    }
    return out;
}

LaurentX right_act(const LaurentX& v, const HElement& a, const RepFlavor& flavor) {
    return act(phi(a), v, flavor);
}

LaurentX idempotent_project(const LaurentX& v, const RepFlavor& flavor) {
    RatQT tinv = RatQT::t(-1);
    RatQT denom = RatQT::t() + tinv;
    LaurentX num = demazure_lusztig(v, flavor.t_eff) + v.scaled(tinv);
    return num.scaled(denom.inverse());
}

RatQT eval_at(const LaurentX& v, const RatQT& point) { return v.eval_at(point); }

RatQT eval_sign(const LaurentX& v) {
    if (v.is_zero()) return RatQT::zero();
    LaurentX quotient;
    try {
        quotient = exact_divide_X(v, delta_t());
    } catch (const inexact_division& e) {
        throw inexact_division(std::string("eval_sign: value lies outside C[x]*delta_t: ") +
                               e.what());
    }
    if (!quotient.is_symmetric())
        throw inexact_division("eval_sign: quotient by delta_t is not symmetric: " +
                               quotient.to_text());
    // g symmetric means g = f(X + X^{-1}); evaluating at X = -t q^{-2}
    // realizes f(-t q^{-2} - t^{-1} q^2).
    return quotient.eval_at(RatQT::monomial(BigRat(-1), -2, 1));
}

}  // namespace dahaknots
