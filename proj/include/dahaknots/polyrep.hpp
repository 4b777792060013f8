#pragma once

#include "dahaknots/hword.hpp"
#include "dahaknots/laurent_x.hpp"

namespace dahaknots {

// Which polynomial representation acts. The sign flavor is the standard
// operator family with the Hecke parameter replaced by -t^{-1}; the
// idempotent and delta_t keep the original t.
struct RepFlavor {
    bool sign = false;
    RatQT t_eff;  // t for standard, -t^{-1} for sign

    static RepFlavor standard();
    static RepFlavor sign_rep();
};

// delta_t = t X^{-1} - t^{-1} X; generates the symmetric part of the
// sign representation, where T acts on it with eigenvalue t.
LaurentX delta_t();

// Action of one generator power on a Laurent polynomial:
//   X^k : multiplication;
//   T   : Demazure-Lusztig operator  t_eff*s + (t_eff - t_eff^{-1})/(X^2-1)*(s-1),
//         with T^{-1} = T + t_eff^{-1} - t_eff;
//   Y   : y_hat . s . T  (and Y^{-1} the inverse composite).
LaurentX act_letter(const Letter& l, const LaurentX& v, const RepFlavor& flavor);

// Word action, rightmost letter first; linear over terms.
LaurentX act(const HElement& a, const LaurentX& v, const RepFlavor& flavor);

// Right module action realized through the phi twist:
// right_act(v, a) = act(phi(a), v).
LaurentX right_act(const LaurentX& v, const HElement& a, const RepFlavor& flavor);

// The idempotent (T + t^{-1}) / (t + t^{-1}) with T taken in the given
// flavor; projects onto the symmetric part (standard) or the delta_t
// line and its multiples (sign).
LaurentX idempotent_project(const LaurentX& v, const RepFlavor& flavor);

// Substitutes X = point.
RatQT eval_at(const LaurentX& v, const RatQT& point);

// Evaluation on the symmetric sign representation: divides by delta_t,
// checks the quotient is symmetric, and evaluates it at the point where
// x = X + X^{-1} takes the value -t q^{-2} - t^{-1} q^2.
RatQT eval_sign(const LaurentX& v);

}  // namespace dahaknots
