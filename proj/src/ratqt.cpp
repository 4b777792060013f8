#include "dahaknots/ratqt.hpp"

#include <sstream>

#include "dahaknots/errors.hpp"

namespace dahaknots {

void RatQT::canonicalize() {
    if (den_.is_zero()) throw division_by_zero("RatQT: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentQT::one();
        return;
    }
    // Move the denominator's Laurent monomial content into num.
    QTExp dmin = den_.min_exps();
    if (dmin.q != 0 || dmin.t != 0) {
        den_ = den_.shifted(-dmin.q, -dmin.t);
        num_ = num_.shifted(-dmin.q, -dmin.t);
    }
    if (!den_.is_one()) {
        // Reduce the polynomial parts; num's own monomial content is
        // restored afterwards.
        QTExp nmin = num_.min_exps();
        LaurentQT num0 = num_.shifted(-nmin.q, -nmin.t);
        LaurentQT g = gcd_qt(num0, den_);
        if (!g.is_one()) {
            num0 = divexact_qt(num0, g);
            den_ = divexact_qt(den_, g);
        }
        num_ = num0.shifted(nmin.q, nmin.t);
    }
    // Scalar normalization: den gets coprime integer coefficients and a
    // positive graded-lex leading coefficient.
    BigRat c = den_.rational_content();
    if (c != 1) {
        BigRat inv = BigRat(1) / c;
        den_ = den_.scaled(inv);
        num_ = num_.scaled(inv);
    }
}

RatQT RatQT::operator-() const {
    RatQT r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatQT RatQT::operator+(const RatQT& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RatQT(num_ + o.num_);
    if (den_ == o.den_) return RatQT(num_ + o.num_, den_);
    LaurentQT g = gcd_qt(den_, o.den_);
    if (g.is_one()) {
        // Coprime denominators: the sum is already reduced, and a
        // product of canonical denominators is canonical.
        RatQT out;
        out.num_ = num_ * o.den_ + o.num_ * den_;
        if (out.num_.is_zero()) return zero();
        out.den_ = den_ * o.den_;
        return out;
    }
    LaurentQT d1p = divexact_qt(den_, g);
    LaurentQT d2p = divexact_qt(o.den_, g);
    LaurentQT num_sum = num_ * d2p + o.num_ * d1p;
    if (num_sum.is_zero()) return zero();
    // Only g can share a factor with the new numerator.
    QTExp nm = num_sum.min_exps();
    LaurentQT poly = num_sum.shifted(-nm.q, -nm.t);
    LaurentQT h = gcd_qt(poly, g);
    if (!h.is_one()) {
        poly = divexact_qt(poly, h);
        g = divexact_qt(g, h);
    }
    RatQT out;
    out.num_ = poly.shifted(nm.q, nm.t);
    out.den_ = g * d1p * d2p;
    BigRat c = out.den_.rational_content();
    if (c != 1) {
        BigRat inv = BigRat(1) / c;
        out.den_ = out.den_.scaled(inv);
        out.num_ = out.num_.scaled(inv);
    }
    return out;
}

RatQT RatQT::operator-(const RatQT& o) const { return *this + (-o); }

RatQT RatQT::operator*(const RatQT& o) const {
    if (is_zero() || o.is_zero()) return zero();
    if (den_.is_one() && o.den_.is_one()) return RatQT(num_ * o.num_);
    // Cross-reduce first; the two small gcds are much cheaper than one
    // gcd of the full products.
    RatQT lhs(num_, o.den_);
    RatQT rhs(o.num_, den_);
    RatQT out;
    out.num_ = lhs.num_ * rhs.num_;
    out.den_ = lhs.den_ * rhs.den_;
    if (out.den_.glex_lead_coeff() < 0) {
        out.num_ = -out.num_;
        out.den_ = -out.den_;
    }
    return out;
}

RatQT RatQT::operator/(const RatQT& o) const {
    if (o.is_zero()) throw division_by_zero("RatQT: division by zero");
    if (is_zero()) return zero();
    return RatQT(num_ * o.den_, den_ * o.num_);
}

RatQT RatQT::inverse() const {
    if (is_zero()) throw division_by_zero("RatQT: inverse of zero");
    return RatQT(den_, num_);
}

RatQT RatQT::pow(std::int64_t e) const {
    if (e == 0) return one();
    const RatQT base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    RatQT acc = one();
    RatQT b = base;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

std::string RatQT::to_text() const {
    if (den_.is_one()) return num_.to_text();
    std::ostringstream out;
    bool paren_num = num_.size() > 1;
    bool paren_den = den_.size() > 1;
    if (paren_num) out << "(" << num_.to_text() << ")";
    else out << num_.to_text();
    out << " / ";
    if (paren_den) out << "(" << den_.to_text() << ")";
    else out << den_.to_text();
    return out.str();
}

namespace {
void append_terms_json(std::ostringstream& out, const LaurentQT& p) {
    out << "[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ",";
        first = false;
        out << "[" << e.q << "," << e.t << ",\"" << c.get_str() << "\"]";
    }
    out << "]";
}
}  // namespace

std::string RatQT::to_json() const {
    std::ostringstream out;
    out << "{\"num\":";
    append_terms_json(out, num_);
    out << ",\"den\":";
    append_terms_json(out, den_);
    out << "}";
    return out.str();
}

RatQT specialize_t(const RatQT& f, TSubst rule) {
    LaurentQT den = f.den().substitute_t(rule);
    if (den.is_zero())
        throw pole_error("specialize_t: substitution has a pole (denominator " +
                         f.den().to_text() + " vanishes)");
    return RatQT(f.num().substitute_t(rule), den);
}

}  // namespace dahaknots
