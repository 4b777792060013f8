#include "dahaknots/laurent_x.hpp"

#include <sstream>

#include "dahaknots/errors.hpp"

namespace dahaknots {

LaurentX LaurentX::monomial(RatQT c, std::int64_t e) {
    LaurentX r;
    if (!c.is_zero()) r.terms_.emplace(e, std::move(c));
    return r;
}

void LaurentX::add_term(std::int64_t e, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatQT LaurentX::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatQT::zero() : it->second;
}

std::int64_t LaurentX::min_deg() const {
    if (is_zero()) throw internal_error("min_deg of zero");
    return terms_.begin()->first;
}

std::int64_t LaurentX::max_deg() const {
    if (is_zero()) throw internal_error("max_deg of zero");
    return terms_.rbegin()->first;
}

LaurentX LaurentX::operator-() const {
    LaurentX r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentX& LaurentX::operator+=(const LaurentX& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentX& LaurentX::operator-=(const LaurentX& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentX LaurentX::operator+(const LaurentX& o) const {
    LaurentX r = *this;
    r += o;
    return r;
}

LaurentX LaurentX::operator-(const LaurentX& o) const {
    LaurentX r = *this;
    r -= o;
    return r;
}

LaurentX LaurentX::operator*(const LaurentX& o) const {
    LaurentX r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentX LaurentX::scaled(const RatQT& c) const {
    LaurentX r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentX LaurentX::shifted(std::int64_t d) const {
    LaurentX r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + d, v);
    return r;
}

LaurentX LaurentX::reversed() const {
    LaurentX r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
    return r;
}

LaurentX LaurentX::q_dilated(int s) const {
    LaurentX r;
    for (const auto& [e, v] : terms_)
        r.terms_.emplace(e, v * RatQT::q(2 * static_cast<std::int64_t>(s) * e));
    return r;
}

RatQT LaurentX::eval_at(const RatQT& point) const {
    if (point.is_zero()) throw division_by_zero("eval_at: point must be invertible");
    RatQT acc = RatQT::zero();
    for (const auto& [e, c] : terms_) acc += c * point.pow(e);
    return acc;
}

std::string LaurentX::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_text() << ")";
        if (e != 0) {
            out << "*X";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentX exact_divide_X(const LaurentX& f, const LaurentX& g) {
    if (g.is_zero()) throw division_by_zero("exact_divide_X by zero");
    if (f.is_zero()) return LaurentX::zero();
    LaurentX rem = f;
    LaurentX quot;
    const std::int64_t gmax = g.max_deg();
    const RatQT glc = g.coeff(gmax);
    // Long division from the top; Laurent tails make the loop terminate
    // exactly when the remaining span drops below g's span.
    const std::int64_t gspan = g.max_deg() - g.min_deg();
    while (!rem.is_zero() && rem.max_deg() - rem.min_deg() >= gspan) {
        RatQT c = rem.coeff(rem.max_deg()) / glc;
        std::int64_t d = rem.max_deg() - gmax;
        quot.add_term(d, c);
        rem -= g.shifted(d).scaled(c);
    }
    if (!rem.is_zero())
        throw inexact_division("exact_divide_X: remainder " + rem.to_text());
    return quot;
}

LaurentQ LaurentQ::monomial(BigRat c, std::int64_t e) {
    LaurentQ r;
    if (c != 0) r.terms_.emplace(e, std::move(c));
    return r;
}

void LaurentQ::add_term(std::int64_t e, const BigRat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
    LaurentQ r = *this;
    r += o;
    return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
    LaurentQ r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
    LaurentQ r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentQ LaurentQ::shifted(std::int64_t d) const {
    LaurentQ r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + d, v);
    return r;
}

LaurentQ LaurentQ::reversed() const {
    LaurentQ r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
    return r;
}

std::int64_t LaurentQ::min_deg() const {
    if (is_zero()) throw internal_error("min_deg of zero");
    return terms_.begin()->first;
}

RatQT LaurentQ::to_ratqt() const {
    LaurentQT n;
    for (const auto& [e, c] : terms_) n.add_term(e, 0, c);
    return RatQT(n);
}

LaurentQ LaurentQ::from_ratqt(const RatQT& f) {
    if (!f.is_laurent())
        throw internal_error("from_ratqt: value has a nontrivial denominator: " + f.to_text());
    LaurentQ r;
    for (const auto& [e, c] : f.num().terms()) {
        if (e.t != 0)
            throw internal_error("from_ratqt: value still depends on t: " + f.to_text());
        r.add_term(e.q, c);
    }
    return r;
}

std::string LaurentQ::to_text() const { return to_ratqt().to_text(); }

std::optional<std::pair<int, std::int64_t>> monomial_ratio(const LaurentQ& f,
                                                           const LaurentQ& g) {
    if (g.is_zero()) throw division_by_zero("monomial_ratio: g must be nonzero");
    if (f.is_zero()) return std::nullopt;
    if (f.terms().size() != g.terms().size()) return std::nullopt;
    std::int64_t k = f.min_deg() - g.min_deg();
    const BigRat& cf = f.terms().begin()->second;
    const BigRat& cg = g.terms().begin()->second;
    int sign;
    if (cf == cg) sign = 1;
    else if (cf == -cg) sign = -1;
    else return std::nullopt;
    LaurentQ probe = g.shifted(k);
    if (sign < 0) probe = -probe;
    if (probe == f) return std::make_pair(sign, k);
    return std::nullopt;
}

}  // namespace dahaknots
