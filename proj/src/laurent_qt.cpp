#include "dahaknots/laurent_qt.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <vector>

#include "dahaknots/errors.hpp"

namespace dahaknots {

LaurentQT LaurentQT::monomial(BigRat c, std::int64_t qe, std::int64_t te) {
    LaurentQT r;
    if (c != 0) r.terms_[{qe, te}] = std::move(c);
    return r;
}

bool LaurentQT::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

bool LaurentQT::is_monomial(QTExp* e, BigRat* c) const {
    if (terms_.size() != 1) return false;
    if (e) *e = terms_.begin()->first;
    if (c) *c = terms_.begin()->second;
    return true;
}

void LaurentQT::add_term(std::int64_t qe, std::int64_t te, const BigRat& c) {
    if (c == 0) return;
    QTExp key{qe, te};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const BigRat* LaurentQT::coeff(std::int64_t qe, std::int64_t te) const {
    auto it = terms_.find(QTExp{qe, te});
    return it == terms_.end() ? nullptr : &it->second;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.q, e.t, c);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.q, e.t, -c);
    return *this;
}

LaurentQT LaurentQT::operator+(const LaurentQT& o) const {
    LaurentQT r = *this;
    r += o;
    return r;
}

LaurentQT LaurentQT::operator-(const LaurentQT& o) const {
    LaurentQT r = *this;
    r -= o;
    return r;
}

LaurentQT LaurentQT::operator*(const LaurentQT& o) const {
    QTExp e;
    BigRat c;
    if (o.is_monomial(&e, &c)) return scaled(c).shifted(e.q, e.t);
    if (is_monomial(&e, &c)) return o.scaled(c).shifted(e.q, e.t);
    LaurentQT r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1.q + e2.q, e1.t + e2.t, c1 * c2);
    return r;
}

LaurentQT LaurentQT::scaled(const BigRat& c) const {
    LaurentQT r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentQT LaurentQT::shifted(std::int64_t dq, std::int64_t dt) const {
    LaurentQT r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(QTExp{e.q + dq, e.t + dt}, v);
    return r;
}

LaurentQT LaurentQT::pow(std::uint64_t n) const {
    LaurentQT acc = one();
    LaurentQT base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

QTExp LaurentQT::min_exps() const {
    if (is_zero()) throw internal_error("min_exps of zero");
    QTExp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.q = std::min(m.q, e.q);
        m.t = std::min(m.t, e.t);
    }
    return m;
}

QTExp LaurentQT::max_exps() const {
    if (is_zero()) throw internal_error("max_exps of zero");
    QTExp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.q = std::max(m.q, e.q);
        m.t = std::max(m.t, e.t);
    }
    return m;
}

bool LaurentQT::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e.q < 0 || e.t < 0) return false;
    return true;
}

LaurentQT LaurentQT::substitute_t(TSubst rule) const {
    LaurentQT r;
    for (const auto& [e, c] : terms_) {
        switch (rule) {
            case TSubst::MinusQSquared:
                // t^b -> (-1)^b q^(2b)
                r.add_term(e.q + 2 * e.t, 0, (e.t % 2 != 0) ? BigRat(-c) : c);
                break;
            case TSubst::MinusQSquaredOverT:
                r.add_term(e.q + 2 * e.t, -e.t, (e.t % 2 != 0) ? BigRat(-c) : c);
                break;
            case TSubst::One:
                r.add_term(e.q, 0, c);
                break;
            case TSubst::MinusInverse:
                r.add_term(e.q, -e.t, (e.t % 2 != 0) ? BigRat(-c) : c);
                break;
        }
    }
    return r;
}

BigRat LaurentQT::glex_lead_coeff() const {
    if (is_zero()) return BigRat(0);
    const std::pair<const QTExp, BigRat>* best = nullptr;
    for (const auto& term : terms_) {
        if (!best) {
            best = &term;
            continue;
        }
        const QTExp& e = term.first;
        const QTExp& b = best->first;
        std::int64_t de = e.q + e.t, db = b.q + b.t;
        if (de > db || (de == db && e.q > b.q)) best = &term;
    }
    return best->second;
}

BigRat LaurentQT::rational_content() const {
    if (is_zero()) throw internal_error("rational_content of zero");
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRat content(num_gcd, den_lcm);
    content.canonicalize();
    if (glex_lead_coeff() < 0) content = -content;
    return content;
}

std::string LaurentQT::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRat mag = c;
        if (first) {
            if (c < 0) {
                out << "-";
                mag = -c;
            }
        } else {
            if (c < 0) {
                out << " - ";
                mag = -c;
            } else {
                out << " + ";
            }
        }
        first = false;
        bool has_vars = (e.q != 0 || e.t != 0);
        if (!has_vars || mag != 1) {
            out << mag.get_str();
            if (has_vars) out << "*";
        }
        if (e.q != 0) {
            out << "q";
            if (e.q != 1) out << "^" << e.q;
            if (e.t != 0) out << "*";
        }
        if (e.t != 0) {
            out << "t";
            if (e.t != 1) out << "^" << e.t;
        }
    }
    return out.str();
}

LaurentQT LaurentQT::derivative_t() const {
    LaurentQT r;
    for (const auto& [e, c] : terms_)
        if (e.t != 0) r.add_term(e.q, e.t - 1, c * BigRat(static_cast<long>(e.t)));
    return r;
}

// ---------------------------------------------------------------------------
// gcd machinery: dense recursive representation, polynomials in t whose
// coefficients are dense polynomials in q over Q.
// ---------------------------------------------------------------------------

namespace {

using QPoly = std::vector<BigRat>;   // q-polynomial, index = q-degree
using BiPoly = std::vector<QPoly>;   // index = t-degree

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool qp_zero(const QPoly& p) { return p.empty(); }

QPoly qp_scaled(const QPoly& p, const BigRat& c) {
    if (c == 0) return {};
    QPoly r = p;
    for (auto& x : r) x *= c;
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), BigRat(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qp_trim(r);
    return r;
}


QPoly qp_divexact(const QPoly& a, const QPoly& b) {
    if (qp_zero(a)) return {};
    QPoly rem = a;
    QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        BigRat c = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        qp_trim(rem);
    }
    if (!rem.empty()) throw inexact_division("qp_divexact: nonzero remainder");
    qp_trim(quot);
    return quot;
}

using ZPoly = std::vector<BigInt>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt zp_content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Clears denominators and the integer content; sign fixed to positive lead.
ZPoly qp_to_primitive_z(const QPoly& p) {
    BigInt lcm(1);
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        BigRat scaled = p[i] * BigRat(lcm);
        z[i] = scaled.get_num();
    }
    zp_trim(z);
    if (z.empty()) return z;
    BigInt cont = zp_content(z);
    if (z.back() < 0) cont = -cont;
    for (auto& c : z) c /= cont;
    return z;
}

// Fraction-free pseudo-remainder followed by content removal.
ZPoly zp_prem_primitive(ZPoly a, const ZPoly& b) {
    const BigInt& lcb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        BigInt lca = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lcb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lca * b[i];
        zp_trim(a);
    }
    if (a.empty()) return a;
    BigInt cont = zp_content(a);
    if (a.back() < 0) cont = -cont;
    for (auto& c : a) c /= cont;
    return a;
}

// Primitive gcd over Z[q], returned with rational coefficients
// (integer-primitive, positive leading coefficient).
QPoly qp_gcd(const QPoly& qa, const QPoly& qb) {
    ZPoly a = qp_to_primitive_z(qa), b = qp_to_primitive_z(qb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zp_prem_primitive(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    QPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = BigRat(a[i]);
    return out;
}

void bp_trim(BiPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

bool bp_zero(const BiPoly& p) { return p.empty(); }

// Content in Q[q]: monic gcd of all t-coefficients.
QPoly bp_content(const BiPoly& p) {
    QPoly g;
    for (const auto& c : p)
        if (!c.empty()) g = qp_gcd(g, c);
    return g;
}

BiPoly bp_div_qpoly(const BiPoly& p, const QPoly& d) {
    BiPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].empty()) r[i] = qp_divexact(p[i], d);
    bp_trim(r);
    return r;
}

BiPoly bp_mul_qpoly(const BiPoly& p, const QPoly& c) {
    BiPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = qp_mul(p[i], c);
    bp_trim(r);
    return r;
}

BiPoly bp_sub(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = qp_sub(r[i], b[i]);
    bp_trim(r);
    return r;
}

// Pseudo-remainder of a by b in (Q[q])[t].
BiPoly bp_prem(BiPoly a, const BiPoly& b) {
    if (bp_zero(b)) throw division_by_zero("bp_prem by zero");
    const QPoly& lcb = b.back();
    std::int64_t e = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(b.size()) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        QPoly lca = a.back();
        std::size_t shift = a.size() - b.size();
        // a <- lcb*a - lca*t^shift*b
        BiPoly scaled_b(shift);
        for (const auto& c : b) scaled_b.push_back(qp_mul(c, lca));
        a = bp_sub(bp_mul_qpoly(a, lcb), scaled_b);
        --e;
    }
    for (; e > 0; --e) a = bp_mul_qpoly(a, lcb);
    return a;
}

// Rational scalar content across all coefficients: gcd of numerators
// over lcm of denominators.
BigRat bp_rational_content(const BiPoly& p) {
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& c : p)
        for (const auto& x : c) {
            if (x == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        }
    if (num_gcd == 0) return BigRat(1);
    BigRat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

// Full primitive part over Z[q]: strips the polynomial gcd of the
// coefficients and the rational scalar content. Without the scalar part
// the remainder sequence blows up exponentially.
BiPoly bp_primitive(const BiPoly& p) {
    if (bp_zero(p)) return p;
    BiPoly r = bp_div_qpoly(p, bp_content(p));
    BigRat c = bp_rational_content(r);
    if (c != 1) {
        BigRat inv = BigRat(1) / c;
        for (auto& qc : r)
            for (auto& x : qc) x *= inv;
    }
    return r;
}

BiPoly to_bipoly(const LaurentQT& f) {
    BiPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e.q < 0 || e.t < 0) throw internal_error("to_bipoly: negative exponent");
        std::size_t td = static_cast<std::size_t>(e.t), qd = static_cast<std::size_t>(e.q);
        if (r.size() <= td) r.resize(td + 1);
        if (r[td].size() <= qd) r[td].resize(qd + 1, BigRat(0));
        r[td][qd] = c;
    }
    for (auto& c : r) qp_trim(c);
    bp_trim(r);
    return r;
}

LaurentQT from_bipoly(const BiPoly& p) {
    LaurentQT r;
    for (std::size_t td = 0; td < p.size(); ++td)
        for (std::size_t qd = 0; qd < p[td].size(); ++qd)
            if (p[td][qd] != 0)
                r.add_term(static_cast<std::int64_t>(qd), static_cast<std::int64_t>(td),
                           p[td][qd]);
    return r;
}

LaurentQT normalized_poly(const LaurentQT& p) {
    if (p.is_zero()) return p;
    return p.scaled(BigRat(1) / p.rational_content());
}

}  // namespace

LaurentQT gcd_qt(const LaurentQT& a, const LaurentQT& b) {
    if (!a.is_zero() && !a.is_polynomial())
        throw internal_error("gcd_qt: input is not a polynomial");
    if (!b.is_zero() && !b.is_polynomial())
        throw internal_error("gcd_qt: input is not a polynomial");
    if (a.is_zero() && b.is_zero()) return LaurentQT::zero();
    if (a.is_zero()) return normalized_poly(b);
    if (b.is_zero()) return normalized_poly(a);
    if (a.is_one() || b.is_one()) return LaurentQT::one();
    if (a == b) return normalized_poly(a);
    // A monomial's gcd with anything is the shared monomial part.
    if (a.is_monomial() || b.is_monomial()) {
        QTExp ma = a.min_exps(), mb = b.min_exps();
        return LaurentQT::monomial(BigRat(1), std::min(ma.q, mb.q), std::min(ma.t, mb.t));
    }

    BiPoly A = to_bipoly(a), B = to_bipoly(b);
    if (A.size() < B.size()) std::swap(A, B);
    QPoly ca = bp_content(A), cb = bp_content(B);
    QPoly cg = qp_gcd(ca, cb);
    A = bp_primitive(A);
    B = bp_primitive(B);
    // Primitive remainder sequence: the pseudo-remainder is reduced to
    // its full primitive part (polynomial and scalar content) every
    // round, which keeps coefficient growth polynomial.
    while (!bp_zero(B)) {
        BiPoly r = bp_prem(A, B);
        A = std::move(B);
        B = bp_primitive(r);
    }
    return normalized_poly(from_bipoly(bp_mul_qpoly(A, cg)));
}

LaurentQT divexact_qt(const LaurentQT& f, const LaurentQT& g) {
    if (g.is_zero()) throw division_by_zero("divexact_qt by zero");
    if (f.is_zero()) return LaurentQT::zero();
    BiPoly A = to_bipoly(f);
    BiPoly B = to_bipoly(g);
    BiPoly quot(A.size() >= B.size() ? A.size() - B.size() + 1 : 0);
    while (!A.empty() && A.size() >= B.size()) {
        // Top t-coefficients must divide exactly at every step, else g | f fails.
        QPoly c = qp_divexact(A.back(), B.back());
        std::size_t shift = A.size() - B.size();
        quot[shift] = c;
        BiPoly scaled_b(shift);
        for (const auto& bc : B) scaled_b.push_back(qp_mul(bc, c));
        A = bp_sub(A, scaled_b);
    }
    if (!bp_zero(A)) throw inexact_division("divexact_qt: remainder " + from_bipoly(A).to_text());
    bp_trim(quot);
    return from_bipoly(quot);
}

LaurentQT resultant_t(const LaurentQT& a, const LaurentQT& b) {
    if (a.is_zero() || b.is_zero()) return LaurentQT::zero();
    // Sylvester determinant over Q[q], evaluated by fraction-free
    // (Bareiss) elimination. Sizes here are small; no PRS needed.
    BiPoly F = to_bipoly(a), G = to_bipoly(b);
    std::size_t m = F.size() - 1, n = G.size() - 1;
    if (m == 0 && n == 0) return LaurentQT::one();
    std::size_t dim = m + n;
    std::vector<std::vector<QPoly>> syl(dim, std::vector<QPoly>(dim));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) syl[i][i + j] = F[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) syl[n + i][i + j] = G[n - j];
    // Fraction-free Gaussian elimination (Bareiss) over Q[q].
    QPoly denom{BigRat(1)};
    BigRat sign(1);
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t pivot = k;
        while (pivot < dim && qp_zero(syl[pivot][k])) ++pivot;
        if (pivot == dim) return LaurentQT::zero();
        if (pivot != k) {
            std::swap(syl[pivot], syl[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                QPoly num = qp_sub(qp_mul(syl[i][j], syl[k][k]), qp_mul(syl[i][k], syl[k][j]));
                syl[i][j] = qp_divexact(num, denom);
            }
            syl[i][k] = {};
        }
        denom = syl[k][k];
    }
    QPoly det = qp_scaled(syl[dim - 1][dim - 1], sign);
    BiPoly out{det};
    return from_bipoly(out);
}

}  // namespace dahaknots
