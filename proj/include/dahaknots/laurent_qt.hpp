#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "dahaknots/rational.hpp"

namespace dahaknots {

struct QTExp {
    std::int64_t q = 0;
    std::int64_t t = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Substitution rules for the parameter t.
enum class TSubst {
    MinusQSquared,       // t -> -q^2
    MinusQSquaredOverT,  // t -> -q^2 t^-1
    One,                 // t -> 1
    MinusInverse,        // t -> -t^-1
};

// Sparse Laurent polynomial in q, t with rational coefficients.
// Invariant: no stored coefficient is zero. Term order is ascending
// (q-exponent, then t-exponent), which fixes all serialized output.
class LaurentQT {
  public:
    using TermMap = std::map<QTExp, BigRat>;

    LaurentQT() = default;

    static LaurentQT zero() { return LaurentQT(); }
    static LaurentQT one() { return monomial(BigRat(1), 0, 0); }
    static LaurentQT monomial(BigRat c, std::int64_t qe, std::int64_t te);
    static LaurentQT q(std::int64_t e = 1) { return monomial(BigRat(1), e, 0); }
    static LaurentQT t(std::int64_t e = 1) { return monomial(BigRat(1), 0, e); }
    static LaurentQT constant(const BigRat& c) { return monomial(c, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Single term?  If so, *exponents/*coeff receive it.
    bool is_monomial(QTExp* e = nullptr, BigRat* c = nullptr) const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(std::int64_t qe, std::int64_t te, const BigRat& c);
    const BigRat* coeff(std::int64_t qe, std::int64_t te) const;

    LaurentQT operator-() const;
    LaurentQT operator+(const LaurentQT& o) const;
    LaurentQT operator-(const LaurentQT& o) const;
    LaurentQT operator*(const LaurentQT& o) const;
    LaurentQT& operator+=(const LaurentQT& o);
    LaurentQT& operator-=(const LaurentQT& o);
    LaurentQT& operator*=(const LaurentQT& o) { *this = *this * o; return *this; }
    bool operator==(const LaurentQT& o) const { return terms_ == o.terms_; }

    LaurentQT scaled(const BigRat& c) const;
    LaurentQT shifted(std::int64_t dq, std::int64_t dt) const;
    LaurentQT pow(std::uint64_t n) const;

    // Componentwise minimum/maximum of exponents over all terms.
    // Only valid on nonzero values.
    QTExp min_exps() const;
    QTExp max_exps() const;

    bool is_polynomial() const;  // all exponents >= 0

    // Replaces t by the rule's image; all four rules send Laurent
    // polynomials to Laurent polynomials.
    LaurentQT substitute_t(TSubst rule) const;

    // Leading coefficient under graded lex order (total degree, then
    // q-exponent). Zero for the zero polynomial.
    BigRat glex_lead_coeff() const;

    // The positive rational c such that (*this)/c has coprime integer
    // coefficients; sign chosen so the glex leading coefficient of the
    // result is positive. Only valid on nonzero values.
    BigRat rational_content() const;

    std::string to_text() const;

    LaurentQT derivative_t() const;

  private:
    TermMap terms_;
};

// gcd over Q[q,t] by a primitive polynomial-remainder sequence in
// Q[q][t]. Inputs must be polynomials (no negative exponents); the
// result has coprime integer coefficients and positive glex leading
// coefficient. gcd(0,0) = 0.
LaurentQT gcd_qt(const LaurentQT& a, const LaurentQT& b);

// Exact division of polynomials over Q[q,t]; throws inexact_division
// if g does not divide f.
LaurentQT divexact_qt(const LaurentQT& f, const LaurentQT& g);

// Resultant of a and b with respect to t (both polynomials, viewed in
// Q[q][t]); used as an independent coprimality certificate.
LaurentQT resultant_t(const LaurentQT& a, const LaurentQT& b);

}  // namespace dahaknots
