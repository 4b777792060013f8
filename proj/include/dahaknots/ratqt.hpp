#pragma once

#include <string>

#include "dahaknots/laurent_qt.hpp"

namespace dahaknots {

// Exact rational function in q, t over Q, stored as a canonical fraction
// num/den of Laurent polynomials. Canonical form:
//   - den is a polynomial (minimal q- and t-exponents zero) with coprime
//     integer coefficients and positive graded-lex leading coefficient;
//   - num and den share no polynomial factor; Laurent monomial content
//     stays in num.
// Equal values therefore have identical representations.
class RatQT {
  public:
    RatQT() : num_(LaurentQT::zero()), den_(LaurentQT::one()) {}

    RatQT(const LaurentQT& num, const LaurentQT& den) : num_(num), den_(den) {
        canonicalize();
    }

    // Laurent polynomial embedded with denominator one (already canonical).
    explicit RatQT(LaurentQT num) : num_(std::move(num)), den_(LaurentQT::one()) {}

    static RatQT zero() { return RatQT(); }
    static RatQT one() { return RatQT(LaurentQT::one()); }
    static RatQT constant(const BigRat& c) { return RatQT(LaurentQT::constant(c)); }
    static RatQT from_int(long v) { return constant(BigRat(v)); }
    static RatQT q(std::int64_t e = 1) { return RatQT(LaurentQT::q(e)); }
    static RatQT t(std::int64_t e = 1) { return RatQT(LaurentQT::t(e)); }
    static RatQT monomial(BigRat c, std::int64_t qe, std::int64_t te) {
        return RatQT(LaurentQT::monomial(std::move(c), qe, te));
    }
    // (-q)^e as a signed monomial.
    static RatQT signed_q_power(std::int64_t e) {
        return monomial(BigRat((e % 2 != 0) ? -1 : 1), e, 0);
    }

    const LaurentQT& num() const { return num_; }
    const LaurentQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    bool operator==(const RatQT& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatQT operator-() const;
    RatQT operator+(const RatQT& o) const;
    RatQT operator-(const RatQT& o) const;
    RatQT operator*(const RatQT& o) const;
    RatQT operator/(const RatQT& o) const;
    RatQT& operator+=(const RatQT& o) { *this = *this + o; return *this; }
    RatQT& operator-=(const RatQT& o) { *this = *this - o; return *this; }
    RatQT& operator*=(const RatQT& o) { *this = *this * o; return *this; }
    RatQT& operator/=(const RatQT& o) { *this = *this / o; return *this; }

    RatQT inverse() const;
    RatQT pow(std::int64_t e) const;

    std::string to_text() const;
    std::string to_json() const;

  private:
    void canonicalize();

    LaurentQT num_;
    LaurentQT den_;
};

// Exact substitution for t followed by recanonicalization; throws
// pole_error if the substituted denominator vanishes.
RatQT specialize_t(const RatQT& f, TSubst rule);

}  // namespace dahaknots
