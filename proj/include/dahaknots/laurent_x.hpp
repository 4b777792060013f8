#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dahaknots/ratqt.hpp"

namespace dahaknots {

// Laurent polynomial in the representation variable X with RatQT
// coefficients. Invariant: no stored coefficient is zero.
class LaurentX {
  public:
    using TermMap = std::map<std::int64_t, RatQT>;

    LaurentX() = default;

    static LaurentX zero() { return LaurentX(); }
    static LaurentX one() { return monomial(RatQT::one(), 0); }
    static LaurentX monomial(RatQT c, std::int64_t e);
    static LaurentX x(std::int64_t e = 1) { return monomial(RatQT::one(), e); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(std::int64_t e, const RatQT& c);
    RatQT coeff(std::int64_t e) const;

    std::int64_t min_deg() const;
    std::int64_t max_deg() const;

    LaurentX operator-() const;
    LaurentX operator+(const LaurentX& o) const;
    LaurentX operator-(const LaurentX& o) const;
    LaurentX operator*(const LaurentX& o) const;
    LaurentX& operator+=(const LaurentX& o);
    LaurentX& operator-=(const LaurentX& o);
    bool operator==(const LaurentX& o) const { return terms_ == o.terms_; }

    LaurentX scaled(const RatQT& c) const;
    LaurentX shifted(std::int64_t d) const;  // multiply by X^d

    // X -> X^{-1}
    LaurentX reversed() const;
    // X -> q^(2s) X, i.e. the coefficient of X^d picks up q^(2sd).
    LaurentX q_dilated(int s) const;

    bool is_symmetric() const { return *this == reversed(); }

    // Substitutes X = point (point must be invertible).
    RatQT eval_at(const RatQT& point) const;

    std::string to_text() const;

  private:
    TermMap terms_;
};

// Exact division in LaurentX over Q(q,t); throws inexact_division
// (carrying the remainder) if g does not divide f.
LaurentX exact_divide_X(const LaurentX& f, const LaurentX& g);

// Laurent polynomial in q alone, with rational coefficients.
class LaurentQ {
  public:
    using TermMap = std::map<std::int64_t, BigRat>;

    LaurentQ() = default;

    static LaurentQ zero() { return LaurentQ(); }
    static LaurentQ one() { return monomial(BigRat(1), 0); }
    static LaurentQ monomial(BigRat c, std::int64_t e);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(std::int64_t e, const BigRat& c);

    LaurentQ operator-() const;
    LaurentQ operator+(const LaurentQ& o) const;
    LaurentQ operator-(const LaurentQ& o) const;
    LaurentQ operator*(const LaurentQ& o) const;
    LaurentQ& operator+=(const LaurentQ& o);
    bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }

    LaurentQ shifted(std::int64_t d) const;
    // q -> q^{-1}
    LaurentQ reversed() const;

    std::int64_t min_deg() const;

    // Conversions to/from the two-variable types (te = 0 throughout).
    RatQT to_ratqt() const;
    static LaurentQ from_ratqt(const RatQT& f);  // throws if f is not Laurent in q alone

    std::string to_text() const;

  private:
    TermMap terms_;
};

// If f == sign * q^k * g exactly (sign in {+1,-1}), returns {sign, k};
// otherwise nullopt. g must be nonzero.
std::optional<std::pair<int, std::int64_t>> monomial_ratio(const LaurentQ& f,
                                                           const LaurentQ& g);

}  // namespace dahaknots
