#pragma once

#include <map>
#include <vector>

#include "dahaknots/laurent_x.hpp"
#include "dahaknots/polyrep.hpp"

namespace dahaknots {

// Symmetric Laurent polynomial in the basis m_0 = 1, m_k = X^k + X^{-k},
// stored as a sparse map k >= 0 -> coefficient.
class SymPoly {
  public:
    using TermMap = std::map<std::int64_t, RatQT>;

    SymPoly() = default;

    static SymPoly zero() { return SymPoly(); }
    static SymPoly one() { return m(0); }
    static SymPoly m(std::int64_t k, RatQT c = RatQT::one());

    bool is_zero() const { return coeffs_.empty(); }
    const TermMap& coeffs() const { return coeffs_; }
    std::int64_t top_index() const;  // largest k present; zero poly has none

    void add(std::int64_t k, const RatQT& c);
    RatQT coeff(std::int64_t k) const;

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly scaled(const RatQT& c) const;
    bool operator==(const SymPoly& o) const { return coeffs_ == o.coeffs_; }

    LaurentX to_laurent_x() const;
    static SymPoly from_laurent_x(const LaurentX& f);  // requires f symmetric

    // Applies the rule to every coefficient.
    SymPoly substitute_t(TSubst rule) const;

    std::string to_text() const;

  private:
    TermMap coeffs_;
};

// Dense univariate polynomial with rational coefficients (index = degree).
using Poly1 = std::vector<BigRat>;

// Chebyshev-like families: S_{-1} = 0, S_0 = 1, S_1 = u, S_{n+1} = u S_n - S_{n-1};
// T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}.
Poly1 chebyshev_S(std::int64_t n);
Poly1 chebyshev_T(std::int64_t n);

// Evaluates a one-variable polynomial at x = X + X^{-1}, expanding into
// the m-basis.
SymPoly poly1_to_sympoly(const Poly1& p);

// The Macdonald operator acting on symmetric Laurent polynomials,
// computed from its explicit difference-operator form. The result is
// asserted to be a symmetric Laurent polynomial.
SymPoly macdonald_operator(const SymPoly& f);

// Same operator realized through the word action of Y + Y^{-1} in the
// standard flavor (used as a cross-check of the kernel).
SymPoly macdonald_operator_via_rep(const SymPoly& f);

// Eigenvalue t q^{2n} + t^{-1} q^{-2n}.
RatQT macdonald_eigenvalue(std::int64_t n);

// Monic symmetric eigenfunction p_n of the Macdonald operator,
// p_n = m_n + lower-order terms; computed by back-substitution on the
// triangular action in the m-basis and memoized.
SymPoly macdonald_poly(std::int64_t n);

// The eigenbasis of the Macdonald operator on the symmetric part of the
// sign representation: p_n with t replaced by -q^2 t^{-1} (the delta_t
// conjugation shifts the parameter beyond the bare -t^{-1} twist).
SymPoly sign_macdonald_poly(std::int64_t n);

// Coefficients c_k with f = sum_k c_k p_k, by elimination from the top
// degree; zero coefficients are omitted.
std::map<std::int64_t, RatQT> expand_in_macdonald(const SymPoly& f);

// Cache controls (testing and the cache-size environment knob).
void macdonald_cache_clear();
std::size_t macdonald_cache_capacity();

}  // namespace dahaknots
