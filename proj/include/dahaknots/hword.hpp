#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dahaknots/ratqt.hpp"

namespace dahaknots {

enum class Gen : std::uint8_t { X, Y, T };

// One generator power inside a word; exponent never zero.
struct Letter {
    Gen gen;
    std::int64_t exp;
    auto operator<=>(const Letter&) const = default;
};

// Sequence of letters; canonical form has adjacent letters of distinct
// generators (same-generator runs merged, zero exponents dropped).
using Word = std::vector<Letter>;

Word word_mul(const Word& a, const Word& b);
Word word_inverse(const Word& w);
std::string word_to_text(const Word& w);

// Finite linear combination of words with RatQT coefficients. The empty
// word is the unit. No relations are imposed at the word level; the
// algebra relations only ever enter through the polynomial
// representations.
class HElement {
  public:
    using TermMap = std::map<Word, RatQT>;

    HElement() = default;

    static HElement zero() { return HElement(); }
    static HElement unit() { return from_word(Word{}); }
    static HElement from_word(Word w, RatQT c = RatQT::one());
    static HElement generator(Gen g, std::int64_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_word(const Word& w, const RatQT& c);

    HElement operator+(const HElement& o) const;
    HElement operator-(const HElement& o) const;
    HElement& operator+=(const HElement& o);
    HElement scaled(const RatQT& c) const;
    bool operator==(const HElement& o) const { return terms_ == o.terms_; }

    std::string to_text() const;

  private:
    TermMap terms_;
};

// Bilinear concatenation product (free multiplication with exponent
// merging).
HElement hmul(const HElement& a, const HElement& b);

// The anti-automorphism X -> Y^{-1}, Y -> X^{-1}, T -> T (words reversed).
HElement phi(const HElement& a);

// Generators of the modular-group substitution action.
enum class TauGen : std::uint8_t { Plus, Minus, PlusInv, MinusInv };

// Applies one generator substitution:
//   tau+ : X -> X,     Y -> q^{-1} X Y,  T -> T
//   tau- : X -> q Y X, Y -> Y,           T -> T
// with inverses accordingly; extended multiplicatively over words and
// linearly over terms.
HElement tau_apply(const HElement& a, TauGen g);

struct Mat2 {
    // Row-major [[a, b], [c, d]].
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2&) const = default;
};

Mat2 mat2_mul(const Mat2& m, const Mat2& n);
Mat2 tau_matrix(TauGen g);

// A word in the tau generators together with its cached matrix product
// (in word order, leftmost factor first).
struct TauWord {
    std::vector<TauGen> gens;
    Mat2 mat;

    void push(TauGen g);
    bool matrix_consistent() const;
};

// Produces a tau word whose matrix sends (0,1)^T to (r,s)^T; requires
// gcd(r,s) = 1. Any valid word works downstream, since all uses are
// invariant under right multiplication by the stabilizer of (0,1)^T.
TauWord decompose_gamma(std::int64_t r, std::int64_t s);

// Applies the composed substitution of a tau word: the rightmost
// generator in the word acts on the element first, matching the matrix
// product order of TauWord::mat.
HElement apply_tau_word(const TauWord& w, const HElement& a);

// gamma_{r,s} applied to a; extra_tau_minus appends stabilizer
// generators to the word (the result must not change; exercised by
// tests).
HElement gamma_apply(std::int64_t r, std::int64_t s, const HElement& a,
                     int extra_tau_minus = 0);

// Distinguished elements: the spherical generators and the quantum-torus
// basis monomials.
HElement x_word();                                  // X + X^{-1}
HElement y_word();                                  // Y + Y^{-1}
HElement z_word();                                  // q^{-1}(X Y T^{-2} + X^{-1} Y^{-1})
HElement e_monomial(std::int64_t r, std::int64_t s);  // q^{-rs} X^r Y^s

}  // namespace dahaknots
