#include <doctest.h>

#include <numeric>
#include <random>

#include "dahaknots/hword.hpp"

using namespace dahaknots;

namespace {

std::mt19937 rng(424243);

HElement random_element() {
    std::uniform_int_distribution<int> nterms(1, 3), nletters(0, 3), gen(0, 2), expo(-2, 2),
        coeff(-3, 3);
    HElement out;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Word w;
        int L = nletters(rng);
        for (int j = 0; j < L; ++j) {
            int e = expo(rng);
            if (e == 0) continue;
            w = word_mul(w, Word{{static_cast<Gen>(gen(rng)), e}});
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        out.add_word(w, RatQT::from_int(c));
    }
    return out;
}

}  // namespace

TEST_CASE("hmul merges and cancels letters") {
    HElement x = HElement::generator(Gen::X, 1);
    HElement xinv = HElement::generator(Gen::X, -1);
    CHECK(hmul(x, xinv) == HElement::unit());

    HElement xy = HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}}, RatQT::q(-1));
    HElement t = HElement::generator(Gen::T, 1);
    CHECK(hmul(xy, t) ==
          HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}, {Gen::T, 1}}, RatQT::q(-1)));

    HElement xpxi = x_word();
    HElement sq = hmul(xpxi, xpxi);
    HElement expect = HElement::generator(Gen::X, 2) + HElement::generator(Gen::X, -2) +
                      HElement::unit().scaled(RatQT::from_int(2));
    CHECK(sq == expect);
}

TEST_CASE("hmul associative, unit two-sided") {
    for (int i = 0; i < 30; ++i) {
        HElement a = random_element(), b = random_element(), c = random_element();
        CHECK(hmul(hmul(a, b), c) == hmul(a, hmul(b, c)));
        CHECK(hmul(a, HElement::unit()) == a);
        CHECK(hmul(HElement::unit(), a) == a);
    }
}

TEST_CASE("phi anti-automorphism") {
    // phi(XY) = X^{-1} Y^{-1}: letterwise images Y^{-1}, X^{-1} in reversed order
    HElement xy = HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}});
    CHECK(phi(xy) == HElement::from_word(Word{{Gen::X, -1}, {Gen::Y, -1}}));
    CHECK(phi(HElement::generator(Gen::T, 1)) == HElement::generator(Gen::T, 1));

    for (int i = 0; i < 30; ++i) {
        HElement a = random_element(), b = random_element();
        CHECK(phi(hmul(a, b)) == hmul(phi(b), phi(a)));
        CHECK(phi(phi(a)) == a);
    }
}

TEST_CASE("tau substitutions") {
    HElement y = HElement::generator(Gen::Y, 1);
    CHECK(tau_apply(y, TauGen::Plus) ==
          HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}}, RatQT::q(-1)));
    // image of Y^{-1} is the inverted image word with inverted scalar
    CHECK(tau_apply(HElement::generator(Gen::Y, -1), TauGen::Plus) ==
          HElement::from_word(Word{{Gen::Y, -1}, {Gen::X, -1}}, RatQT::q(1)));
    CHECK(tau_apply(HElement::generator(Gen::X, 1), TauGen::Minus) ==
          HElement::from_word(Word{{Gen::Y, 1}, {Gen::X, 1}}, RatQT::q(1)));

    for (int i = 0; i < 25; ++i) {
        HElement a = random_element();
        CHECK(tau_apply(tau_apply(a, TauGen::Minus), TauGen::MinusInv) == a);
        CHECK(tau_apply(tau_apply(a, TauGen::Plus), TauGen::PlusInv) == a);
    }
}

TEST_CASE("decompose_gamma reaches (r,s)") {
    CHECK(decompose_gamma(0, 1).gens.empty());
    TauWord w11 = decompose_gamma(1, 1);
    CHECK(w11.gens == std::vector<TauGen>{TauGen::Plus});

    TauWord w23 = decompose_gamma(2, 3);
    CHECK(w23.gens == std::vector<TauGen>{TauGen::Minus, TauGen::Plus, TauGen::Plus});
    CHECK(w23.mat == Mat2{1, 2, 1, 3});

    for (std::int64_t r = -12; r <= 12; ++r)
        for (std::int64_t s = -12; s <= 12; ++s) {
            if (std::gcd(r, s) != 1) continue;
            TauWord w = decompose_gamma(r, s);
            CHECK(w.matrix_consistent());
            CHECK(w.mat.b == r);
            CHECK(w.mat.d == s);
        }

    CHECK_THROWS(decompose_gamma(2, 4));
}

TEST_CASE("gamma_apply on the longitude") {
    HElement y = y_word();
    CHECK(gamma_apply(0, 1, y) == y);

    HElement img = gamma_apply(1, 1, y);
    HElement expect = HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}}, RatQT::q(-1)) +
                      HElement::from_word(Word{{Gen::Y, -1}, {Gen::X, -1}}, RatQT::q(1));
    CHECK(img == expect);

    // appending a stabilizer generator must not change the image of y
    for (auto [r, s] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 2}, {2, 5}}) {
        CHECK(gamma_apply(r, s, y, 1) == gamma_apply(r, s, y));
        CHECK(gamma_apply(r, s, y, 2) == gamma_apply(r, s, y));
    }
}
