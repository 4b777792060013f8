#include "dahaknots/hword.hpp"

#include <numeric>
#include <sstream>

#include "dahaknots/errors.hpp"

namespace dahaknots {

Word word_mul(const Word& a, const Word& b) {
    Word r = a;
    for (const Letter& l : b) {
        if (!r.empty() && r.back().gen == l.gen) {
            r.back().exp += l.exp;
            if (r.back().exp == 0) r.pop_back();
        } else {
            r.push_back(l);
        }
    }
    return r;
}

Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
    return r;
}

std::string word_to_text(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : w) {
        if (!first) out << ".";
        first = false;
        switch (l.gen) {
            case Gen::X: out << "X"; break;
            case Gen::Y: out << "Y"; break;
            case Gen::T: out << "T"; break;
        }
        if (l.exp != 1) out << "^" << l.exp;
    }
    return out.str();
}

HElement HElement::from_word(Word w, RatQT c) {
    HElement r;
    r.add_word(std::move(w), c);
    return r;
}

HElement HElement::generator(Gen g, std::int64_t exp) {
    if (exp == 0) return unit();
    return from_word(Word{{g, exp}});
}

void HElement::add_word(const Word& w, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HElement HElement::operator+(const HElement& o) const {
    HElement r = *this;
    r += o;
    return r;
}

HElement HElement::operator-(const HElement& o) const {
    HElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_word(w, -c);
    return r;
}

HElement& HElement::operator+=(const HElement& o) {
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
}

HElement HElement::scaled(const RatQT& c) const {
    HElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.add_word(w, v * c);
    return r;
}

std::string HElement::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_text() << ")*" << word_to_text(w);
    }
    return out.str();
}

HElement hmul(const HElement& a, const HElement& b) {
    HElement r;
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) r.add_word(word_mul(w1, w2), c1 * c2);
    return r;
}

HElement phi(const HElement& a) {
    HElement r;
    for (const auto& [w, c] : a.terms()) {
        Word img;
        img.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (it->gen) {
                case Gen::X: img.push_back({Gen::Y, -it->exp}); break;
                case Gen::Y: img.push_back({Gen::X, -it->exp}); break;
                case Gen::T: img.push_back({Gen::T, it->exp}); break;
            }
        }
        r.add_word(img, c);
    }
    return r;
}

namespace {

// Image of a single generator under a tau substitution, as a scalar
// monomial times a word.
struct MonomialWord {
    RatQT coeff;
    Word word;
};

MonomialWord tau_image(TauGen g, Gen gen) {
    switch (g) {
        case TauGen::Plus:
            if (gen == Gen::Y) return {RatQT::q(-1), Word{{Gen::X, 1}, {Gen::Y, 1}}};
            break;
        case TauGen::Minus:
            if (gen == Gen::X) return {RatQT::q(1), Word{{Gen::Y, 1}, {Gen::X, 1}}};
            break;
        case TauGen::PlusInv:
            if (gen == Gen::Y) return {RatQT::q(1), Word{{Gen::X, -1}, {Gen::Y, 1}}};
            break;
        case TauGen::MinusInv:
            if (gen == Gen::X) return {RatQT::q(-1), Word{{Gen::Y, -1}, {Gen::X, 1}}};
            break;
    }
    return {RatQT::one(), Word{{gen, 1}}};
}

MonomialWord tau_letter(TauGen g, const Letter& l) {
    MonomialWord base = tau_image(g, l.gen);
    std::int64_t k = l.exp;
    MonomialWord unitimg{RatQT::one(), Word{}};
    if (k == 0) return unitimg;
    MonomialWord step = base;
    if (k < 0) {
        step.coeff = base.coeff.inverse();
        step.word = word_inverse(base.word);
        k = -k;
    }
    MonomialWord acc = unitimg;
    for (std::int64_t i = 0; i < k; ++i) {
        acc.coeff *= step.coeff;
        acc.word = word_mul(acc.word, step.word);
    }
    return acc;
}

}  // namespace

HElement tau_apply(const HElement& a, TauGen g) {
    HElement r;
    for (const auto& [w, c] : a.terms()) {
        RatQT coeff = c;
        Word img;
        for (const Letter& l : w) {
            MonomialWord mw = tau_letter(g, l);
            coeff *= mw.coeff;
            img = word_mul(img, mw.word);
        }
        r.add_word(img, coeff);
    }
    return r;
}

Mat2 mat2_mul(const Mat2& m, const Mat2& n) {
    return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 tau_matrix(TauGen g) {
    switch (g) {
        case TauGen::Plus: return Mat2{1, 1, 0, 1};
        case TauGen::Minus: return Mat2{1, 0, 1, 1};
        case TauGen::PlusInv: return Mat2{1, -1, 0, 1};
        case TauGen::MinusInv: return Mat2{1, 0, -1, 1};
    }
    throw internal_error("tau_matrix: bad generator");
}

void TauWord::push(TauGen g) {
    gens.push_back(g);
    mat = mat2_mul(mat, tau_matrix(g));
}

bool TauWord::matrix_consistent() const {
    Mat2 m;
    for (TauGen g : gens) m = mat2_mul(m, tau_matrix(g));
    return m == mat && (m.a * m.d - m.b * m.c) == 1;
}

TauWord decompose_gamma(std::int64_t r, std::int64_t s) {
    if (std::gcd(r, s) != 1)
        throw usage_error("decompose_gamma: gcd(" + std::to_string(r) + "," +
                          std::to_string(s) + ") != 1");
    TauWord w;
    // Reduce the target vector (a,b) back to (0,1); recording generator g
    // replaces (a,b) by g^{-1}(a,b), so the recorded word maps (0,1) to
    // (r,s) when read left to right as a matrix product.
    std::int64_t a = r, b = s;
    auto rec_plus = [&](std::int64_t k) {  // tau+^k : a -= k*b
        for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i)
            w.push(k > 0 ? TauGen::Plus : TauGen::PlusInv);
        a -= k * b;
    };
    auto rec_minus = [&](std::int64_t k) {  // tau-^k : b -= k*a
        for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i)
            w.push(k > 0 ? TauGen::Minus : TauGen::MinusInv);
        b -= k * a;
    };
    while (!(a == 0 && b == 1)) {
        if (std::abs(a) >= 2 && std::abs(b) >= 1 && std::abs(a) >= std::abs(b)) {
            rec_plus(a / b);  // |a mod b| < |b|
        } else if (std::abs(b) >= 2 && std::abs(a) >= 1) {
            rec_minus(b / a);
        } else if (a == 0 && b == -1) {
            rec_plus(-1);  // -> (-1,-1)
        } else if (b == 0) {
            rec_minus(a == 1 ? -1 : 1);  // (1,0) -> (1,1); (-1,0) -> (-1,1)
        } else if (b == 1) {
            rec_plus(a);  // (±1,1) -> (0,1)
        } else {
            // (a,b) = (±1,-1)
            rec_minus(a == 1 ? -2 : 2);  // -> (±1,1)
        }
    }
    if (!(w.mat.b == r && w.mat.d == s))
        throw internal_error("decompose_gamma: word does not reach (r,s)");
    return w;
}

HElement apply_tau_word(const TauWord& w, const HElement& a) {
    HElement r = a;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) r = tau_apply(r, *it);
    return r;
}

HElement gamma_apply(std::int64_t r, std::int64_t s, const HElement& a,
                     int extra_tau_minus) {
    TauWord w = decompose_gamma(r, s);
    for (int i = 0; i < extra_tau_minus; ++i) w.push(TauGen::Minus);
    return apply_tau_word(w, a);
}

HElement x_word() {
    return HElement::generator(Gen::X, 1) + HElement::generator(Gen::X, -1);
}

HElement y_word() {
    return HElement::generator(Gen::Y, 1) + HElement::generator(Gen::Y, -1);
}

HElement z_word() {
    HElement first = HElement::from_word(Word{{Gen::X, 1}, {Gen::Y, 1}, {Gen::T, -2}});
    HElement second = HElement::from_word(Word{{Gen::X, -1}, {Gen::Y, -1}});
    return (first + second).scaled(RatQT::q(-1));
}

HElement e_monomial(std::int64_t r, std::int64_t s) {
    Word w;
    if (r != 0) w.push_back({Gen::X, r});
    if (s != 0) w.push_back({Gen::Y, s});
    return HElement::from_word(std::move(w), RatQT::q(-r * s));
}

}  // namespace dahaknots
