#include "dahaknots/verify.hpp"

#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "dahaknots/errors.hpp"
#include "dahaknots/polyrep.hpp"

namespace dahaknots {

LaurentQ specialize_to_jones(const RatQT& f) {
    return LaurentQ::from_ratqt(specialize_t(f, TSubst::MinusQSquared));
}

namespace {

std::string term_diff(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ d = a - b;
    std::ostringstream out;
    out << "lhs - rhs = " << d.to_text();
    return out.str();
}

VerifyReport compare_up_to_sign(LaurentQ lhs, LaurentQ rhs) {
    VerifyReport rep;
    rep.specialized = lhs;
    rep.oracle = rhs;
    if (lhs == rhs) {
        rep.match = true;
        rep.sign = 1;
    } else if (lhs == -rhs) {
        rep.match = true;
        rep.sign = -1;
    } else {
        rep.diff = term_diff(lhs, rhs);
    }
    return rep;
}

}  // namespace

VerifyReport verify_values(const RatQT& two_variable, const LaurentQ& oracle, bool monomial) {
    LaurentQ lhs = specialize_to_jones(two_variable);
    if (!monomial) return compare_up_to_sign(std::move(lhs), oracle);
    VerifyReport rep;
    rep.specialized = lhs;
    rep.oracle = oracle;
    if (auto ratio = monomial_ratio(lhs, oracle)) {
        rep.match = true;
        rep.sign = ratio->first;
        rep.monomial_k = ratio->second;
    } else {
        rep.diff = term_diff(lhs, oracle);
    }
    return rep;
}

VerifyReport verify_iterated(std::int64_t n, const CableSpec& spec,
                             const InvariantOptions& opts) {
    return verify_values(iterated_topological(n, spec, opts), oracle_jones(n, spec), false);
}

VerifyReport verify_cd(std::int64_t n, const CableSpec& spec, const InvariantOptions& opts) {
    CableSpec newton = spec;
    newton.convention = Convention::Newton;
    return verify_values(cd_newton(n, newton, opts), oracle_jones(n, newton), true);
}

namespace {

struct Check {
    std::string name;
    std::function<bool()> run;
};

bool relations_hold(const RepFlavor& flavor) {
    const RatQT& te = flavor.t_eff;
    for (std::int64_t d = -4; d <= 4; ++d) {
        LaurentX v = LaurentX::x(d);
        auto L = [&](Gen g, std::int64_t e, const LaurentX& u) {
            return act_letter(Letter{g, e}, u, flavor);
        };
        // T X T = X^{-1}
        if (!(L(Gen::T, 1, L(Gen::X, 1, L(Gen::T, 1, v))) == L(Gen::X, -1, v))) return false;
        // T Y^{-1} T = Y
        if (!(L(Gen::T, 1, L(Gen::Y, -1, L(Gen::T, 1, v))) == L(Gen::Y, 1, v))) return false;
        // X Y = q^2 Y X T^2
        LaurentX lhs = L(Gen::X, 1, L(Gen::Y, 1, v));
        LaurentX rhs =
            L(Gen::Y, 1, L(Gen::X, 1, L(Gen::T, 2, v))).scaled(RatQT::q(2));
        if (!(lhs == rhs)) return false;
        // (T - t_eff)(T + t_eff^{-1}) = 0
        LaurentX tv = L(Gen::T, 1, v);
        LaurentX u = tv + v.scaled(te.inverse());
        if (!(L(Gen::T, 1, u) - u.scaled(te)).is_zero()) return false;
    }
    return true;
}

bool gamma_matrix_checks() {
    for (std::int64_t r = -8; r <= 8; ++r)
        for (std::int64_t s = -8; s <= 8; ++s) {
            if (std::gcd(r, s) != 1) continue;
            TauWord w = decompose_gamma(r, s);
            if (!w.matrix_consistent()) return false;
            if (w.mat.b != r || w.mat.d != s) return false;
        }
    return true;
}

bool macdonald_checks() {
    for (std::int64_t n = 0; n <= 4; ++n) {
        SymPoly p = macdonald_poly(n);
        if (!(macdonald_operator(p) == p.scaled(macdonald_eigenvalue(n)))) return false;
        SymPoly s = p.substitute_t(TSubst::MinusQSquared);
        if (!(s == poly1_to_sympoly(chebyshev_S(n)))) return false;
    }
    return true;
}

bool bridge_check() {
    RatQT lhs = specialize_t(cherednik_torus(2, 2, 3), TSubst::MinusQSquaredOverT);
    return lhs == sign_torus(2, 2, 3);
}

bool oracle_sanity() {
    CableSpec trefoil{{{2, 3}}, Convention::Topological};
    CableSpec dbl{{{2, 3}, {2, 5}}, Convention::Topological};
    if (!(oracle_jones(1, trefoil) == LaurentQ::one())) return false;
    if (!(oracle_jones(1, dbl) == LaurentQ::one())) return false;
    LaurentQ j2 = unknot_jones(2);
    LaurentQ expect;
    expect.add_term(2, BigRat(-1));
    expect.add_term(-2, BigRat(-1));
    return j2 == expect && unknot_jones(-3) == -unknot_jones(3) &&
           unknot_jones(0).is_zero();
}

bool gamma_negation_report() {
    // Whether gamma_{-r,-s} acts like gamma_{r,s} on the longitude word is
    // not assumed anywhere; report the observed behaviour.
    LaurentX probe = LaurentX::x(1) + LaurentX::x(-1);
    bool all_equal = true;
    for (auto [r, s] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {3, 2}, {2, 5}}) {
        LaurentX a = act(gamma_apply(r, s, y_word()), probe, RepFlavor::standard());
        LaurentX b = act(gamma_apply(-r, -s, y_word()), probe, RepFlavor::standard());
        if (!(a == b)) all_equal = false;
    }
    std::cout << "  note: gamma_{-r,-s}(y) " << (all_equal ? "matched" : "differed from")
              << " gamma_{r,s}(y) on test vectors\n";
    return true;  // informational
}

}  // namespace

bool run_selftest() {
    std::vector<Check> checks = {
        {"generator relations (standard flavor)",
         [] { return relations_hold(RepFlavor::standard()); }},
        {"generator relations (sign flavor)",
         [] { return relations_hold(RepFlavor::sign_rep()); }},
        {"modular-group decomposition matrices", gamma_matrix_checks},
        {"Macdonald eigenfunctions and Chebyshev specialization", macdonald_checks},
        {"torus polynomial bridge at t -> -q^2 t^{-1}", bridge_check},
        {"oracle sanity", oracle_sanity},
        {"gamma negation comparison", gamma_negation_report},
    };
    bool ok = true;
    for (const auto& c : checks) {
        bool pass = false;
        std::string err;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            err = e.what();
        }
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!err.empty()) std::cout << "  (" << err << ")";
        std::cout << "\n";
        ok = ok && pass;
    }
    return ok;
}

}  // namespace dahaknots
