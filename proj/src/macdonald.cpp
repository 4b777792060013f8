#include "dahaknots/macdonald.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <utility>

#include "dahaknots/errors.hpp"

namespace dahaknots {

SymPoly SymPoly::m(std::int64_t k, RatQT c) {
    SymPoly r;
    r.add(k, c);
    return r;
}

std::int64_t SymPoly::top_index() const {
    if (is_zero()) throw internal_error("top_index of zero");
    return coeffs_.rbegin()->first;
}

void SymPoly::add(std::int64_t k, const RatQT& c) {
    if (k < 0) throw internal_error("SymPoly: negative basis index");
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatQT SymPoly::coeff(std::int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? RatQT::zero() : it->second;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    r += o;
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k, -c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

SymPoly SymPoly::scaled(const RatQT& c) const {
    SymPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

LaurentX SymPoly::to_laurent_x() const {
    LaurentX r;
    for (const auto& [k, c] : coeffs_) {
        r.add_term(k, c);
        if (k != 0) r.add_term(-k, c);
    }
    return r;
}

SymPoly SymPoly::from_laurent_x(const LaurentX& f) {
    if (!f.is_symmetric())
        throw internal_error("SymPoly::from_laurent_x: input not symmetric: " + f.to_text());
    SymPoly r;
    for (const auto& [e, c] : f.terms())
        if (e >= 0) r.coeffs_.emplace(e, c);
    return r;
}

SymPoly SymPoly::substitute_t(TSubst rule) const {
    SymPoly r;
    for (const auto& [k, c] : coeffs_) r.add(k, specialize_t(c, rule));
    return r;
}

std::string SymPoly::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_text() << ")*m_" << k;
    }
    return out.str();
}

Poly1 chebyshev_S(std::int64_t n) {
    if (n < -1) throw usage_error("chebyshev_S: n must be >= -1");
    if (n == -1) return {};
    Poly1 prev = {};             // S_{-1}
    Poly1 cur = {BigRat(1)};     // S_0
    for (std::int64_t i = 0; i < n; ++i) {
        Poly1 next(cur.size() + 1, BigRat(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly1 chebyshev_T(std::int64_t n) {
    if (n < 0) throw usage_error("chebyshev_T: n must be >= 0");
    Poly1 prev = {BigRat(2)};            // T_0
    if (n == 0) return prev;
    Poly1 cur = {BigRat(0), BigRat(1)};  // T_1
    for (std::int64_t i = 1; i < n; ++i) {
        Poly1 next(cur.size() + 1, BigRat(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SymPoly poly1_to_sympoly(const Poly1& p) {
    // x^k = sum_j binom(k, j) X^{k-2j}; fold into m-basis terms.
    SymPoly out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        BigInt binom(1);
        for (std::size_t j = 0; 2 * j <= k; ++j) {
            // m_{k-2j} collects the X^{k-2j} and X^{2j-k} binomials at once;
            // the central X^0 term appears exactly once as m_0.
            std::int64_t idx = static_cast<std::int64_t>(k - 2 * j);
            BigRat c = p[k] * BigRat(binom);
            out.add(idx, RatQT::constant(c));
            // next binomial C(k, j+1)
            binom *= static_cast<unsigned long>(k - j);
            binom /= static_cast<unsigned long>(j + 1);
        }
    }
    return out;
}

namespace {

const LaurentX& x_inv_minus_x() {
    static const LaurentX v = [] {
        LaurentX p;
        p.add_term(-1, RatQT::one());
        p.add_term(1, -RatQT::one());
        return p;
    }();
    return v;
}

}  // namespace

SymPoly macdonald_operator(const SymPoly& f) {
    // L f = [ (t X^{-1} - t^{-1} X) f(q^{-2} X) + (t^{-1} X^{-1} - t X) f(q^2 X) ]
    //       / (X^{-1} - X)
    LaurentX F = f.to_laurent_x();
    LaurentX a;
    a.add_term(-1, RatQT::t());
    a.add_term(1, -RatQT::t(-1));
    LaurentX b;
    b.add_term(-1, RatQT::t(-1));
    b.add_term(1, -RatQT::t());
    LaurentX numerator = a * F.q_dilated(-1) + b * F.q_dilated(1);
    LaurentX result;
    try {
        result = exact_divide_X(numerator, x_inv_minus_x());
    } catch (const inexact_division&) {
        throw internal_error("macdonald_operator: difference operator left a remainder");
    }
    return SymPoly::from_laurent_x(result);  // asserts symmetry
}

SymPoly macdonald_operator_via_rep(const SymPoly& f) {
    LaurentX img = act(y_word(), f.to_laurent_x(), RepFlavor::standard());
    return SymPoly::from_laurent_x(img);
}

RatQT macdonald_eigenvalue(std::int64_t n) {
    return RatQT::monomial(BigRat(1), 2 * n, 1) + RatQT::monomial(BigRat(1), -2 * n, -1);
}

namespace {

struct MacdonaldCache {
    std::mutex mu;
    std::map<std::int64_t, SymPoly> entries;
    std::size_t capacity;

    MacdonaldCache() : capacity(256) {
        if (const char* env = std::getenv("DAHAKNOTS_CACHE_MAX")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 0) capacity = static_cast<std::size_t>(v);
        }
    }
};

MacdonaldCache& cache() {
    static MacdonaldCache c;
    return c;
}

SymPoly compute_macdonald(std::int64_t n,
                          const std::vector<SymPoly>& operator_on_m) {
    // Solve (L - lambda_n) p = 0 with p = m_n + sum_{k<n} a_k m_k by
    // back-substitution; the action of L on the m-basis is triangular.
    RatQT lambda_n = macdonald_eigenvalue(n);
    std::map<std::int64_t, RatQT> a;
    a[n] = RatQT::one();
    for (std::int64_t j = n - 1; j >= 0; --j) {
        RatQT rhs = RatQT::zero();
        for (std::int64_t k = j + 1; k <= n; ++k) {
            auto it = a.find(k);
            if (it == a.end()) continue;
            RatQT mjk = operator_on_m[static_cast<std::size_t>(k)].coeff(j);
            if (!mjk.is_zero()) rhs += it->second * mjk;
        }
        if (rhs.is_zero()) continue;
        RatQT pivot = lambda_n - macdonald_eigenvalue(j);
        if (pivot.is_zero())
            throw internal_error("macdonald_poly: vanishing pivot (non-generic parameters)");
        a[j] = rhs / pivot;
    }
    SymPoly p;
    for (const auto& [k, c] : a) p.add(k, c);
    return p;
}

}  // namespace

SymPoly macdonald_poly(std::int64_t n) {
    if (n < 0) throw usage_error("macdonald_poly: n must be >= 0");
    auto& c = cache();
    {
        std::scoped_lock lock(c.mu);
        auto it = c.entries.find(n);
        if (it != c.entries.end()) return it->second;
    }
    std::vector<SymPoly> on_m;
    on_m.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        SymPoly lm = macdonald_operator(SymPoly::m(k));
        if (!lm.is_zero() && lm.top_index() > k)
            throw internal_error("macdonald_poly: operator not triangular on m-basis");
        on_m.push_back(std::move(lm));
    }
    SymPoly p = compute_macdonald(n, on_m);
    {
        std::scoped_lock lock(c.mu);
        if (c.entries.size() < c.capacity) c.entries.emplace(n, p);
    }
    return p;
}

SymPoly sign_macdonald_poly(std::int64_t n) {
    // The sign module's symmetric part is C[x] * delta_t; conjugating the
    // Macdonald operator by delta_t shifts the Hecke parameter a second
    // time, from -t^{-1} to -q^2 t^{-1}. The eigenbasis therefore uses the
    // latter substitution (p_n at -t^{-1} stops being an eigenvector at
    // n = 2, where coefficients first depend on t).
    return macdonald_poly(n).substitute_t(TSubst::MinusQSquaredOverT);
}

std::map<std::int64_t, RatQT> expand_in_macdonald(const SymPoly& f) {
    std::map<std::int64_t, RatQT> out;
    SymPoly rem = f;
    while (!rem.is_zero()) {
        std::int64_t k = rem.top_index();
        RatQT c = rem.coeff(k);
        out.emplace(k, c);
        rem = rem - macdonald_poly(k).scaled(c);
        if (!rem.is_zero() && rem.top_index() >= k)
            throw internal_error("expand_in_macdonald: elimination failed to reduce degree");
    }
    return out;
}

void macdonald_cache_clear() {
    auto& c = cache();
    std::scoped_lock lock(c.mu);
    c.entries.clear();
}

std::size_t macdonald_cache_capacity() { return cache().capacity; }

}  // namespace dahaknots
