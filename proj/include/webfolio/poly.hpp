#ifndef WEBFOLIO_POLY_HPP
#define WEBFOLIO_POLY_HPP

#include "webfolio/scalar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace webfolio {

// ---------------------------------------------------------------------------
// Dense univariate polynomial, little-endian coefficients (c[i] * z^i).
// ---------------------------------------------------------------------------
template <class K> struct UniPoly {
    std::vector<K> c;

    UniPoly() {}
    explicit UniPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const K& v) {
        UniPoly p;
        if (!value_is_zero(v)) p.c.assign(1, v);
        return p;
    }
    static UniPoly monomial(const K& v, size_t k) {
        UniPoly p;
        if (!value_is_zero(v)) {
            p.c.assign(k + 1, K(0));
            p.c[k] = v;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && value_is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    K coeff(size_t i) const { return i < c.size() ? c[i] : K(0); }
    K lead() const { return c.empty() ? K(0) : c.back(); }

    K eval(const K& z) const {
        K acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c.size() <= 1) return UniPoly();
        std::vector<K> d(c.size() - 1, K(0));
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * K(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c.size()) r[i] = r[i] + a.c[i];
            if (i < b.c.size()) r[i] = r[i] + b.c[i];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c.size()) r[i] = r[i] + a.c[i];
            if (i < b.c.size()) r[i] = r[i] - b.c[i];
        }
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (value_is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const K& s) {
        UniPoly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    UniPoly pow(unsigned e) const {
        UniPoly acc = constant(K(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Quotient and remainder; the divisor's leading coefficient must be
    // invertible (throws for parameter-dependent leads over Scalar).
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw DegenerateInput("polynomial division by zero");
        if (degree() < d.degree()) return {UniPoly(), *this};
        std::vector<K> rem = c, q(c.size() - d.c.size() + 1, K(0));
        K lead_inv = K(1) / d.c.back();
        for (size_t k = q.size(); k-- > 0;) {
            K f = rem[k + d.c.size() - 1] * lead_inv;
            q[k] = f;
            if (value_is_zero(f)) continue;
            for (size_t j = 0; j < d.c.size(); ++j) rem[k + j] = rem[k + j] - f * d.c[j];
        }
        rem.resize(d.c.size() - 1);
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lead());
    }

    bool operator==(const UniPoly& o) const {
        size_t n = std::max(c.size(), o.c.size());
        for (size_t i = 0; i < n; ++i)
            if (!value_is_zero(coeff(i) - o.coeff(i))) return false;
        return true;
    }

    // Reversal z^n * p(1/z) relative to the given degree bound.
    UniPoly reversed(size_t n) const {
        std::vector<K> r(n + 1, K(0));
        for (size_t i = 0; i < c.size(); ++i) r[n - i] = c[i];
        return UniPoly(std::move(r));
    }

    std::string str(const std::string& var) const;
};

// Exact Euclidean gcd, result monic. Exact fields only.
template <class K> UniPoly<K> unipoly_gcd(UniPoly<K> a, UniPoly<K> b) {
    static_assert(is_exact_field<K>::value, "gcd requires exact coefficients");
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Exact division; throws if the remainder is nonzero.
template <class K> UniPoly<K> unipoly_div_exact(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw MathError("polynomial division is not exact");
    return q;
}

// Square-free decomposition (Yun), characteristic zero. Returns monic
// pairwise-coprime square-free factors with multiplicities; the discarded
// unit is the leading coefficient.
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decompose(const UniPoly<K>& u) {
    static_assert(is_exact_field<K>::value, "square-free decomposition requires exact coefficients");
    if (u.is_zero()) throw DegenerateInput("square-free decomposition of the zero polynomial");
    std::vector<std::pair<UniPoly<K>, int>> out;
    UniPoly<K> f = u.monic();
    if (f.degree() == 0) return out;
    UniPoly<K> fp = f.derivative();
    UniPoly<K> a = unipoly_gcd(f, fp);
    UniPoly<K> b = unipoly_div_exact(f, a);
    UniPoly<K> cpart = unipoly_div_exact(fp, a);
    UniPoly<K> d = cpart - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly<K> g = unipoly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = unipoly_div_exact(b, g);
        cpart = unipoly_div_exact(d, g);
        d = cpart - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homogeneous bivariate polynomial of declared degree; coeffs[i] multiplies
// x^{degree-i} y^i. The zero polynomial keeps its declared degree.
// ---------------------------------------------------------------------------
template <class K> struct HomPoly2 {
    int deg = 0;
    std::vector<K> c; // length deg+1

    HomPoly2() : deg(0), c(1, K(0)) {}
    HomPoly2(int degree, std::vector<K> coeffs) : deg(degree), c(std::move(coeffs)) {
        if (static_cast<int>(c.size()) != deg + 1)
            throw DegenerateInput("homogeneous coefficient vector length mismatch");
    }
    static HomPoly2 zero(int degree) { return HomPoly2(degree, std::vector<K>(degree + 1, K(0))); }
    static HomPoly2 constant(const K& v) { return HomPoly2(0, {v}); }
    // the line b*y - a*x as a degree-1 form
    static HomPoly2 line(const K& a, const K& b) { return HomPoly2(1, {K(0) - a, b}); }

    bool is_zero() const {
        for (const auto& x : c)
            if (!value_is_zero(x)) return false;
        return true;
    }

    K eval(const K& x, const K& y) const {
        // Horner in y/x is unsafe at x=0; evaluate with running powers.
        K acc(0), xp(1);
        std::vector<K> yp(c.size(), K(1));
        for (size_t i = 1; i < c.size(); ++i) yp[i] = yp[i - 1] * y;
        for (size_t i = c.size(); i-- > 0;) {
            acc = acc + c[i] * yp[i] * xp;
            xp = xp * x;
        }
        return acc;
    }

    UniPoly<K> dehomogenize() const { return UniPoly<K>(std::vector<K>(c)); } // P(1,z)

    static HomPoly2 homogenize(const UniPoly<K>& u, int degree) {
        if (u.degree() > degree) throw DegenerateInput("degree too small to homogenize");
        std::vector<K> cc(degree + 1, K(0));
        for (size_t i = 0; i < u.c.size(); ++i) cc[i] = u.c[i];
        return HomPoly2(degree, std::move(cc));
    }

    // multiplicity of x as a factor (= multiplicity of the root [1:0])
    int x_deficiency() const {
        for (size_t i = c.size(); i-- > 0;)
            if (!value_is_zero(c[i])) return deg - static_cast<int>(i);
        return deg + 1; // zero polynomial
    }

    HomPoly2 partial_x() const {
        if (deg == 0) return zero(0);
        std::vector<K> d(deg, K(0));
        for (int i = 0; i < deg; ++i) d[i] = c[i] * K(deg - i);
        return HomPoly2(deg - 1, std::move(d));
    }
    HomPoly2 partial_y() const {
        if (deg == 0) return zero(0);
        std::vector<K> d(deg, K(0));
        for (int i = 1; i <= deg; ++i) d[i - 1] = c[i] * K(i);
        return HomPoly2(deg - 1, std::move(d));
    }

    friend HomPoly2 operator+(const HomPoly2& a, const HomPoly2& b) {
        if (a.deg != b.deg) throw DegenerateInput("degree mismatch in homogeneous sum");
        std::vector<K> r(a.c);
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b.c[i];
        return HomPoly2(a.deg, std::move(r));
    }
    friend HomPoly2 operator-(const HomPoly2& a, const HomPoly2& b) {
        if (a.deg != b.deg) throw DegenerateInput("degree mismatch in homogeneous difference");
        std::vector<K> r(a.c);
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b.c[i];
        return HomPoly2(a.deg, std::move(r));
    }
    friend HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b) {
        std::vector<K> r(a.deg + b.deg + 1, K(0));
        for (int i = 0; i <= a.deg; ++i) {
            if (value_is_zero(a.c[i])) continue;
            for (int j = 0; j <= b.deg; ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return HomPoly2(a.deg + b.deg, std::move(r));
    }
    friend HomPoly2 operator*(const HomPoly2& a, const K& s) {
        HomPoly2 r = a;
        for (auto& x : r.c) x = x * s;
        return r;
    }
    HomPoly2 operator-() const {
        HomPoly2 r = *this;
        for (auto& x : r.c) x = K(0) - x;
        return r;
    }

    HomPoly2 pow(unsigned e) const {
        HomPoly2 acc = constant(K(1)), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const HomPoly2& o) const {
        if (deg != o.deg) return is_zero() && o.is_zero();
        for (size_t i = 0; i < c.size(); ++i)
            if (!value_is_zero(c[i] - o.c[i])) return false;
        return true;
    }

    // P(m00*x + m01*y, m10*x + m11*y)
    HomPoly2 substitute_linear(const K& m00, const K& m01, const K& m10, const K& m11) const {
        HomPoly2 u(1, {m00, m01}), v(1, {m10, m11});
        std::vector<HomPoly2> up(deg + 1, constant(K(1))), vp(deg + 1, constant(K(1)));
        for (int k = 1; k <= deg; ++k) {
            up[k] = up[k - 1] * u;
            vp[k] = vp[k - 1] * v;
        }
        HomPoly2 acc = zero(deg);
        for (int i = 0; i <= deg; ++i) {
            if (value_is_zero(c[i])) continue;
            acc = acc + up[deg - i] * vp[i] * c[i];
        }
        return acc;
    }

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const;
};

// Exact division of homogeneous polynomials; throws when not exact.
// For numeric coefficients "exact" means the remainder is below a relative
// tolerance; the quotient is still returned coefficient-true.
template <class K> HomPoly2<K> hompoly_div_exact(const HomPoly2<K>& p, const HomPoly2<K>& d);

template <class K> HomPoly2<K> hompoly_gcd(const HomPoly2<K>& p, const HomPoly2<K>& q);

// Embeddings into the working complex types.
UniPoly<CNum> embed(const UniPoly<Scalar>& p);
HomPoly2<CNum> embed(const HomPoly2<Scalar>& p);

} // namespace webfolio

#endif
