#include "webfolio/poly.hpp"

#include <sstream>

namespace webfolio {

namespace {

bool invertible(const Scalar& s) { return !s.is_zero() && s.t_free(); }
bool invertible(const CNum& z) { return z != CNum(0); }

[[maybe_unused]] double coeff_mag(const Scalar&) { return 0.0; }
double coeff_mag(const CNum& z) { return abs(z).convert_to<double>(); }

template <class K> bool remainder_negligible(const UniPoly<K>& rem, const UniPoly<K>& num) {
    if constexpr (is_exact_field<K>::value) {
        return rem.is_zero();
    } else {
        double scale = 1.0;
        for (const auto& x : num.c) scale = std::max(scale, coeff_mag(x));
        for (const auto& x : rem.c)
            if (coeff_mag(x) > 1e-18 * scale) return false;
        return true;
    }
}

} // namespace

template <class K> HomPoly2<K> hompoly_div_exact(const HomPoly2<K>& p, const HomPoly2<K>& d) {
    if (d.is_zero()) throw DegenerateInput("homogeneous division by zero");
    if (p.is_zero()) {
        if (p.deg < d.deg) throw MathError("homogeneous division is not exact");
        return HomPoly2<K>::zero(p.deg - d.deg);
    }
    if (p.deg < d.deg) throw MathError("homogeneous division is not exact");
    UniPoly<K> up = p.dehomogenize(), ud = d.dehomogenize();
    if (!ud.is_zero() && invertible(ud.lead())) {
        auto [q, r] = up.divrem(ud);
        if (!remainder_negligible(r, up)) throw MathError("homogeneous division is not exact");
        if (q.degree() > p.deg - d.deg) throw MathError("homogeneous division is not exact");
        return HomPoly2<K>::homogenize(q, p.deg - d.deg);
    }
    // x-chart: view both as polynomials in x with y = 1
    UniPoly<K> vp = up.reversed(p.deg), vd = ud.reversed(d.deg);
    if (vd.is_zero() || !invertible(vd.lead()))
        throw UnsupportedCase("divisor has no invertible extreme coefficient");
    auto [q, r] = vp.divrem(vd);
    if (!remainder_negligible(r, vp)) throw MathError("homogeneous division is not exact");
    if (q.degree() > p.deg - d.deg) throw MathError("homogeneous division is not exact");
    return HomPoly2<K>::homogenize(q.reversed(p.deg - d.deg), p.deg - d.deg);
}

template HomPoly2<Scalar> hompoly_div_exact(const HomPoly2<Scalar>&, const HomPoly2<Scalar>&);
template HomPoly2<CNum> hompoly_div_exact(const HomPoly2<CNum>&, const HomPoly2<CNum>&);

template <class K> HomPoly2<K> hompoly_gcd(const HomPoly2<K>& p, const HomPoly2<K>& q) {
    static_assert(is_exact_field<K>::value, "homogeneous gcd requires exact coefficients");
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcd of two zero forms");
    auto normalize = [](const HomPoly2<K>& h) {
        UniPoly<K> u = h.dehomogenize();
        if (u.is_zero()) {
            // pure power of x; normalize to x^deg
            std::vector<K> c(h.deg + 1, K(0));
            c[0] = K(1);
            return HomPoly2<K>(h.deg, std::move(c));
        }
        return h * (K(1) / u.lead());
    };
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    int e = std::min(p.x_deficiency(), q.x_deficiency());
    UniPoly<K> g = unipoly_gcd(p.dehomogenize(), q.dehomogenize());
    return HomPoly2<K>::homogenize(g, g.degree() + e);
}

template HomPoly2<Scalar> hompoly_gcd(const HomPoly2<Scalar>&, const HomPoly2<Scalar>&);

UniPoly<CNum> embed(const UniPoly<Scalar>& p) {
    std::vector<CNum> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.c[i].embed();
    return UniPoly<CNum>(std::move(c));
}

HomPoly2<CNum> embed(const HomPoly2<Scalar>& p) {
    std::vector<CNum> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.c[i].embed();
    return HomPoly2<CNum>(p.deg, std::move(c));
}

namespace {

void append_term(std::ostringstream& os, bool& first, std::string coeff, const std::string& mono) {
    bool neg = coeff.size() > 1 && coeff[0] == '-' && coeff.find(' ') == std::string::npos;
    if (first) {
        first = false;
    } else {
        if (neg) {
            os << " - ";
            coeff = coeff.substr(1);
        } else {
            os << " + ";
        }
    }
    bool parens = coeff.find(' ') != std::string::npos;
    bool unit = (coeff == "1") && !mono.empty();
    bool munit = (coeff == "-1") && !mono.empty();
    if (munit) os << "-";
    else if (!unit) {
        if (parens) os << "(" << coeff << ")";
        else os << coeff;
        if (!mono.empty()) os << "*";
    }
    os << mono;
}

std::string kstr(const Scalar& s) { return s.str(); }
std::string kstr(const CNum& z) {
    std::ostringstream os;
    os << z.real().convert_to<double>();
    double im = z.imag().convert_to<double>();
    if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
    return os.str();
}

} // namespace

template <class K> std::string UniPoly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (value_is_zero(c[i])) continue;
        std::string mono;
        if (i > 0) {
            mono = var;
            if (i > 1) mono += "^" + std::to_string(i);
        }
        append_term(os, first, kstr(c[i]), mono);
    }
    return os.str();
}

template std::string UniPoly<Scalar>::str(const std::string&) const;
template std::string UniPoly<CNum>::str(const std::string&) const;

template <class K> std::string HomPoly2<K>::str(const std::string& xv, const std::string& yv) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
        if (value_is_zero(c[i])) continue;
        std::string mono;
        int xe = deg - i, ye = i;
        if (xe > 0) {
            mono += xv;
            if (xe > 1) mono += "^" + std::to_string(xe);
        }
        if (ye > 0) {
            if (!mono.empty()) mono += "*";
            mono += yv;
            if (ye > 1) mono += "^" + std::to_string(ye);
        }
        append_term(os, first, kstr(c[i]), mono);
    }
    return os.str();
}

template std::string HomPoly2<Scalar>::str(const std::string&, const std::string&) const;
template std::string HomPoly2<CNum>::str(const std::string&, const std::string&) const;

} // namespace webfolio
