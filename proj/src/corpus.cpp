#include "webfolio/prefoliation.hpp"

#include <map>

namespace webfolio {

namespace {

// small dense bivariate scratch type for expanding affine products
struct Affine2 {
    std::map<std::pair<int, int>, Scalar> m; // (i,j) -> coeff of x^i y^j

    static Affine2 term(int i, int j, const Scalar& v) {
        Affine2 a;
        if (!v.is_zero()) a.m[{i, j}] = v;
        return a;
    }
    friend Affine2 operator+(const Affine2& a, const Affine2& b) {
        Affine2 r = a;
        for (const auto& [k, v] : b.m) {
            auto it = r.m.find(k);
            if (it == r.m.end()) r.m[k] = v;
            else {
                it->second += v;
                if (it->second.is_zero()) r.m.erase(it);
            }
        }
        return r;
    }
    friend Affine2 operator*(const Affine2& a, const Affine2& b) {
        Affine2 r;
        for (const auto& [ka, va] : a.m)
            for (const auto& [kb, vb] : b.m) {
                auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
                auto it = r.m.find(key);
                if (it == r.m.end()) r.m[key] = va * vb;
                else {
                    it->second += va * vb;
                    if (it->second.is_zero()) r.m.erase(it);
                }
            }
        return r;
    }
    Affine2 operator-() const {
        Affine2 r = *this;
        for (auto& [k, v] : r.m) v = -v;
        return r;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [k, v] : m) d = std::max(d, k.first + k.second);
        return d;
    }
    // split into homogeneous pieces 0..n
    std::vector<HomPoly2<Scalar>> graded(int n) const {
        std::vector<HomPoly2<Scalar>> out;
        for (int i = 0; i <= n; ++i) out.push_back(HomPoly2<Scalar>::zero(i));
        for (const auto& [k, v] : m) {
            int deg = k.first + k.second;
            if (deg > n) throw DegenerateInput("affine expansion exceeds the declared degree");
            out[deg].c[k.second] += v; // index = y-exponent
        }
        return out;
    }
};

HomPoly2<Scalar> monomial2(int deg, int ypow, const Scalar& v) {
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[ypow] = v;
    return HomPoly2<Scalar>(deg, std::move(c));
}

GeneralFoliation from_affine(const Affine2& A, const Affine2& B, int n) {
    return GeneralFoliation(A.graded(n), B.graded(n));
}

Affine2 av(int i, int j, const Scalar& v) { return Affine2::term(i, j, v); }

} // namespace

FoliationHandle corpus_foliation(const std::string& name, int d, const CorpusParams& params) {
    auto need_lambda = [&]() {
        if (!params.lambda) throw ParameterError(name + " needs a lambda parameter");
        return *params.lambda;
    };
    auto need_mu = [&]() {
        if (!params.mu) throw ParameterError(name + " needs a mu parameter");
        return *params.mu;
    };

    if (name == "H0") {
        if (d < 3) throw ParameterError("H0 needs degree >= 3");
        // (d-2) y^{d-1} dx + x (x^{d-2} - (d-1) y^{d-2}) dy
        HomPoly2<Scalar> A = monomial2(d - 1, d - 1, Scalar(d - 2));
        HomPoly2<Scalar> B = monomial2(d - 1, 0, Scalar(1)) + monomial2(d - 1, d - 2, Scalar(1 - d));
        return HomFoliation(A, B);
    }
    if (name == "H1") {
        if (d < 3) throw ParameterError("H1 needs degree >= 3");
        // y^{d-1} dx - x^{d-1} dy
        return HomFoliation(monomial2(d - 1, d - 1, Scalar(1)), monomial2(d - 1, 0, Scalar(-1)));
    }
    if (name == "H2") {
        if (d < 3) throw ParameterError("H2 needs degree >= 3");
        Scalar la = need_lambda(), mu = need_mu();
        if ((la * mu + Scalar(1)).is_zero())
            throw ParameterError("H2 requires lambda*mu != -1");
        // (x^{d-1} + la y^{d-1}) dx + (mu x^{d-1} - y^{d-1}) dy
        HomPoly2<Scalar> A = monomial2(d - 1, 0, Scalar(1)) + monomial2(d - 1, d - 1, la);
        HomPoly2<Scalar> B = monomial2(d - 1, 0, mu) + monomial2(d - 1, d - 1, Scalar(-1));
        return HomFoliation(A, B);
    }
    if (name == "H3") {
        if (d < 3) throw ParameterError("H3 needs degree >= 3");
        Scalar la = need_lambda();
        if (la.is_zero()) throw ParameterError("H3 requires lambda != 0");
        // (x^{d-1} + la y^{d-1}) dx + x^{d-1} dy
        HomPoly2<Scalar> A = monomial2(d - 1, 0, Scalar(1)) + monomial2(d - 1, d - 1, la);
        HomPoly2<Scalar> B = monomial2(d - 1, 0, Scalar(1));
        return HomFoliation(A, B);
    }
    if (name == "H4") {
        if (d < 4) throw ParameterError("H4 needs degree >= 4 (sigma_d undefined below)");
        Scalar sigma = Scalar(Rat(d - 1, d - 3));
        // y (sigma x^{d-2} - y^{d-2}) dx + x (sigma y^{d-2} - x^{d-2}) dy
        HomPoly2<Scalar> A = monomial2(d - 1, 1, sigma) + monomial2(d - 1, d - 1, Scalar(-1));
        HomPoly2<Scalar> B = monomial2(d - 1, 0, Scalar(-1)) + monomial2(d - 1, d - 2, sigma);
        return HomFoliation(A, B);
    }
    if (name == "fermat") {
        if (d < 3) throw ParameterError("fermat needs degree >= 3");
        // x dy - y dx + y^{d-1} dx - x^{d-1} dy
        Affine2 A = av(0, 1, Scalar(-1)) + av(0, d - 1, Scalar(1));
        Affine2 B = av(1, 0, Scalar(1)) + av(d - 1, 0, Scalar(-1));
        return from_affine(A, B, d - 1);
    }
    if (name == "hesse4") {
        if (d != 5) throw ParameterError("hesse4 is the degree-5 pre-foliation corpus entry");
        // y(2x^3 - y^3 - 1) dx + x(2y^3 - x^3 - 1) dy
        Affine2 A = av(3, 1, Scalar(2)) + av(0, 4, Scalar(-1)) + av(0, 1, Scalar(-1));
        Affine2 B = av(1, 3, Scalar(2)) + av(4, 0, Scalar(-1)) + av(1, 0, Scalar(-1));
        return from_affine(A, B, 4);
    }
    if (name == "hilbert5") {
        if (d != 6) throw ParameterError("hilbert5 is the degree-6 pre-foliation corpus entry");
        // (y^2-1)(y^2-(s5-2)^2)(y + s5 x) dx - (x^2-1)(x^2-(s5-2)^2)(x + s5 y) dy
        Scalar s5 = Scalar(1) + Scalar(2) * (Scalar::zeta(5) + Scalar::zeta(5).pow(4));
        Scalar c2 = (s5 - Scalar(2)) * (s5 - Scalar(2));
        Affine2 A = (av(0, 2, Scalar(1)) + av(0, 0, Scalar(-1))) *
                    (av(0, 2, Scalar(1)) + av(0, 0, -c2)) *
                    (av(0, 1, Scalar(1)) + av(1, 0, s5));
        Affine2 B = -((av(2, 0, Scalar(1)) + av(0, 0, Scalar(-1))) *
                      (av(2, 0, Scalar(1)) + av(0, 0, -c2)) *
                      (av(1, 0, Scalar(1)) + av(0, 1, s5)));
        return from_affine(A, B, 5);
    }
    if (name == "hesse7") {
        if (d != 8) throw ParameterError("hesse7 is the degree-8 pre-foliation corpus entry");
        // (y^3-1)(y^3+7x^3+1) y dx - (x^3-1)(x^3+7y^3+1) x dy
        Affine2 A = (av(0, 3, Scalar(1)) + av(0, 0, Scalar(-1))) *
                    (av(0, 3, Scalar(1)) + av(3, 0, Scalar(7)) + av(0, 0, Scalar(1))) *
                    av(0, 1, Scalar(1));
        Affine2 B = -((av(3, 0, Scalar(1)) + av(0, 0, Scalar(-1))) *
                      (av(3, 0, Scalar(1)) + av(0, 3, Scalar(7)) + av(0, 0, Scalar(1))) *
                      av(1, 0, Scalar(1)));
        return from_affine(A, B, 7);
    }
    throw ParameterError("unknown corpus name: " + name);
}

std::vector<ProjLine> corpus_invariant_lines(const std::string& name, int d) {
    std::vector<ProjLine> lines;
    auto through = [](const Scalar& a, const Scalar& b, const Scalar& g) {
        return ProjLine(a, b, g);
    };
    Scalar one(1), zero(0);
    if (name == "fermat") {
        // x, y, z and (y - zeta^k x), (y - zeta^k z), (x - zeta^k z), zeta = zeta_{d-2}
        lines.push_back(through(one, zero, zero));
        lines.push_back(through(zero, one, zero));
        lines.push_back(ProjLine::line_at_infinity());
        for (int k = 0; k < d - 2; ++k) {
            Scalar zk = (d == 3) ? Scalar(1) : Scalar::zeta(d - 2).pow(k);
            lines.push_back(through(-zk, one, zero));
            lines.push_back(through(zero, one, -zk));
            lines.push_back(through(one, zero, -zk));
        }
        return lines;
    }
    if (name == "hesse4") {
        // xyz and the nine lines (a x + b y + c z) with cube-root coefficients
        Scalar z3 = Scalar::zeta(3);
        lines.push_back(through(one, zero, zero));
        lines.push_back(through(zero, one, zero));
        lines.push_back(ProjLine::line_at_infinity());
        lines.push_back(through(one, one, one));
        lines.push_back(through(z3, one, one));
        lines.push_back(through(one, z3, one));
        lines.push_back(through(one, one, z3));
        lines.push_back(through(z3 * z3, one, one));
        lines.push_back(through(one, z3 * z3, one));
        lines.push_back(through(one, one, z3 * z3));
        lines.push_back(through(z3 * z3, z3, one));
        lines.push_back(through(z3, z3 * z3, one));
        return lines;
    }
    throw ParameterError("invariant-line table not available for corpus name: " + name);
}

} // namespace webfolio
