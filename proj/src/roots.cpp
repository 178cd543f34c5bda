#include "webfolio/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace webfolio {

std::vector<CNum> aberth_roots(const UniPoly<CNum>& p, int max_iter) {
    int n = p.degree();
    if (n <= 0) return {};
    UniPoly<CNum> dp = p.derivative();

    // Cauchy-style radius for initial guesses.
    Real radius(1);
    Real lead = abs(p.c.back());
    for (int i = 0; i < n; ++i) {
        Real r = abs(p.c[i]) / lead;
        if (r > radius) radius = r;
    }
    radius += 1;

    std::vector<CNum> z(n);
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * 3.14159265358979323846 * (j + 0.3761) / n + 0.5 / (n + 1);
        z[j] = radius * CNum(std::cos(th), std::sin(th)) * CNum(Real(1) + Real(j) / (8 * n));
    }

    const Real eps("1e-34");
    for (int it = 0; it < max_iter; ++it) {
        Real worst(0);
        for (int j = 0; j < n; ++j) {
            CNum pv = p.eval(z[j]);
            CNum dv = dp.eval(z[j]);
            if (dv == CNum(0)) {
                z[j] += CNum(Real("1e-3"), Real("2e-3"));
                worst = 1;
                continue;
            }
            CNum newton = pv / dv;
            CNum sum(0);
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                CNum diff = z[j] - z[k];
                if (diff == CNum(0)) diff = CNum(Real("1e-20"));
                sum += 1 / diff;
            }
            CNum denom = CNum(1) - newton * sum;
            CNum w = (denom == CNum(0)) ? newton : newton / denom;
            z[j] -= w;
            Real step = abs(w) / (1 + abs(z[j]));
            if (step > worst) worst = step;
        }
        if (worst < eps) return z;
    }
    std::vector<double> residuals;
    for (const auto& r : z) residuals.push_back(abs(p.eval(r)).convert_to<double>());
    throw NumericFailure("root iteration did not converge at the requested precision", residuals);
}

namespace {

// Try to certify one exact m-th root r0 of w (so the full root set of
// z^m = w is r0 * zeta_m^j). Requires w = q * zeta_n^k with q^(1/m) in Q.
std::optional<Scalar> cyclotomic_nth_root(const Cyclo& w, unsigned m, unsigned max_conductor) {
    auto mono = w.monomial_form();
    if (!mono) return std::nullopt;
    Rat q = mono->first;
    unsigned n = w.conductor(), k = mono->second;
    if (q < 0) { // fold the sign into the root of unity
        unsigned n2 = 2 * n;
        if (n2 > max_conductor) return std::nullopt;
        q = -q;
        k = (n + 2 * k) % n2;
        n = n2;
    }
    auto s = rat_nth_root(q, m);
    if (!s) return std::nullopt;
    unsigned big = n * m;
    if (big > max_conductor) return std::nullopt;
    return Scalar(Cyclo(*s) * Cyclo::zeta_pow(big, static_cast<long>(k)));
}

// Numeric snap: propose q * zeta_N^k close to the numeric root, for every
// conductor N up to the bound. Verification happens in the caller.
std::vector<Scalar> snap_candidates(const CNum& zhat, unsigned max_conductor) {
    std::vector<Scalar> out;
    const Real tol("1e-28");
    const Int den_bound(1000000);
    Real r = abs(zhat);
    if (r < tol) return out; // zero is a linear-factor case anyway
    auto push_unique = [&out](const Scalar& s) {
        for (const auto& x : out)
            if (x == s) return;
        out.push_back(s);
    };
    for (unsigned N = 1; N <= max_conductor; ++N) {
        // angles 2*pi*k/N: test k with gcd-free redundancy left in (cheap)
        CNum zeta = Cyclo::zeta(N).embed();
        CNum u = zhat;
        for (unsigned k = 0; k < N; ++k) {
            if (k > 0) u = u / zeta;
            if (abs(u.imag()) > tol * (1 + abs(u.real()))) continue;
            auto q = rationalize(u.real(), den_bound, tol);
            if (!q || *q == 0) continue;
            push_unique(Scalar(Cyclo(*q) * Cyclo::zeta_pow(N, k)));
            break; // at most one monomial form per conductor
        }
        if (out.size() > 24) break;
    }
    return out;
}

} // namespace

UniPoly<Scalar> extract_exact_roots(UniPoly<Scalar> v, const RootOptions& opts,
                                    std::vector<Scalar>& out) {
    auto deflate_root = [&v, &out](const Scalar& r) {
        UniPoly<Scalar> lin(std::vector<Scalar>{-r, Scalar(1)});
        v = unipoly_div_exact(v, lin);
        out.push_back(r);
    };

    // supplied candidates first
    for (const auto& cand : opts.candidates) {
        if (v.degree() < 1) break;
        if (v.eval(cand).is_zero()) deflate_root(cand);
    }
    if (v.degree() == 1) {
        deflate_root(-v.c[0] / v.c[1]);
        return v;
    }
    if (v.degree() < 1) return v;

    // binomial a*z^m + b
    {
        bool binomial = true;
        for (int i = 1; i < v.degree(); ++i)
            if (!v.c[i].is_zero()) binomial = false;
        if (binomial && !v.c[0].is_zero()) {
            unsigned m = static_cast<unsigned>(v.degree());
            Scalar w = -v.c[0] / v.c.back();
            if (w.t_free()) {
                auto r0 = cyclotomic_nth_root(w.constant(), m, opts.max_conductor);
                if (r0 && std::lcm(r0->conductor(), m) <= opts.max_conductor) {
                    for (unsigned j = 0; j < m; ++j) {
                        Scalar r = *r0 * Scalar::zeta(m).pow(j);
                        if (v.eval(r).is_zero()) deflate_root(r);
                    }
                }
            }
        }
    }
    if (v.degree() == 1) {
        deflate_root(-v.c[0] / v.c[1]);
        return v;
    }
    if (v.degree() < 1) return v;

    // numeric snap, verified exactly
    std::vector<CNum> approx;
    try {
        approx = aberth_roots(embed(v));
    } catch (const NumericFailure&) {
        return v; // leave the rest numeric-only to the caller
    }
    for (const auto& zhat : approx) {
        if (v.degree() < 1) break;
        if (abs(zhat) < Real("1e-28") && v.c[0].is_zero()) {
            deflate_root(Scalar(0));
            continue;
        }
        for (const auto& cand : snap_candidates(zhat, opts.max_conductor)) {
            if (v.eval(cand).is_zero()) {
                deflate_root(cand);
                break;
            }
        }
    }
    if (v.degree() == 1) deflate_root(-v.c[0] / v.c[1]);
    return v;
}

std::vector<std::pair<P1Point, int>> roots_p1(const HomPoly2<Scalar>& p, const RootOptions& opts) {
    if (p.is_zero()) throw DegenerateInput("roots of the zero form");
    std::vector<std::pair<P1Point, int>> out;

    int e = p.x_deficiency();
    UniPoly<Scalar> u = p.dehomogenize();
    if (!u.is_zero() && u.degree() >= 1) {
        for (const auto& [factor, mult] : squarefree_decompose(u)) {
            if (factor.degree() < 1) continue;
            std::vector<Scalar> exact;
            UniPoly<Scalar> rest = extract_exact_roots(factor, opts, exact);
            for (const auto& r : exact) out.emplace_back(P1Point::from_exact(r), mult);
            if (rest.degree() >= 1) {
                for (const auto& zhat : aberth_roots(embed(rest)))
                    out.emplace_back(P1Point::from_numeric(zhat), mult);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return p1_order(a.first, b.first); });
    if (e > 0) out.emplace_back(P1Point::at_infinity(), e);

    int total = 0;
    for (const auto& [pt, m] : out) total += m;
    if (total != p.deg) throw MathError("root multiplicities do not sum to the degree");
    return out;
}

} // namespace webfolio
