#include "webfolio/prefoliation.hpp"

#include <array>
#include <sstream>

namespace webfolio {

// --------------------------- TriPoly ---------------------------------------

template <class K> bool TriPoly<K>::is_zero() const {
    for (const auto& plane : c)
        for (const auto& row : plane)
            for (const auto& v : row)
                if (!value_is_zero(v)) return false;
    return true;
}

template <class K> void TriPoly<K>::add_term(size_t k, size_t i, size_t j, const K& v) {
    if (value_is_zero(v)) return;
    if (c.size() <= k) c.resize(k + 1);
    if (c[k].size() <= i) c[k].resize(i + 1);
    if (c[k][i].size() <= j) c[k][i].resize(j + 1, K(0));
    c[k][i][j] = c[k][i][j] + v;
}

template <class K> K TriPoly<K>::coeff(size_t k, size_t i, size_t j) const {
    if (k >= c.size() || i >= c[k].size() || j >= c[k][i].size()) return K(0);
    return c[k][i][j];
}

template <class K> TriPoly<K> TriPoly<K>::partial_x() const {
    TriPoly r;
    for (size_t k = 1; k < c.size(); ++k)
        for (size_t i = 0; i < c[k].size(); ++i)
            for (size_t j = 0; j < c[k][i].size(); ++j)
                r.add_term(k - 1, i, j, c[k][i][j] * K(static_cast<long>(k)));
    return r;
}

template <class K> TriPoly<K> TriPoly<K>::partial_p() const {
    TriPoly r;
    for (size_t k = 0; k < c.size(); ++k)
        for (size_t i = 1; i < c[k].size(); ++i)
            for (size_t j = 0; j < c[k][i].size(); ++j)
                r.add_term(k, i - 1, j, c[k][i][j] * K(static_cast<long>(i)));
    return r;
}

template <class K> TriPoly<K> TriPoly<K>::partial_q() const {
    TriPoly r;
    for (size_t k = 0; k < c.size(); ++k)
        for (size_t i = 0; i < c[k].size(); ++i)
            for (size_t j = 1; j < c[k][i].size(); ++j)
                r.add_term(k, i, j - 1, c[k][i][j] * K(static_cast<long>(j)));
    return r;
}

template <class K> std::string TriPoly<K>::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k)
        for (size_t i = 0; i < c[k].size(); ++i)
            for (size_t j = 0; j < c[k][i].size(); ++j) {
                if (value_is_zero(c[k][i][j])) continue;
                if (!first) os << " + ";
                if constexpr (is_exact_field<K>::value) os << "(" << c[k][i][j].str() << ")";
                else os << "(#)";
                if (i) os << "*p^" << i;
                if (j) os << "*q^" << j;
                if (k) os << "*x^" << k;
                first = false;
            }
    if (first) os << "0";
    return os.str();
}

template struct TriPoly<Scalar>;
template struct TriPoly<CNum>;
template struct TriPoly<CFast>;

TriPoly<CNum> embed(const TriPoly<Scalar>& t) {
    TriPoly<CNum> r;
    for (size_t k = 0; k < t.c.size(); ++k)
        for (size_t i = 0; i < t.c[k].size(); ++i)
            for (size_t j = 0; j < t.c[k][i].size(); ++j)
                if (!t.c[k][i][j].is_zero()) r.add_term(k, i, j, t.c[k][i][j].embed());
    return r;
}

TriPoly<CFast> embed_fast(const TriPoly<Scalar>& t) {
    TriPoly<CFast> r;
    for (size_t k = 0; k < t.c.size(); ++k)
        for (size_t i = 0; i < t.c[k].size(); ++i)
            for (size_t j = 0; j < t.c[k][i].size(); ++j)
                if (!t.c[k][i][j].is_zero()) r.add_term(k, i, j, t.c[k][i][j].embed_fast());
    return r;
}

ImplicitWeb ImplicitWeb::swapped() const {
    ImplicitWeb w;
    w.order = order;
    w.vertical = 0;
    int D = F.x_degree();
    // x^(vertical) * x^D * F(q, p, 1/x)
    for (size_t k = 0; k < F.c.size(); ++k)
        for (size_t i = 0; i < F.c[k].size(); ++i)
            for (size_t j = 0; j < F.c[k][i].size(); ++j)
                if (!F.c[k][i][j].is_zero())
                    w.F.add_term(static_cast<size_t>(D) - k + vertical, j, i, F.c[k][i][j]);
    return w;
}

ImplicitWeb ImplicitWeb::scaled_by(const TriPoly<Scalar>& g) const {
    ImplicitWeb w = *this;
    w.F = F * g;
    return w;
}

// ------------------------ GeneralFoliation ---------------------------------

GeneralFoliation::GeneralFoliation(std::vector<HomPoly2<Scalar>> A, std::vector<HomPoly2<Scalar>> B)
    : n_(static_cast<int>(A.size()) - 1), A_(std::move(A)), B_(std::move(B)) {
    if (A_.size() != B_.size() || A_.empty())
        throw DegenerateInput("graded component lists must have equal nonzero length");
    for (int i = 0; i <= n_; ++i) {
        if (A_[i].deg != i || B_[i].deg != i)
            throw DegenerateInput("graded component of wrong degree");
    }
    if (A_[n_].is_zero() && B_[n_].is_zero())
        throw DegenerateInput("top graded component vanishes; lower the declared degree");
    // the chart must keep the line at infinity invariant
    HomPoly2<Scalar> x1(1, {Scalar(1), Scalar(0)}), y1(1, {Scalar(0), Scalar(1)});
    if ((x1 * A_[n_] + y1 * B_[n_]).is_zero())
        throw UnsupportedCase("line at infinity is not invariant in this chart");
}

HomFoliation GeneralFoliation::top() const { return HomFoliation(A_[n_], B_[n_]); }

void GeneralFoliation::homogeneous_form(std::vector<std::vector<Scalar>>& P,
                                        std::vector<std::vector<Scalar>>& Q,
                                        std::vector<std::vector<Scalar>>& R) const {
    // Components of Omega = sum_i z^{n-i} (A_i (z dx - x dz) + B_i (z dy - y dz)),
    // stored as dense (degree in z) x (coeff vector of the binary part).
    // P[k] holds the binary form multiplying z^k in the dx-component, etc.
    int n = n_;
    P.assign(n + 2, {});
    Q.assign(n + 2, {});
    R.assign(n + 2, {});
    HomPoly2<Scalar> x1(1, {Scalar(1), Scalar(0)}), y1(1, {Scalar(0), Scalar(1)});
    for (int i = 0; i <= n; ++i) {
        // z^{n-i+1} A_i -> P; z^{n-i+1} B_i -> Q; -z^{n-i} C_i -> R
        int zp = n - i + 1;
        auto put = [](std::vector<std::vector<Scalar>>& dst, int zpow, const HomPoly2<Scalar>& f) {
            if (dst[zpow].empty()) dst[zpow].assign(f.deg + 1, Scalar(0));
            for (int t = 0; t <= f.deg; ++t) dst[zpow][t] += f.c[t];
        };
        put(P, zp, A_[i]);
        put(Q, zp, B_[i]);
        HomPoly2<Scalar> Ci = x1 * A_[i] + y1 * B_[i];
        put(R, zp - 1, -Ci);
    }
}

std::string GeneralFoliation::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= n_; ++i) {
        if (A_[i].is_zero() && B_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << A_[i].str() << ") dx + (" << B_[i].str() << ") dy";
        first = false;
    }
    return os.str();
}

int foliation_degree(const FoliationHandle& f) {
    if (std::holds_alternative<HomFoliation>(f)) return std::get<HomFoliation>(f).foliation_degree();
    return std::get<GeneralFoliation>(f).degree();
}

PreFoliation::PreFoliation(ProjLine l, FoliationHandle f) : line(std::move(l)), fol(std::move(f)) {
    if (homogeneous() && !line.through_origin_p() && !line.is_line_at_infinity())
        throw PreconditionError(
            "a homogeneous pre-foliation needs its line through the origin or at infinity");
}

// ------------------------ line invariance ----------------------------------

namespace {

// Evaluate a z-graded binary-form stack at a projective point.
Scalar eval_stack(const std::vector<std::vector<Scalar>>& stack, const Scalar& x, const Scalar& y,
                  const Scalar& z) {
    Scalar acc(0), zp(1);
    for (size_t k = 0; k < stack.size(); ++k) {
        if (!stack[k].empty()) {
            int deg = static_cast<int>(stack[k].size()) - 1;
            HomPoly2<Scalar> f(deg, stack[k]);
            acc += f.eval(x, y) * zp;
        }
        zp = zp * z;
    }
    return acc;
}

bool omega_annihilates_line(const std::vector<std::vector<Scalar>>& P,
                            const std::vector<std::vector<Scalar>>& Q,
                            const std::vector<std::vector<Scalar>>& R, const ProjLine& line) {
    // two independent points spanning the line
    std::array<std::array<Scalar, 3>, 3> cands = {
        std::array<Scalar, 3>{line.be, -line.al, Scalar(0)},
        std::array<Scalar, 3>{line.ga, Scalar(0), -line.al},
        std::array<Scalar, 3>{Scalar(0), line.ga, -line.be}};
    std::vector<std::array<Scalar, 3>> pts;
    for (const auto& v : cands) {
        if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
        bool dup = false;
        for (const auto& w : pts) {
            // rank test: all 2x2 minors vanish
            bool prop = (v[0] * w[1] - v[1] * w[0]).is_zero() &&
                        (v[0] * w[2] - v[2] * w[0]).is_zero() &&
                        (v[1] * w[2] - v[2] * w[1]).is_zero();
            if (prop) dup = true;
        }
        if (!dup) pts.push_back(v);
        if (pts.size() == 2) break;
    }
    if (pts.size() < 2) throw MathError("could not parameterize the line");

    // Omega_{p0 + t p1}(p1) must vanish identically in t; evaluating at more
    // integer points than its degree certifies the zero polynomial.
    const auto& p0 = pts[0];
    const auto& p1 = pts[1];
    int tdeg = 0;
    for (const auto& stack : {P, Q, R}) tdeg = std::max<int>(tdeg, static_cast<int>(stack.size()) + 8);
    for (long t = 0; t <= tdeg; ++t) {
        Scalar ts(t);
        Scalar x = p0[0] + ts * p1[0], y = p0[1] + ts * p1[1], z = p0[2] + ts * p1[2];
        Scalar val = eval_stack(P, x, y, z) * p1[0] + eval_stack(Q, x, y, z) * p1[1] +
                     eval_stack(R, x, y, z) * p1[2];
        if (!val.is_zero()) return false;
    }
    return true;
}

void hom_form_of(const FoliationHandle& f, std::vector<std::vector<Scalar>>& P,
                 std::vector<std::vector<Scalar>>& Q, std::vector<std::vector<Scalar>>& R) {
    if (std::holds_alternative<GeneralFoliation>(f)) {
        std::get<GeneralFoliation>(f).homogeneous_form(P, Q, R);
        return;
    }
    const HomFoliation& h = std::get<HomFoliation>(f);
    int n = h.foliation_degree();
    P.assign(2, {});
    Q.assign(2, {});
    R.assign(2, {});
    P[1].assign(n + 1, Scalar(0));
    Q[1].assign(n + 1, Scalar(0));
    for (int t = 0; t <= n; ++t) {
        P[1][t] = h.A().c[t];
        Q[1][t] = h.B().c[t];
    }
    R[0].assign(n + 2, Scalar(0));
    for (int t = 0; t <= n + 1; ++t) R[0][t] = -h.tangent_cone().c[t];
}

} // namespace

bool is_line_invariant(const FoliationHandle& f, const ProjLine& line) {
    std::vector<std::vector<Scalar>> P, Q, R;
    hom_form_of(f, P, Q, R);
    return omega_annihilates_line(P, Q, R, line);
}

bool is_line_invariant(const HomFoliation& h, const ProjLine& line) {
    if (line.is_line_at_infinity()) return true;
    if (line.through_origin_p()) return h.direction_fixed(line.origin_direction());
    return is_line_invariant(FoliationHandle(h), line);
}

// ------------------------ Legendre web -------------------------------------

namespace {

// substitute y -> p*x - q into a binary form, yielding a TriPoly
TriPoly<Scalar> substitute_dual(const HomPoly2<Scalar>& f) {
    TriPoly<Scalar> out;
    int d = f.deg;
    // x^{d-m} (p x - q)^m
    std::vector<std::vector<Rat>> binom(d + 1, std::vector<Rat>(d + 1, Rat(0)));
    for (int m = 0; m <= d; ++m) {
        binom[m][0] = 1;
        for (int j = 1; j <= m; ++j)
            binom[m][j] = binom[m - 1][j - 1] + (j <= m - 1 ? binom[m - 1][j] : Rat(0));
    }
    for (int m = 0; m <= d; ++m) {
        if (value_is_zero(f.c[m])) continue;
        for (int j = 0; j <= m; ++j) {
            Scalar coef = f.c[m] * Scalar(binom[m][j]) * Scalar(((m - j) % 2 == 0) ? 1 : -1);
            out.add_term(static_cast<size_t>(d - m + j), static_cast<size_t>(j),
                         static_cast<size_t>(m - j), coef);
        }
    }
    return out;
}

TriPoly<Scalar> legendre_core(const FoliationHandle& f) {
    // A(x, px-q) + p B(x, px-q), summed over graded components
    TriPoly<Scalar> acc;
    TriPoly<Scalar> p_factor;
    p_factor.add_term(0, 1, 0, Scalar(1));
    auto add_pair = [&acc, &p_factor](const HomPoly2<Scalar>& A, const HomPoly2<Scalar>& B) {
        if (!A.is_zero()) acc = acc + substitute_dual(A);
        if (!B.is_zero()) acc = acc + p_factor * substitute_dual(B);
    };
    if (std::holds_alternative<HomFoliation>(f)) {
        const auto& h = std::get<HomFoliation>(f);
        add_pair(h.A(), h.B());
    } else {
        const auto& g = std::get<GeneralFoliation>(f);
        for (int i = 0; i <= g.degree(); ++i) add_pair(g.A(i), g.B(i));
    }
    return acc;
}

} // namespace

ImplicitWeb legendre_web(const FoliationHandle& f) {
    ImplicitWeb w;
    w.order = foliation_degree(f);
    w.vertical = 0;
    w.F = legendre_core(f);
    return w;
}

ImplicitWeb legendre_web(const PreFoliation& pref) {
    ImplicitWeb w;
    w.order = pref.degree();
    w.F = legendre_core(pref.fol);
    if (pref.line.is_line_at_infinity()) {
        w.vertical = 1;
    } else {
        // line alpha x + beta y + gamma = 0 contributes (gamma - beta q) + (alpha + beta p) x
        TriPoly<Scalar> lf;
        lf.add_term(0, 0, 0, pref.line.ga);
        lf.add_term(0, 0, 1, -pref.line.be);
        lf.add_term(1, 0, 0, pref.line.al);
        lf.add_term(1, 1, 0, pref.line.be);
        w.F = w.F * lf;
        w.vertical = 0;
    }
    return w;
}

// ------------------------ discriminant -------------------------------------

std::string DiscComponent::str() const {
    if (origin_dual) return "{q = 0}";
    if (p0.infinite) return "{p = infinity}";
    return "{p = " + (p0.exact ? p0.z.str() : p0.str()) + "}";
}

DiscriminantDecomposition discriminant(const PreFoliation& preh) {
    if (!preh.homogeneous())
        throw UnsupportedCase("discriminant decomposition is computed for homogeneous "
                              "pre-foliations only");
    const HomFoliation& h = preh.hom();
    const ProjLine& line = preh.line;
    DiscriminantDecomposition out;

    auto find_component = [&out](const P1Point& p0) -> DiscComponent* {
        for (auto& comp : out.components)
            if (!comp.origin_dual && comp.p0.same_as(p0)) return &comp;
        return nullptr;
    };
    auto add_component = [&](const P1Point& p0, const std::string& tag) -> DiscComponent& {
        if (DiscComponent* existing = find_component(p0)) return *existing;
        DiscComponent comp;
        comp.p0 = p0;
        comp.tag = tag;
        out.components.push_back(std::move(comp));
        return out.components.back();
    };

    // images of transverse inflection lines (non-fixed critical points)
    for (const auto& cp : h.gauss().criticals)
        if (!cp.fixed) add_component(h.gauss_image(cp.pt), "transverse-inflection-image");

    if (line.is_line_at_infinity()) {
        // duals of every singular point on the line at infinity
        for (const auto& s : h.singularities())
            if (!s.at_origin) add_component(s.direction, "infinity-singularity-dual");
    } else {
        // duals of radial singularities
        for (const auto& cp : h.gauss().criticals)
            if (cp.fixed) add_component(cp.pt, "radial-singularity-dual");
        // the line component D_ell
        bool invariant = is_line_invariant(h, line);
        P1Point dir = line.origin_direction();
        P1Point dl = invariant ? dir : h.gauss_image(dir);
        DiscComponent& comp = add_component(dl, "line-component");
        comp.covers_line_component = true;
    }

    DiscComponent origin;
    origin.origin_dual = true;
    origin.tag = "origin-dual";
    out.components.push_back(std::move(origin));
    return out;
}

// ------------------------ homogenization -----------------------------------

namespace {

// 3x3 exact inverse
std::array<std::array<Scalar, 3>, 3> invert3(const std::array<std::array<Scalar, 3>, 3>& m) {
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    Scalar det = m[0][0] * det2(1, 2, 1, 2) - m[0][1] * det2(1, 2, 0, 2) + m[0][2] * det2(1, 2, 0, 1);
    if (det.is_zero()) throw MathError("singular coordinate change");
    std::array<std::array<Scalar, 3>, 3> inv;
    int idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar cof = det2(idx[j][0], idx[j][1], idx[i][0], idx[i][1]);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof / det;
        }
    return inv;
}

} // namespace

HomogenizationResult homogenize(const PreFoliation& pref, const ProjLine& invariant_line) {
    if (!is_line_invariant(pref.fol, invariant_line))
        throw PreconditionError("the chosen line is not invariant by the foliation");

    int n = foliation_degree(pref.fol);

    // coordinate change sending the line to {z = 0}
    std::array<std::array<Scalar, 3>, 3> M;
    std::array<Scalar, 3> lrow = {invariant_line.al, invariant_line.be, invariant_line.ga};
    std::array<std::array<Scalar, 3>, 3> basis = {std::array<Scalar, 3>{Scalar(1), Scalar(0), Scalar(0)},
                                                  std::array<Scalar, 3>{Scalar(0), Scalar(1), Scalar(0)},
                                                  std::array<Scalar, 3>{Scalar(0), Scalar(0), Scalar(1)}};
    bool built = false;
    for (int i = 0; i < 3 && !built; ++i)
        for (int j = i + 1; j < 3 && !built; ++j) {
            M[0] = basis[i];
            M[1] = basis[j];
            M[2] = lrow;
            Scalar det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
            if (!det.is_zero()) built = true;
        }
    if (!built) throw MathError("could not complete the coordinate change");
    auto Minv = invert3(M);

    // transform Omega: P'_j(w) = sum_i Minv[i][j] P_i(Minv w)
    std::vector<std::vector<Scalar>> P, Q, R;
    hom_form_of(pref.fol, P, Q, R);

    // dense trivariate representation of a stack
    auto stack_terms = [](const std::vector<std::vector<Scalar>>& st) {
        std::vector<std::tuple<int, int, int, Scalar>> terms; // x^a y^b z^k
        for (size_t k = 0; k < st.size(); ++k) {
            if (st[k].empty()) continue;
            int deg = static_cast<int>(st[k].size()) - 1;
            for (int t = 0; t <= deg; ++t)
                if (!st[k][t].is_zero())
                    terms.emplace_back(deg - t, t, static_cast<int>(k), st[k][t]);
        }
        return terms;
    };

    // evaluate transformed components as graded affine data (z = 1) directly:
    // for each original component i, substitute v = Minv * (x, y, 1).
    // Work with dense bivariate truncated polynomials via HomPoly2 stacks.
    struct Bivar {
        // coefficient of x^a y^b
        std::vector<std::vector<Scalar>> m;
        void add(int a, int b, const Scalar& v) {
            if (static_cast<int>(m.size()) <= a) m.resize(a + 1);
            if (static_cast<int>(m[a].size()) <= b) m[a].resize(b + 1, Scalar(0));
            m[a][b] += v;
        }
        Scalar get(int a, int b) const {
            if (a >= static_cast<int>(m.size()) || b >= static_cast<int>(m[a].size()))
                return Scalar(0);
            return m[a][b];
        }
    };

    auto mul_linear = [](const Bivar& f, const Scalar& cx, const Scalar& cy, const Scalar& c1) {
        Bivar r;
        for (int a = 0; a < static_cast<int>(f.m.size()); ++a)
            for (int b = 0; b < static_cast<int>(f.m[a].size()); ++b) {
                Scalar v = f.m[a][b];
                if (v.is_zero()) continue;
                if (!cx.is_zero()) r.add(a + 1, b, v * cx);
                if (!cy.is_zero()) r.add(a, b + 1, v * cy);
                if (!c1.is_zero()) r.add(a, b, v * c1);
            }
        return r;
    };

    // linear forms Minv row evaluated at (x, y, 1)
    std::array<std::array<Scalar, 3>, 3> lin; // lin[i] = (cx, cy, c1) for coordinate i
    for (int i = 0; i < 3; ++i) lin[i] = {Minv[i][0], Minv[i][1], Minv[i][2]};

    auto transformed_component = [&](int j) {
        // P'_j = sum_i Minv[i][j] * comp_i(Minv (x,y,1))
        Bivar acc;
        const std::vector<std::vector<Scalar>>* stacks[3] = {&P, &Q, &R};
        for (int i = 0; i < 3; ++i) {
            if (Minv[i][j].is_zero()) continue;
            for (const auto& [a, b, k, coef] : stack_terms(*stacks[i])) {
                // coef * L0^a L1^b L2^k, Lm = lin[m]
                Bivar term;
                term.add(0, 0, coef * Minv[i][j]);
                for (int rep = 0; rep < a; ++rep) term = mul_linear(term, lin[0][0], lin[0][1], lin[0][2]);
                for (int rep = 0; rep < b; ++rep) term = mul_linear(term, lin[1][0], lin[1][1], lin[1][2]);
                for (int rep = 0; rep < k; ++rep) term = mul_linear(term, lin[2][0], lin[2][1], lin[2][2]);
                for (int aa = 0; aa < static_cast<int>(term.m.size()); ++aa)
                    for (int bb = 0; bb < static_cast<int>(term.m[aa].size()); ++bb)
                        acc.add(aa, bb, term.m[aa][bb]);
            }
        }
        return acc;
    };

    Bivar Pp = transformed_component(0), Qp = transformed_component(1);

    // extract graded pieces A_i, B_i of degree i (0..n) from the affine forms;
    // validity requires total degree <= n (the line at infinity is invariant
    // in the new chart because D was invariant).
    std::vector<HomPoly2<Scalar>> As, Bs;
    for (int i = 0; i <= n; ++i) {
        std::vector<Scalar> ac(i + 1, Scalar(0)), bc(i + 1, Scalar(0));
        for (int t = 0; t <= i; ++t) {
            ac[t] = Pp.get(i - t, t);
            bc[t] = Qp.get(i - t, t);
        }
        As.emplace_back(i, std::move(ac));
        Bs.emplace_back(i, std::move(bc));
    }
    for (int a = n + 1; a < static_cast<int>(std::max(Pp.m.size(), Qp.m.size())) + 2; ++a) {
        for (int b = 0; a + b < static_cast<int>(std::max(Pp.m.size(), Qp.m.size())) + 2; ++b) {
            if (!Pp.get(a, b).is_zero() || !Qp.get(a, b).is_zero())
                throw MathError("transformed form exceeds the expected degree");
        }
    }

    HomFoliation H(As[n], Bs[n]);

    // precondition: all singularities on the invariant line non-degenerate
    for (const auto& s : H.singularities()) {
        if (s.at_origin) continue;
        if (!s.nondegenerate)
            throw PreconditionError("degenerate singularity on the invariant line at direction " +
                                    s.direction.str());
    }

    // transform the pre-foliation line and keep its through-origin part
    Scalar alp = Minv[0][0] * pref.line.al + Minv[1][0] * pref.line.be + Minv[2][0] * pref.line.ga;
    Scalar bep = Minv[0][1] * pref.line.al + Minv[1][1] * pref.line.be + Minv[2][1] * pref.line.ga;
    ProjLine l0 = (alp.is_zero() && bep.is_zero()) ? ProjLine::line_at_infinity()
                                                   : ProjLine(alp, bep, Scalar(0));

    HomogenizationResult res{PreFoliation(l0, FoliationHandle(H)), true, ""};

    // postcondition checks: the moved foliation keeps the line at infinity
    // invariant, cuts it in the same singular set, and the eigenvalue data
    // along it agrees with the homogeneous part
    GeneralFoliation moved(As, Bs);
    std::ostringstream detail;
    bool same_cone = (moved.top().tangent_cone() == H.tangent_cone());
    bool invariant_ok = is_line_invariant(FoliationHandle(moved), ProjLine::line_at_infinity());
    bool cs_ok = true;
    UniPoly<Scalar> cprime = H.tangent_cone().dehomogenize().derivative();
    for (const auto& s : H.singularities()) {
        if (s.at_origin || !s.nondegenerate || !s.cs || !s.cs->exact) continue;
        if (s.direction.infinite || !s.direction.exact) continue;
        Scalar tangent = cprime.eval(s.direction.z);
        Scalar transverse = moved.B(n).eval(Scalar(1), s.direction.z);
        if (tangent.is_zero() || !(transverse / tangent == s.cs->s)) cs_ok = false;
    }
    detail << "singular-set-match=" << (same_cone ? "yes" : "no")
           << " line-invariant=" << (invariant_ok ? "yes" : "no")
           << " cs-match=" << (cs_ok ? "yes" : "no");
    res.checks_pass = same_cone && invariant_ok && cs_ok;
    res.detail = detail.str();
    return res;
}

// ------------------------ reduced convexity --------------------------------

bool is_convex_reduced(const PreFoliation& pref, const std::vector<ProjLine>& candidate_lines) {
    for (size_t i = 0; i < candidate_lines.size(); ++i)
        for (size_t j = i + 1; j < candidate_lines.size(); ++j)
            if (candidate_lines[i] == candidate_lines[j])
                throw DegenerateInput("duplicate candidate line");
    int n = foliation_degree(pref.fol);
    if (static_cast<int>(candidate_lines.size()) != 3 * n) return false;
    for (const auto& line : candidate_lines)
        if (!is_line_invariant(pref.fol, line)) return false;
    return is_line_invariant(pref.fol, pref.line);
}

} // namespace webfolio
