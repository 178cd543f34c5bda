#include "webfolio/foliation.hpp"

#include <sstream>

namespace webfolio {

namespace {

Real numeric_scale(const HomPoly2<CNum>& p, const CNum& z) {
    Real s(0), zp = std::max(Real(1), abs(z));
    Real acc(1);
    for (int i = 0; i <= p.deg; ++i) {
        s += abs(p.c[i]) * acc;
        acc *= zp;
    }
    return std::max(s, Real(1));
}

// exact-or-numeric membership of a direction in the zero set of a form
bool vanishes_at(const HomPoly2<Scalar>& p, const P1Point& pt) {
    if (pt.exact) {
        if (pt.infinite) return p.x_deficiency() >= 1;
        return p.eval(Scalar(1), pt.z).is_zero();
    }
    HomPoly2<CNum> pn = embed(p);
    CNum v = pn.eval(CNum(1), pt.zn);
    return abs(v) < Real("1e-25") * numeric_scale(pn, pt.zn);
}

} // namespace

HomFoliation::HomFoliation(HomPoly2<Scalar> A, HomPoly2<Scalar> B)
    : d_(A.deg + 1), A_(std::move(A)), B_(std::move(B)), cone_(HomPoly2<Scalar>::zero(2)) {
    if (A_.deg != B_.deg) throw DegenerateInput("dx and dy parts must have equal degree");
    if (A_.deg < 1) throw DegenerateInput("foliation degree must be at least 1");
    if (A_.is_zero() && B_.is_zero()) throw DegenerateInput("zero 1-form");
    HomPoly2<Scalar> g = hompoly_gcd(A_, B_);
    if (g.deg != 0)
        throw PreconditionError("the defining pair has a common factor (" + g.str() +
                                "); saturate the 1-form first");
    HomPoly2<Scalar> x1(1, {Scalar(1), Scalar(0)}), y1(1, {Scalar(0), Scalar(1)});
    cone_ = x1 * A_ + y1 * B_;
    if (cone_.is_zero())
        throw DegenerateInput("tangent cone vanishes identically; the 1-form is radial");
}

HomPoly2<Scalar> HomFoliation::critical_divisor() const {
    HomPoly2<Scalar> w = A_ * B_.partial_y() - A_.partial_y() * B_;
    // the top y-coefficient cancels identically, so w = x * w0
    if (!value_is_zero(w.c[w.deg])) throw MathError("critical divisor shape violated");
    std::vector<Scalar> c(w.c.begin(), w.c.end() - 1);
    HomPoly2<Scalar> w0(w.deg - 1, std::move(c));
    if (w0.is_zero()) throw DegenerateInput("slope map is constant");
    return w0;
}

const GaussAnalysis& HomFoliation::gauss() const {
    if (gauss_cache_) return *gauss_cache_;
    auto analysis = std::make_shared<GaussAnalysis>();
    RootOptions opts;
    auto cone_roots = roots_p1(cone_, opts);
    for (const auto& [pt, m] : cone_roots)
        if (pt.exact && !pt.infinite) opts.candidates.push_back(pt.z);

    HomPoly2<Scalar> w0 = critical_divisor();
    if (w0.deg >= 1) {
        for (const auto& [pt, m] : roots_p1(w0, opts)) {
            CriticalPoint cp;
            cp.pt = pt;
            cp.ram = m + 1;
            cp.fixed = vanishes_at(cone_, pt);
            if (cp.fixed) {
                for (const auto& [cr, cm] : cone_roots)
                    if (cr.same_as(pt)) cp.fixed_mult = cm;
            }
            if (!pt.exact) analysis->exact = false;
            analysis->criticals.push_back(std::move(cp));
        }
    }
    gauss_cache_ = analysis;
    return *gauss_cache_;
}

GaussAnalysis HomFoliation::gauss_numeric() const { return gauss(); }

P1Point HomFoliation::gauss_image(const P1Point& dir) const {
    if (dir.exact) {
        Scalar av = A_.eval(dir.b(), dir.a());
        Scalar bv = B_.eval(dir.b(), dir.a());
        if (av.is_zero() && bv.is_zero()) throw MathError("slope map undefined at the direction");
        return P1Point::from_pair(-av, bv);
    }
    bool inf = false;
    CNum img = gauss_image_numeric(dir.zn, dir.infinite, inf);
    if (inf) return P1Point::at_infinity();
    return P1Point::from_numeric(img);
}

CNum HomFoliation::gauss_image_numeric(const CNum& z, bool at_infinity, bool& image_infinite) const {
    HomPoly2<CNum> an = embed(A_), bn = embed(B_);
    CNum x = at_infinity ? CNum(0) : CNum(1);
    CNum y = at_infinity ? CNum(1) : z;
    CNum av = an.eval(x, y), bv = bn.eval(x, y);
    Real scale = numeric_scale(bn, at_infinity ? CNum(0) : z);
    if (abs(bv) < Real("1e-30") * scale) {
        image_infinite = true;
        return CNum(0);
    }
    image_infinite = false;
    return -av / bv;
}

HomPoly2<Scalar> HomFoliation::fiber_form(const P1Point& p0) const {
    if (p0.infinite) return B_;
    if (!p0.exact) throw PreconditionError("exact fiber form needs an exact value");
    return A_ + B_ * p0.z;
}

bool HomFoliation::direction_fixed(const P1Point& dir) const { return vanishes_at(cone_, dir); }

int HomFoliation::cone_multiplicity(const P1Point& dir) const {
    if (dir.infinite) return cone_.x_deficiency();
    if (!dir.exact) throw PreconditionError("cone multiplicity needs an exact direction");
    UniPoly<Scalar> u = cone_.dehomogenize();
    int m = 0;
    UniPoly<Scalar> lin(std::vector<Scalar>{-dir.z, Scalar(1)});
    while (!u.is_zero() && u.eval(dir.z).is_zero()) {
        u = unipoly_div_exact(u, lin);
        ++m;
    }
    return m;
}

FoliationType HomFoliation::type() const {
    FoliationType t;
    for (const auto& c : gauss().criticals) {
        if (c.fixed) t.radial[c.ram - 1]++;
        else t.transverse[c.ram - 1]++;
    }
    return t;
}

int FoliationType::degree() const {
    int n = 0;
    for (const auto& [k, c] : radial) n += c;
    for (const auto& [k, c] : transverse) n += c;
    return n;
}

int FoliationType::weighted_sum() const {
    int n = 0;
    for (const auto& [k, c] : radial) n += k * c;
    for (const auto& [k, c] : transverse) n += k * c;
    return n;
}

std::string FoliationType::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : radial) {
        if (!first) os << " + ";
        os << c << "*R_" << k;
        first = false;
    }
    for (const auto& [k, c] : transverse) {
        if (!first) os << " + ";
        os << c << "*T_" << k;
        first = false;
    }
    if (first) os << "none";
    return os.str();
}

InflectionDivisor HomFoliation::inflection_divisor() const {
    InflectionDivisor div;
    // inflection curve of the direction field (-B, A): det(v, (Dv) v)
    div.full = B_ * B_ * A_.partial_x() + A_ * A_ * B_.partial_y() -
               A_ * B_ * (B_.partial_x() + A_.partial_y());
    HomPoly2<Scalar> w0 = critical_divisor();
    if (w0.deg == 0) {
        div.tr = HomPoly2<Scalar>::constant(Scalar(1));
        div.inv = div.full;
        return div;
    }
    // transverse part: the factors of the critical divisor not rooted in the
    // tangent cone
    HomPoly2<Scalar> fixed_part = hompoly_gcd(w0, cone_.pow(static_cast<unsigned>(w0.deg)));
    div.tr = hompoly_div_exact(w0, fixed_part);
    UniPoly<Scalar> u = div.tr.dehomogenize();
    if (!u.is_zero()) div.tr = div.tr * u.lead().inverse();
    div.inv = hompoly_div_exact(div.full, div.tr);
    return div;
}

bool HomFoliation::is_convex() const { return inflection_divisor().tr.deg == 0; }

std::vector<SingularityReport> HomFoliation::singularities() const {
    std::vector<SingularityReport> out;

    SingularityReport origin;
    origin.at_origin = true;
    origin.chart = "affine";
    origin.milnor = (d_ - 1) * (d_ - 1);
    origin.nondegenerate = (origin.milnor == 1);
    out.push_back(origin);

    RootOptions opts;
    for (const auto& c : gauss().criticals)
        if (c.pt.exact && !c.pt.infinite) opts.candidates.push_back(c.pt.z);
    auto cone_roots = roots_p1(cone_, opts);

    UniPoly<Scalar> cu_d = cone_.dehomogenize().derivative(); // d/du C(1,u)
    for (const auto& [pt, mult] : cone_roots) {
        SingularityReport s;
        s.direction = pt;
        s.on_line_infinity = true;
        s.chart = pt.infinite ? "linf-swapped" : "linf-u";
        s.milnor = mult;
        s.nondegenerate = (mult == 1);
        for (const auto& c : gauss().criticals)
            if (c.fixed && c.pt.same_as(pt)) s.radial_order = c.ram - 1;
        if (s.nondegenerate) {
            KVal tangent, transverse;
            if (pt.infinite) {
                // chart (x/y, 1/y): tangent is d/dw C(w,1) at w = 0
                UniPoly<Scalar> cw = cone_.dehomogenize().reversed(cone_.deg);
                tangent = KVal::from_exact(cw.coeff(1));
                transverse = KVal::from_exact(A_.eval(Scalar(0), Scalar(1)));
            } else if (pt.exact) {
                tangent = KVal::from_exact(cu_d.eval(pt.z));
                transverse = KVal::from_exact(B_.eval(Scalar(1), pt.z));
            } else {
                tangent = KVal::from_numeric(embed(cu_d).eval(pt.zn));
                transverse = KVal::from_numeric(embed(B_).eval(CNum(1), pt.zn));
            }
            s.eigen = std::make_pair(tangent, transverse);
            if (tangent.exact && transverse.exact) {
                Scalar tr = tangent.s + transverse.s;
                s.cs = KVal::from_exact(transverse.s / tangent.s);
                s.bb = KVal::from_exact(tr * tr / (tangent.s * transverse.s));
            } else {
                CNum tr = tangent.z + transverse.z;
                s.cs = KVal::from_numeric(transverse.z / tangent.z);
                s.bb = KVal::from_numeric(tr * tr / (tangent.z * transverse.z));
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

UniPoly<Scalar> HomFoliation::cs_polynomial() const {
    UniPoly<Scalar> prod = UniPoly<Scalar>::constant(Scalar(1));
    for (const auto& s : singularities()) {
        if (s.at_origin) continue;
        if (!s.nondegenerate)
            throw UnsupportedCase("degenerate singularity at direction " + s.direction.str() +
                                  " has no Camacho-Sad index");
        if (!s.cs || !s.cs->exact)
            throw UnsupportedCase("Camacho-Sad index at " + s.direction.str() +
                                  " was not certified exactly");
        prod = prod * UniPoly<Scalar>(std::vector<Scalar>{-s.cs->s, Scalar(1)});
    }
    return prod;
}

IdentityReport HomFoliation::check_global_identities() const {
    IdentityReport rep;
    auto sings = singularities();

    int milnor_sum = 0;
    for (const auto& s : sings) milnor_sum += s.milnor;
    int expected = (d_ - 1) * (d_ - 1) + (d_ - 1) + 1;
    rep.milnor.ok = (milnor_sum == expected);
    rep.milnor.detail =
        "sum " + std::to_string(milnor_sum) + ", expected " + std::to_string(expected);

    bool all_nondeg = true, all_exact = true;
    for (const auto& s : sings)
        if (!s.at_origin) {
            all_nondeg = all_nondeg && s.nondegenerate;
            all_exact = all_exact && s.cs && s.cs->exact;
        }
    if (!all_nondeg) {
        rep.cs_sum.detail = "skipped: degenerate singularity on the invariant line";
    } else if (all_exact) {
        Scalar sum(0);
        for (const auto& s : sings)
            if (!s.at_origin) sum += s.cs->s;
        rep.cs_sum.ok = (sum == Scalar(1));
        rep.cs_sum.detail = "exact sum " + sum.str();
    } else {
        CNum sum(0);
        for (const auto& s : sings)
            if (!s.at_origin) sum += s.cs->z;
        rep.cs_sum.ok = abs(sum - CNum(1)) < Real("1e-24");
        rep.cs_sum.detail = "numeric sum";
    }

    int rh = gauss().rh_sum();
    rep.riemann_hurwitz.ok = (rh == 2 * d_ - 4);
    rep.riemann_hurwitz.detail =
        "sum " + std::to_string(rh) + ", expected " + std::to_string(2 * d_ - 4);
    return rep;
}

std::vector<ProjLine> HomFoliation::invariant_lines() const {
    std::vector<ProjLine> lines;
    lines.push_back(ProjLine::line_at_infinity());
    for (const auto& [pt, mult] : roots_p1(cone_)) {
        if (!pt.exact)
            throw UnsupportedCase("invariant line direction " + pt.str() +
                                  " not certified exactly");
        lines.push_back(ProjLine::through_origin(pt));
    }
    return lines;
}

HomFoliation HomFoliation::rotated(const Rat& delta) const {
    Scalar d(delta);
    HomPoly2<Scalar> Ar = A_.substitute_linear(Scalar(1), d, Scalar(0), Scalar(1));
    HomPoly2<Scalar> Br = B_.substitute_linear(Scalar(1), d, Scalar(0), Scalar(1));
    return HomFoliation(Ar, Ar * d + Br);
}

std::string HomFoliation::str() const {
    return "(" + A_.str() + ") dx + (" + B_.str() + ") dy";
}

P1Point mobius_shift(const P1Point& p, const Rat& delta) {
    Scalar d(delta);
    if (p.infinite) {
        if (delta == 0) return p;
        return P1Point::from_exact(Scalar(1) / d);
    }
    if (p.exact) {
        Scalar den = Scalar(1) + d * p.z;
        if (den.is_zero()) return P1Point::at_infinity();
        return P1Point::from_exact(p.z / den);
    }
    CNum den = CNum(1) + d.embed() * p.zn;
    if (abs(den) < Real("1e-30") * (1 + abs(p.zn))) return P1Point::at_infinity();
    return P1Point::from_numeric(p.zn / den);
}

P1Point mobius_unshift(const P1Point& p, const Rat& delta) { return mobius_shift(p, Rat(-delta)); }

} // namespace webfolio
