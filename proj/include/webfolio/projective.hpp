#ifndef WEBFOLIO_PROJECTIVE_HPP
#define WEBFOLIO_PROJECTIVE_HPP

#include "webfolio/poly.hpp"

namespace webfolio {

// Point [a:b] of P^1 with slope z = a/b (so [a:b] is the direction y/x = a/b
// of the plane; evaluating a binary form "at the point" means plugging in
// (x,y) = (b,a)). Stored normalized: either b = 1 with z = a, or [1:0].
struct P1Point {
    bool infinite = false;
    bool exact = true;
    Scalar z;    // slope when finite and exact
    CNum zn;     // embedded slope when finite (always maintained)

    P1Point() {}
    static P1Point at_infinity() {
        P1Point p;
        p.infinite = true;
        return p;
    }
    static P1Point from_exact(const Scalar& slope) {
        P1Point p;
        p.z = slope;
        p.zn = slope.embed();
        return p;
    }
    static P1Point from_numeric(const CNum& slope) {
        P1Point p;
        p.exact = false;
        p.zn = slope;
        return p;
    }
    static P1Point from_pair(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) {
            if (a.is_zero()) throw DegenerateInput("projective point (0,0)");
            return at_infinity();
        }
        return from_exact(a / b);
    }

    Scalar a() const { return infinite ? Scalar(1) : z; }
    Scalar b() const { return infinite ? Scalar(0) : Scalar(1); }
    CNum an() const { return infinite ? CNum(1) : zn; }
    CNum bn() const { return infinite ? CNum(0) : CNum(1); }

    bool same_as(const P1Point& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        if (exact && o.exact) return z == o.z;
        return abs(zn - o.zn) < Real("1e-24") * (1 + abs(zn));
    }

    std::string str() const;
};

// Sort key: finite points by (Re, Im) of the slope, the point at infinity last.
bool p1_order(const P1Point& a, const P1Point& b);

// Projective line alpha*x + beta*y + gamma*z = 0 with exact coefficients,
// normalized so the first nonzero coefficient is 1.
struct ProjLine {
    Scalar al, be, ga;

    ProjLine() : al(0), be(0), ga(1) {}
    ProjLine(Scalar a, Scalar b, Scalar g);

    static ProjLine line_at_infinity() { return ProjLine(Scalar(0), Scalar(0), Scalar(1)); }
    // the line through the origin with direction point [a:b] (slope a/b)
    static ProjLine through_origin(const P1Point& dir);

    bool through_origin_p() const { return ga.is_zero(); }
    bool is_line_at_infinity() const { return al.is_zero() && be.is_zero(); }

    // direction point [-alpha:beta] of a line through the origin
    P1Point origin_direction() const;

    bool operator==(const ProjLine& o) const { return al == o.al && be == o.be && ga == o.ga; }

    std::string str() const;
};

} // namespace webfolio

#endif
