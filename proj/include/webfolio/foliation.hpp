#ifndef WEBFOLIO_FOLIATION_HPP
#define WEBFOLIO_FOLIATION_HPP

#include "webfolio/roots.hpp"

#include <map>
#include <memory>
#include <optional>

namespace webfolio {

// One critical point of the degree-(d-1) self-map of P^1 attached to a
// homogeneous foliation. `ram` is the ramification index (>= 2), `fixed_mult`
// the multiplicity of the point as a root of the tangent cone (0 if not fixed).
struct CriticalPoint {
    P1Point pt;
    int ram = 2;
    bool fixed = false;
    int fixed_mult = 0;
};

struct GaussAnalysis {
    std::vector<CriticalPoint> criticals;
    bool exact = true; // every critical point certified in a cyclotomic field

    int rh_sum() const {
        int s = 0;
        for (const auto& c : criticals) s += c.ram - 1;
        return s;
    }
};

// Multiset of radial / transverse contributions R_k, T_k.
struct FoliationType {
    std::map<int, int> radial;     // order k -> count
    std::map<int, int> transverse; // order k -> count

    int degree() const; // number of distinct critical points
    int weighted_sum() const;
    std::string str() const; // e.g. "1*R_1 + 1*T_1"
    bool operator==(const FoliationType& o) const {
        return radial == o.radial && transverse == o.transverse;
    }
};

struct InflectionDivisor {
    HomPoly2<Scalar> full;     // affine inflection curve (the line at infinity
                               // is an additional reduced component, see linf)
    HomPoly2<Scalar> tr;       // product of transverse inflection lines
    HomPoly2<Scalar> inv;      // full / tr
    bool linf_component = true;
};

struct SingularityReport {
    bool at_origin = false;
    P1Point direction;       // for points on the line at infinity
    std::string chart;       // "affine", "linf-u" or "linf-swapped"
    bool on_line_infinity = false;
    int milnor = 1;
    bool nondegenerate = false;
    std::optional<std::pair<KVal, KVal>> eigen; // (tangent, transverse)
    std::optional<KVal> cs;
    std::optional<KVal> bb;
    int radial_order = 0;
};

struct IdentityCheck {
    std::optional<bool> ok;
    std::string detail;
};

struct IdentityReport {
    IdentityCheck milnor;          // sum of Milnor numbers
    IdentityCheck cs_sum;          // Camacho-Sad sum along the invariant line
    IdentityCheck riemann_hurwitz; // ramification count of the slope map
    bool all_pass() const {
        return milnor.ok.value_or(true) && cs_sum.ok.value_or(true) &&
               riemann_hurwitz.ok.value_or(true);
    }
};

// Homogeneous foliation of degree d-1 given by a pair of coprime binary
// forms (the dx- and dy-coefficients of its defining 1-form).
class HomFoliation {
  public:
    HomFoliation(HomPoly2<Scalar> A, HomPoly2<Scalar> B);

    int prefoliation_degree() const { return d_; }       // d
    int foliation_degree() const { return d_ - 1; }      // d - 1
    const HomPoly2<Scalar>& A() const { return A_; }
    const HomPoly2<Scalar>& B() const { return B_; }
    const HomPoly2<Scalar>& tangent_cone() const { return cone_; } // x*A + y*B

    // Critical divisor of the slope map (degree 2d-4 binary form).
    HomPoly2<Scalar> critical_divisor() const;

    const GaussAnalysis& gauss() const;          // exact where certifiable
    GaussAnalysis gauss_numeric() const;         // embedded copy, always works

    // Image of a direction under the slope map; [1:0] encodes infinity.
    P1Point gauss_image(const P1Point& dir) const;
    CNum gauss_image_numeric(const CNum& z, bool at_infinity, bool& image_infinite) const;

    // The binary form whose roots are the fiber over the value p0
    // (A + p0*B for finite p0, B for p0 = infinity).
    HomPoly2<Scalar> fiber_form(const P1Point& p0) const;

    bool direction_fixed(const P1Point& dir) const; // root of the tangent cone
    int cone_multiplicity(const P1Point& dir) const;

    FoliationType type() const;
    InflectionDivisor inflection_divisor() const;
    bool is_convex() const;

    std::vector<SingularityReport> singularities() const;
    UniPoly<Scalar> cs_polynomial() const; // prod (lambda - CS(s)), exact only
    IdentityReport check_global_identities() const;
    std::vector<ProjLine> invariant_lines() const; // line at infinity included

    // Conjugate by (x,y) -> (x + delta*y, y); exact analysis carries over.
    HomFoliation rotated(const Rat& delta) const;

    std::string str() const;

  private:
    int d_;
    HomPoly2<Scalar> A_, B_, cone_;
    mutable std::shared_ptr<const GaussAnalysis> gauss_cache_;
};

// Mobius image z -> z/(1+delta*z) of a point (used when undoing the rotation
// trick); inverse_mobius is z -> z/(1-delta*z).
P1Point mobius_shift(const P1Point& p, const Rat& delta);
P1Point mobius_unshift(const P1Point& p, const Rat& delta);

} // namespace webfolio

#endif
