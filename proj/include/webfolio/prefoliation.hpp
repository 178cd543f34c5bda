#ifndef WEBFOLIO_PREFOLIATION_HPP
#define WEBFOLIO_PREFOLIATION_HPP

#include "webfolio/foliation.hpp"

#include <variant>

namespace webfolio {

// ---------------------------------------------------------------------------
// Trivariate polynomial in (p, q, x); c[k][i][j] multiplies x^k p^i q^j.
// Used for implicit web equations F(p, q, x) = 0 with x = dq/dp.
// ---------------------------------------------------------------------------
template <class K> struct TriPoly {
    std::vector<std::vector<std::vector<K>>> c;

    int x_degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;
    void add_term(size_t k, size_t i, size_t j, const K& v);
    K coeff(size_t k, size_t i, size_t j) const;

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b) {
        TriPoly r = a;
        for (size_t k = 0; k < b.c.size(); ++k)
            for (size_t i = 0; i < b.c[k].size(); ++i)
                for (size_t j = 0; j < b.c[k][i].size(); ++j)
                    r.add_term(k, i, j, b.c[k][i][j]);
        return r;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (size_t k = 0; k < a.c.size(); ++k)
            for (size_t i = 0; i < a.c[k].size(); ++i)
                for (size_t j = 0; j < a.c[k][i].size(); ++j) {
                    if (value_is_zero(a.c[k][i][j])) continue;
                    for (size_t k2 = 0; k2 < b.c.size(); ++k2)
                        for (size_t i2 = 0; i2 < b.c[k2].size(); ++i2)
                            for (size_t j2 = 0; j2 < b.c[k2][i2].size(); ++j2)
                                r.add_term(k + k2, i + i2, j + j2,
                                           a.c[k][i][j] * b.c[k2][i2][j2]);
                }
        return r;
    }

    TriPoly partial_x() const;
    TriPoly partial_p() const;
    TriPoly partial_q() const;

    // coefficients of powers of x at a fixed (p, q)
    template <class C> UniPoly<C> x_poly_at(const C& p, const C& q) const {
        std::vector<C> out(c.size(), C(0));
        for (size_t k = 0; k < c.size(); ++k) {
            C acc(0);
            for (size_t i = c[k].size(); i-- > 0;) {
                C row(0);
                for (size_t j = c[k][i].size(); j-- > 0;) row = row * q + C(c[k][i][j]);
                acc = acc * p + row;
            }
            out[k] = acc;
        }
        return UniPoly<C>(std::move(out));
    }

    std::string str() const;
};

TriPoly<CNum> embed(const TriPoly<Scalar>& t);
TriPoly<CFast> embed_fast(const TriPoly<Scalar>& t);

// Implicit d-web of the dual plane: the polynomial part F(p,q,x) together
// with `vertical` extra leaves of the pencil dp = 0 (contributed by the line
// at infinity, whose dual leaves are the vertical lines p = const).
struct ImplicitWeb {
    int order = 0;    // total number of leaves through a generic point
    int vertical = 0; // leaves with dq/dp = infinity
    TriPoly<Scalar> F;

    int x_degree() const { return F.x_degree(); }
    // same web written in the swapped chart (p,q) -> (q,p); slopes invert
    ImplicitWeb swapped() const;
    // multiply by a nonvanishing scalar-polynomial factor (for invariance tests)
    ImplicitWeb scaled_by(const TriPoly<Scalar>& g) const;
};

// ---------------------------------------------------------------------------
// General (not necessarily homogeneous) foliation in an affine chart where
// the line at infinity is invariant: graded 1-form sum A_i dx + B_i dy.
// ---------------------------------------------------------------------------
class GeneralFoliation {
  public:
    GeneralFoliation(std::vector<HomPoly2<Scalar>> A, std::vector<HomPoly2<Scalar>> B);

    int degree() const { return n_; } // foliation degree
    const HomPoly2<Scalar>& A(int i) const { return A_[i]; }
    const HomPoly2<Scalar>& B(int i) const { return B_[i]; }

    // top graded part as a homogeneous foliation
    HomFoliation top() const;

    // homogeneous components of Omega = P dx + Q dy + R dz (degree n+1 forms)
    void homogeneous_form(std::vector<std::vector<Scalar>>& P, std::vector<std::vector<Scalar>>& Q,
                          std::vector<std::vector<Scalar>>& R) const;

    std::string str() const;

  private:
    int n_;
    std::vector<HomPoly2<Scalar>> A_, B_; // index = homogeneous degree, 0..n_
};

using FoliationHandle = std::variant<HomFoliation, GeneralFoliation>;

int foliation_degree(const FoliationHandle& f);

// A line together with a foliation; degree d = 1 + deg(foliation).
struct PreFoliation {
    ProjLine line;
    FoliationHandle fol;

    PreFoliation(ProjLine l, FoliationHandle f);

    int degree() const { return foliation_degree(fol) + 1; }
    bool homogeneous() const { return std::holds_alternative<HomFoliation>(fol); }
    const HomFoliation& hom() const { return std::get<HomFoliation>(fol); }
    const GeneralFoliation& gen() const { return std::get<GeneralFoliation>(fol); }
};

bool is_line_invariant(const FoliationHandle& f, const ProjLine& line);
bool is_line_invariant(const HomFoliation& h, const ProjLine& line);

// exact Legendre web in the chart (p, q) of lines {y = p x - q}
ImplicitWeb legendre_web(const PreFoliation& pref);
ImplicitWeb legendre_web(const FoliationHandle& f); // web of the foliation alone

// ---------------------------------------------------------------------------
// Discriminant decomposition for homogeneous pre-foliations.
// ---------------------------------------------------------------------------
struct DiscComponent {
    std::string tag;  // transverse-inflection-image | radial-singularity-dual |
                      // infinity-singularity-dual | line-component | origin-dual
    bool origin_dual = false;       // the line {q = 0}
    P1Point p0;                     // vertical line {p = p0} otherwise ([1:0] = chart line at infinity)
    bool covers_line_component = false; // this component is (also) D_ell
    std::string str() const;
};

struct DiscriminantDecomposition {
    std::vector<DiscComponent> components;
    bool has_line_component() const {
        for (const auto& comp : components)
            if (comp.covers_line_component) return true;
        return false;
    }
};

DiscriminantDecomposition discriminant(const PreFoliation& preh);

// Degenerate a pre-foliation along an invariant line D of its foliation into
// a homogeneous one (D becomes the line at infinity, the top graded part
// becomes the foliation, the line keeps only its through-origin part).
struct HomogenizationResult {
    PreFoliation preh;
    bool checks_pass = false;
    std::string detail;
};
HomogenizationResult homogenize(const PreFoliation& pref, const ProjLine& invariant_line);

// Reduced-convexity certificate: candidates pairwise distinct, all invariant,
// exactly 3 deg(F) of them, and the pre-foliation line among the invariant ones.
bool is_convex_reduced(const PreFoliation& pref, const std::vector<ProjLine>& candidate_lines);

// ---------------------------------------------------------------------------
// Named corpus.
// ---------------------------------------------------------------------------
struct CorpusParams {
    std::optional<Scalar> lambda;
    std::optional<Scalar> mu;
};

FoliationHandle corpus_foliation(const std::string& name, int d, const CorpusParams& params = {});

// invariant lines of the named corpus member (exact, includes the line at infinity)
std::vector<ProjLine> corpus_invariant_lines(const std::string& name, int d);

} // namespace webfolio

#endif
