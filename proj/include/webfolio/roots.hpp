#ifndef WEBFOLIO_ROOTS_HPP
#define WEBFOLIO_ROOTS_HPP

#include "webfolio/projective.hpp"

namespace webfolio {

// Simultaneous-iteration (Aberth-Ehrlich) roots of a polynomial that should
// be square-free. Throws NumericFailure with residuals on non-convergence.
std::vector<CNum> aberth_roots(const UniPoly<CNum>& p, int max_iter = 400);

struct RootOptions {
    unsigned max_conductor = kMaxConductor; // cap for cyclotomic extensions
    std::vector<Scalar> candidates;         // exact values to test first
};

// All roots of a nonzero binary form on P^1 with multiplicities.
// Multiplicities come from the exact square-free decomposition; root values
// are exact Scalars when they can be certified (linear factors, binomial
// factors with cyclotomic-rational roots, numeric snap verified by exact
// evaluation), complex otherwise. Finite roots sorted by (Re, Im) of the
// embedded slope; the root at infinity, when present, comes last.
std::vector<std::pair<P1Point, int>> roots_p1(const HomPoly2<Scalar>& p,
                                              const RootOptions& opts = {});

// Exact roots of one square-free univariate factor, removed from it.
// Appends found exact roots to `out` and returns the deflated polynomial.
UniPoly<Scalar> extract_exact_roots(UniPoly<Scalar> v, const RootOptions& opts,
                                    std::vector<Scalar>& out);

} // namespace webfolio

#endif
