#include <doctest.h>

#include "webfolio/roots.hpp"

#include <random>

using namespace webfolio;

namespace {

UniPoly<Scalar> upoly(std::vector<long> coeffs) {
    std::vector<Scalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<Scalar>(std::move(c));
}

HomPoly2<Scalar> hpoly(int deg, std::vector<long> coeffs) {
    std::vector<Scalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return HomPoly2<Scalar>(deg, std::move(c));
}

Scalar rand_cyclo(std::mt19937& rng, unsigned n) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rat> c(euler_phi(n));
    for (auto& x : c) x = Rat(num(rng), den(rng));
    return Scalar(Cyclo(n, std::move(c)));
}

} // namespace

TEST_CASE("cyclotomic polynomial degrees and small identities") {
    CHECK(cyclotomic_polynomial(1).size() == 2);
    CHECK(cyclotomic_polynomial(8).size() == 5);   // x^4 + 1
    CHECK(cyclotomic_polynomial(12).size() == 5);  // x^4 - x^2 + 1
    CHECK(euler_phi(64) == 32);
}

TEST_CASE("zeta_6 satisfies its minimal polynomial") {
    Cyclo z = Cyclo::zeta(6);
    CHECK((z * z - z + Cyclo(Rat(1))).is_zero()); // Phi_6 = x^2 - x + 1
    CHECK(z.pow(6) == Cyclo(Rat(1)));
    CHECK(z.pow(3) == Cyclo(Rat(-1)));
}

TEST_CASE("field promotion: zeta_3 = zeta_6^2") {
    Cyclo z3 = Cyclo::zeta(3), z6 = Cyclo::zeta(6);
    CHECK(z3 == z6 * z6);
    CHECK(z3 + z6 == z6 * z6 + z6);
    Cyclo sum = z3 + Cyclo(Rat(1, 2));
    CHECK(sum - z3 == Cyclo(Rat(1, 2)));
}

TEST_CASE("cyclotomic inverses and division") {
    std::mt19937 rng(7);
    for (unsigned n : {1u, 3u, 5u, 8u, 12u}) {
        for (int trial = 0; trial < 5; ++trial) {
            Scalar a = rand_cyclo(rng, n);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("complex embedding is multiplicative") {
    std::mt19937 rng(11);
    for (unsigned n : {5u, 8u, 7u, 12u}) {
        for (int trial = 0; trial < 4; ++trial) {
            Scalar a = rand_cyclo(rng, n), b = rand_cyclo(rng, n);
            CNum lhs = (a * b).embed();
            CNum rhs = a.embed() * b.embed();
            CHECK(abs(lhs - rhs) < Real("1e-30") * (1 + abs(lhs)));
            CNum lhs2 = (a + b).embed();
            CHECK(abs(lhs2 - (a.embed() + b.embed())) < Real("1e-30") * (1 + abs(lhs2)));
        }
    }
}

TEST_CASE("square root of 5 inside Q(zeta_5)") {
    // sqrt5 = 1 + 2*(zeta5 + zeta5^4)
    Scalar s = Scalar(1) + Scalar(2) * (Scalar::zeta(5) + Scalar::zeta(5).pow(4));
    CHECK(s * s == Scalar(5));
    CHECK(abs(s.embed() - CNum(sqrt(Real(5)))) < Real("1e-30"));
}

TEST_CASE("parameter arithmetic: exact division only") {
    Scalar t = Scalar::param_t();
    Scalar p = t * t - Scalar(1);
    Scalar q = t - Scalar(1);
    CHECK(p / q == t + Scalar(1));
    CHECK_THROWS_AS(p / (t - Scalar(2)), MathError);
    CHECK((p.subst_t(Scalar(3))) == Scalar(8));
}

TEST_CASE("squarefree decomposition examples") {
    // z^2 (z - 1)
    auto d1 = squarefree_decompose(upoly({0, 0, -1, 1}) * Scalar(1));
    // z^3 - z^2 = z^2(z-1): factors (z,2), (z-1,1)
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].second == 1);
    CHECK(d1[0].first == upoly({-1, 1}));
    CHECK(d1[1].second == 2);
    CHECK(d1[1].first == upoly({0, 1}));

    auto d2 = squarefree_decompose(upoly({-5, 1}));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].second == 1);
    CHECK(d2[0].first == upoly({-5, 1}));

    // (z^2+1)^3 over Q
    UniPoly<Scalar> p = upoly({1, 0, 1}).pow(3);
    auto d3 = squarefree_decompose(p);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].second == 3);
    CHECK(d3[0].first == upoly({1, 0, 1}));
}

TEST_CASE("squarefree reconstruction property") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-3, 3), mult(1, 3);
    for (int trial = 0; trial < 12; ++trial) {
        // build a random product of small factors with multiplicities
        UniPoly<Scalar> u = UniPoly<Scalar>::constant(Scalar(coef(rng) >= 0 ? 2 : -2));
        for (int f = 0; f < 3; ++f) {
            UniPoly<Scalar> fac = upoly({coef(rng), 1});
            u = u * fac.pow(mult(rng));
        }
        auto dec = squarefree_decompose(u);
        UniPoly<Scalar> rebuilt = UniPoly<Scalar>::constant(Scalar(1));
        for (const auto& [f, m] : dec) rebuilt = rebuilt * f.pow(m);
        // rebuilt equals u up to the unit (leading coefficient)
        CHECK((rebuilt * u.lead()) == (u * rebuilt.lead()));
    }
}

TEST_CASE("homogeneous gcd examples") {
    // gcd(y^2, -x^2) = 1
    auto g1 = hompoly_gcd(hpoly(2, {0, 0, 1}), hpoly(2, {-1, 0, 0}));
    CHECK(g1.deg == 0);
    CHECK(!g1.is_zero());

    // gcd(P, 0) = P normalized
    auto p = hpoly(2, {0, 3, 3}); // 3xy + 3y^2
    auto g2 = hompoly_gcd(p, HomPoly2<Scalar>::zero(4));
    CHECK(g2 == hpoly(2, {0, 1, 1}));

    // gcd(xy(y-x), y(y-x)^2) = y(y-x)
    auto a = hpoly(1, {1, 0}) * hpoly(1, {0, 1}) * hpoly(1, {-1, 1});
    auto b = hpoly(1, {0, 1}) * hpoly(1, {-1, 1}).pow(2);
    auto g3 = hompoly_gcd(a, b);
    CHECK(g3 == hpoly(1, {0, 1}) * hpoly(1, {-1, 1}));

    CHECK_THROWS_AS(hompoly_gcd(HomPoly2<Scalar>::zero(1), HomPoly2<Scalar>::zero(2)),
                    DegenerateInput);

    // exact-division property: (P/G)*G == P
    auto q = hompoly_div_exact(a, g3);
    CHECK(q * g3 == a);
}

TEST_CASE("roots_p1 examples") {
    // x y (y - x): roots [1:0], [0:1], [1:1]
    auto p = hpoly(1, {1, 0}) * hpoly(1, {0, 1}) * hpoly(1, {-1, 1});
    auto roots = roots_p1(p);
    REQUIRE(roots.size() == 3);
    int infinite = 0;
    for (const auto& [pt, m] : roots) {
        CHECK(m == 1);
        CHECK(pt.exact);
        if (pt.infinite) ++infinite;
    }
    CHECK(infinite == 1);

    // (y - x)^3: [1:1] with multiplicity 3
    auto p2 = hpoly(1, {-1, 1}).pow(3);
    auto roots2 = roots_p1(p2);
    REQUIRE(roots2.size() == 1);
    CHECK(roots2[0].second == 3);
    CHECK(roots2[0].first.exact);
    CHECK(roots2[0].first.z == Scalar(1));

    // x^3 - y^3: cube each representative
    auto p3 = hpoly(3, {1, 0, 0, -1});
    auto roots3 = roots_p1(p3);
    REQUIRE(roots3.size() == 3);
    for (const auto& [pt, m] : roots3) {
        CHECK(m == 1);
        REQUIRE(pt.exact);
        CHECK(pt.z.pow(3) == Scalar(1)); // slope z satisfies z^3 = 1
    }
}

TEST_CASE("roots_p1 multiplicity sum property on random forms") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        int deg = 2 + trial % 4;
        std::vector<Scalar> c(deg + 1, Scalar(0));
        bool nonzero = false;
        for (auto& x : c) {
            x = Scalar(coef(rng));
            nonzero = nonzero || !x.is_zero();
        }
        if (!nonzero) c[0] = Scalar(1);
        HomPoly2<Scalar> p(deg, std::move(c));
        auto roots = roots_p1(p);
        int total = 0;
        for (const auto& [pt, m] : roots) total += m;
        CHECK(total == deg);
    }
}

TEST_CASE("exact and numeric roots mix: z^4 - 16 over Q") {
    auto p = hpoly(4, {-16, 0, 0, 0, 1}); // -16 x^4 + y^4
    auto roots = roots_p1(p);
    REQUIRE(roots.size() == 4);
    int exact_rational = 0;
    for (const auto& [pt, m] : roots)
        if (pt.exact && !pt.infinite && pt.z.is_rational()) ++exact_rational;
    // +/-2 are rational; +/-2i are certified in Q(zeta_4)
    CHECK(exact_rational == 2);
    for (const auto& [pt, m] : roots) CHECK(abs(pt.zn * pt.zn * pt.zn * pt.zn - CNum(16)) < Real("1e-25"));
}

TEST_CASE("aberth root residuals") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<CNum> c(6, CNum(0));
        for (auto& x : c) x = CNum(coef(rng), coef(rng));
        if (c.back() == CNum(0)) c.back() = CNum(1);
        UniPoly<CNum> p(std::move(c));
        auto roots = aberth_roots(p);
        for (const auto& r : roots) {
            Real scale(0);
            for (const auto& x : p.c) scale += abs(x);
            CHECK(abs(p.eval(r)) < Real("1e-20") * scale);
        }
    }
}
