#include "webfolio/numeric.hpp"
#include "webfolio/error.hpp"

#include <sstream>

namespace webfolio {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw DegenerateInput("zero to a negative power");
        return Rat(1) / rat_pow(base, -e);
    }
    Rat acc(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

namespace {
Real rat_to_real(const Rat& q) {
    return numerator(q).convert_to<Real>() / denominator(q).convert_to<Real>();
}
} // namespace

std::optional<Rat> rationalize(const Real& x, const Int& den_bound, const Real& tol) {
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1; // convergents p0/q0 (current), p1/q1 (previous)
    Real v = x;
    for (int iter = 0; iter < 64; ++iter) {
        Real fl = floor(v);
        if (fl > Real(1e30) || fl < Real(-1e30)) return std::nullopt;
        Int a(fl.convert_to<long long>());
        Int p2 = a * p0 + p1, q2 = a * q0 + q1;
        if (q2 > den_bound) break;
        p1 = p0; q1 = q0; p0 = p2; q0 = q2;
        Rat cand(p0, q0);
        if (abs(x - rat_to_real(cand)) < tol) return cand;
        Real frac = v - fl;
        if (frac == 0) break;
        v = 1 / frac;
    }
    return std::nullopt;
}

namespace {
// Exact integer n-th root, if m is a perfect n-th power.
std::optional<Int> int_nth_root(const Int& m, unsigned n) {
    if (m <= 0) return std::nullopt;
    if (m == 1) return Int(1);
    Int lo = 1, hi = m;
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int p = 1;
        int cmp = 0; // -1: mid^n < m, 0: equal, 1: greater
        for (unsigned i = 0; i < n; ++i) {
            p *= mid;
            if (p > m) { cmp = 1; break; }
        }
        if (cmp == 0) cmp = (p == m) ? 0 : -1;
        if (cmp == 0) return mid;
        if (cmp < 0) lo = mid + 1; else hi = mid - 1;
    }
    return std::nullopt;
}
} // namespace

std::optional<Rat> rat_nth_root(const Rat& q, unsigned n) {
    if (n == 0) throw DegenerateInput("0-th root");
    if (q == 0) return Rat(0);
    if (q < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = rat_nth_root(Rat(-q), n);
        if (!r) return std::nullopt;
        return Rat(-*r);
    }
    auto rn = int_nth_root(numerator(q), n);
    if (!rn) return std::nullopt;
    auto rd = int_nth_root(denominator(q), n);
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

} // namespace webfolio
