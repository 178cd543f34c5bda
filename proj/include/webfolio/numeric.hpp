#ifndef WEBFOLIO_NUMERIC_HPP
#define WEBFOLIO_NUMERIC_HPP

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace webfolio {

// Exact rational coefficients. GMP-backed, always canonical.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Working complex types. CNum is the default for root finding, exact-root
// verification and criterion fallback (136-bit significand); CFast is the
// lighter type the numeric oracle starts with (85-bit significand).
using CNum = boost::multiprecision::cpp_complex<40>;
using CFast = boost::multiprecision::cpp_complex<25>;
using Real = CNum::value_type;
using RealFast = CFast::value_type;

inline Real abs2(const CNum& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline RealFast abs2(const CFast& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Rat rat_pow(const Rat& base, long e);

// Nearest rational with denominator <= den_bound whose distance to x is below
// tol, via continued fractions. Used to propose exact values that are then
// verified independently; a miss is harmless.
std::optional<Rat> rationalize(const Real& x, const Int& den_bound, const Real& tol);

// Exact n-th root of a rational if one exists in Q.
std::optional<Rat> rat_nth_root(const Rat& q, unsigned n);

std::string rat_str(const Rat& q);

} // namespace webfolio

#endif
