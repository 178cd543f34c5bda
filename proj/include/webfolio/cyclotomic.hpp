#ifndef WEBFOLIO_CYCLOTOMIC_HPP
#define WEBFOLIO_CYCLOTOMIC_HPP

#include "webfolio/numeric.hpp"

#include <vector>

namespace webfolio {

// Largest conductor we ever work in. Everything in the corpus lives well
// below this (the Legendre-web constants need at most zeta_{2d} with d <= 8).
inline constexpr unsigned kMaxConductor = 64;

unsigned euler_phi(unsigned n);
const std::vector<Rat>& cyclotomic_polynomial(unsigned n); // monic, length phi(n)+1

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial. Conductor 1 is plain Q.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    Cyclo(const Rat& r) : n_(1), c_(1, r) {}
    Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
    Cyclo(unsigned conductor, std::vector<Rat> coeffs); // reduces to length phi(n)

    static Cyclo zeta(unsigned n);                // primitive n-th root of unity
    static Cyclo zeta_pow(unsigned n, long k);    // zeta_n^k, k may be negative

    unsigned conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    Cyclo promoted(unsigned m) const; // rewrite in Q(zeta_m), n_ | m

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo inverse() const;
    Cyclo pow(long e) const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // If the value equals q * zeta_n^k for rational q, returns (q, k).
    std::optional<std::pair<Rat, unsigned>> monomial_form() const;

    CNum embed() const;  // zeta_n -> exp(2*pi*i/n)
    CFast embed_fast() const;

    std::string str() const; // canonical text, e.g. "1/2*zeta(8)^3 - 2"

  private:
    unsigned n_;
    std::vector<Rat> c_; // length phi(n_)
};

// Common conductor (lcm capped at kMaxConductor) and promotion helpers.
unsigned common_conductor(unsigned a, unsigned b);

} // namespace webfolio

#endif
