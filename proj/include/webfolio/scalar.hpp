#ifndef WEBFOLIO_SCALAR_HPP
#define WEBFOLIO_SCALAR_HPP

#include "webfolio/cyclotomic.hpp"
#include "webfolio/error.hpp"

#include <vector>

namespace webfolio {

// Coefficient of the exact layer: an element of Q(zeta_n), optionally extended
// by one polynomial parameter t. Arithmetic is a ring; division is exact
// division and throws when the quotient would leave the ring (except that
// division by t-free scalars is always possible).
class Scalar {
  public:
    Scalar() {}
    Scalar(long v) { set_const(Cyclo(v)); }
    Scalar(const Rat& r) { set_const(Cyclo(r)); }
    Scalar(const Cyclo& c) { set_const(c); }

    static Scalar param_t() { return Scalar(std::vector<Cyclo>{Cyclo(), Cyclo(Rat(1))}); }
    static Scalar zeta(unsigned n) { return Scalar(Cyclo::zeta(n)); }

    bool is_zero() const { return c_.empty(); }
    int t_degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool t_free() const { return c_.size() <= 1; }
    const std::vector<Cyclo>& t_coeffs() const { return c_; }
    Cyclo t_coeff(size_t k) const { return k < c_.size() ? c_[k] : Cyclo(); }

    const Cyclo& constant() const; // requires t_free and nonzero-safe access
    bool is_rational() const { return t_free() && (c_.empty() || c_[0].is_rational()); }
    Rat rational_value() const;
    unsigned conductor() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b); // exact or throws
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar subst_t(const Scalar& value) const; // evaluate the parameter

    CNum embed() const;  // requires t_free
    CFast embed_fast() const;

    std::string str() const;

    explicit Scalar(std::vector<Cyclo> coeffs) : c_(std::move(coeffs)) { trim(); }

  private:
    void set_const(const Cyclo& c) {
        if (!c.is_zero()) c_.assign(1, c);
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Cyclo> c_; // coefficients of t^k; empty means 0
};

inline Scalar operator+(const Scalar& a, long b) { return a + Scalar(b); }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

// Trait used by the polynomial templates to dispatch exact vs numeric logic.
template <class K> struct is_exact_field : std::false_type {};
template <> struct is_exact_field<Scalar> : std::true_type {};

inline bool value_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool value_is_zero(const CNum& z) { return z == CNum(0); }
inline bool value_is_zero(const CFast& z) { return z == CFast(0); }

// A quantity that is exact when the computation stayed in the field and an
// embedded complex approximation otherwise. The approximation is always set.
struct KVal {
    bool exact = false;
    Scalar s;
    CNum z;

    KVal() : z(0) {}
    static KVal from_exact(const Scalar& v) {
        KVal k;
        k.exact = true;
        k.s = v;
        k.z = v.embed();
        return k;
    }
    static KVal from_numeric(const CNum& v) {
        KVal k;
        k.z = v;
        return k;
    }
    std::string str() const;
};

} // namespace webfolio

#endif
