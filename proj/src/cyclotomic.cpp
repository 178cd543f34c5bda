#include "webfolio/cyclotomic.hpp"
#include "webfolio/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace webfolio {

unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Dense univariate helpers over Rat, little-endian coefficients.
using RPoly = std::vector<Rat>;

void rp_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division, requires divisor monic and remainder zero.
RPoly rp_div_exact(RPoly num, const RPoly& den) {
    RPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    for (size_t k = q.size(); k-- > 0;) {
        Rat c = num[k + den.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    rp_trim(num);
    if (!num.empty()) throw MathError("cyclotomic polynomial division not exact");
    return q;
}

std::map<unsigned, RPoly> g_cyclo_cache;
std::recursive_mutex g_cyclo_mutex;

const RPoly& cyclotomic_locked(unsigned n) {
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    RPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = rp_div_exact(num, cyclotomic_locked(d));
    }
    return g_cyclo_cache.emplace(n, std::move(num)).first->second;
}

} // namespace

const std::vector<Rat>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DegenerateInput("conductor must be positive");
    std::lock_guard<std::recursive_mutex> lock(g_cyclo_mutex);
    return cyclotomic_locked(n);
}

unsigned common_conductor(unsigned a, unsigned b) {
    unsigned l = std::lcm(a, b);
    if (l > kMaxConductor)
        throw UnsupportedCase("required cyclotomic conductor " + std::to_string(l) +
                              " exceeds the supported bound " + std::to_string(kMaxConductor));
    return l;
}

Cyclo::Cyclo(unsigned conductor, std::vector<Rat> coeffs) : n_(conductor) {
    if (conductor == 0) throw DegenerateInput("conductor must be positive");
    const RPoly& phi = cyclotomic_polynomial(n_);
    size_t deg = phi.size() - 1;
    // reduce modulo Phi_n
    while (coeffs.size() > deg) {
        Rat top = coeffs.back();
        size_t k = coeffs.size() - 1 - deg;
        coeffs.pop_back();
        if (top == 0) continue;
        for (size_t j = 0; j < deg; ++j) coeffs[k + j] -= top * phi[j];
    }
    coeffs.resize(deg, Rat(0));
    c_ = std::move(coeffs);
}

Cyclo Cyclo::zeta(unsigned n) { return zeta_pow(n, 1); }

Cyclo Cyclo::zeta_pow(unsigned n, long k) {
    if (n == 0) throw DegenerateInput("conductor must be positive");
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    std::vector<Rat> c(static_cast<size_t>(r) + 1, Rat(0));
    c.back() = 1;
    return Cyclo(n, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw MathError("value is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::promoted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw MathError("promotion target is not a multiple of the conductor");
    unsigned step = m / n_;
    std::vector<Rat> big;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        size_t k = j * step;
        if (big.size() <= k) big.resize(k + 1, Rat(0));
        big[k] += c_[j];
    }
    if (big.empty()) big.assign(1, Rat(0));
    return Cyclo(m, std::move(big));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned m = common_conductor(a.n_, b.n_);
    Cyclo x = a.promoted(m), y = b.promoted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned m = common_conductor(a.n_, b.n_);
    Cyclo x = a.promoted(m), y = b.promoted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned m = common_conductor(a.n_, b.n_);
    Cyclo x = a.promoted(m), y = b.promoted(m);
    RPoly prod = rp_mul(x.c_, y.c_);
    if (prod.empty()) prod.assign(1, Rat(0));
    return Cyclo(m, std::move(prod));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DegenerateInput("division by zero");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]);
    // Extended Euclid against Phi_n; Phi_n is irreducible so the gcd is 1.
    RPoly r0 = cyclotomic_polynomial(n_), r1 = c_;
    rp_trim(r1);
    RPoly s0{}, s1{Rat(1)}; // s tracks the cofactor of this element
    while (true) {
        rp_trim(r1);
        if (r1.empty()) throw MathError("cyclotomic inverse failed");
        if (r1.size() == 1) {
            Rat inv = Rat(1) / r1[0];
            for (auto& x : s1) x *= inv;
            return Cyclo(n_, std::move(s1));
        }
        // r0 = q*r1 + r; s_new = s0 - q*s1
        RPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        RPoly rem = r0;
        for (size_t k = q.size(); k-- > 0;) {
            Rat c = rem[k + r1.size() - 1] / r1.back();
            q[k] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
        }
        rem.resize(r1.size() - 1);
        RPoly qs = rp_mul(q, s1);
        RPoly snew = s0;
        if (snew.size() < qs.size()) snew.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this, acc = Cyclo(Rat(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    unsigned m = std::lcm(n_, o.n_);
    if (m > kMaxConductor) return false;
    Cyclo x = promoted(m), y = o.promoted(m);
    return x.c_ == y.c_;
}

std::optional<std::pair<Rat, unsigned>> Cyclo::monomial_form() const {
    for (unsigned k = 0; k < n_; ++k) {
        Cyclo cand = *this * zeta_pow(n_, -static_cast<long>(k));
        if (cand.is_rational()) return std::make_pair(cand.rational_value(), k);
    }
    return std::nullopt;
}

namespace {
template <class C> C embed_impl(unsigned n, const std::vector<Rat>& c) {
    using R = typename C::value_type;
    R two_pi = 2 * boost::math::constants::pi<R>();
    C z(cos(two_pi / n), sin(two_pi / n));
    C acc(0);
    for (size_t i = c.size(); i-- > 0;) {
        acc *= z;
        acc += C(R(numerator(c[i]).template convert_to<R>() /
                   denominator(c[i]).template convert_to<R>()));
    }
    return acc;
}
} // namespace

CNum Cyclo::embed() const { return embed_impl<CNum>(n_, c_); }
CFast Cyclo::embed_fast() const { return embed_impl<CFast>(n_, c_); }

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        bool neg = a < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat mag = neg ? Rat(-a) : a;
        bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << rat_str(mag);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "zeta(" << n_ << ")";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace webfolio
