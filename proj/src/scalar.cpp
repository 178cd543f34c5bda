#include "webfolio/scalar.hpp"

#include <sstream>

namespace webfolio {

const Cyclo& Scalar::constant() const {
    static const Cyclo zero;
    if (!t_free()) throw MathError("scalar depends on the parameter t: " + str());
    return c_.empty() ? zero : c_[0];
}

Rat Scalar::rational_value() const {
    if (c_.empty()) return Rat(0);
    return constant().rational_value();
}

unsigned Scalar::conductor() const {
    unsigned n = 1;
    for (const auto& c : c_) n = common_conductor(n, c.conductor());
    return n;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    std::vector<Cyclo> r(std::max(a.c_.size(), b.c_.size()), Cyclo());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
        if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
    }
    return Scalar(std::move(r));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
    std::vector<Cyclo> r = c_;
    for (auto& x : r) x = -x;
    return Scalar(std::move(r));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.c_.empty() || b.c_.empty()) return Scalar();
    std::vector<Cyclo> r(a.c_.size() + b.c_.size() - 1, Cyclo());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Scalar(std::move(r));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DegenerateInput("division by zero");
    if (b.t_free()) {
        Cyclo inv = b.c_[0].inverse();
        std::vector<Cyclo> r = a.c_;
        for (auto& x : r) x = x * inv;
        return Scalar(std::move(r));
    }
    // exact polynomial division in t
    if (a.is_zero()) return Scalar();
    if (a.t_degree() < b.t_degree())
        throw MathError("non-exact division by a parameter-dependent scalar");
    std::vector<Cyclo> rem = a.c_, q(a.c_.size() - b.c_.size() + 1, Cyclo());
    Cyclo lead_inv = b.c_.back().inverse();
    for (size_t k = q.size(); k-- > 0;) {
        Cyclo c = rem[k + b.c_.size() - 1] * lead_inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            rem[k + j] = rem[k + j] - c * b.c_[j];
    }
    for (const auto& x : rem)
        if (!x.is_zero()) throw MathError("non-exact division by a parameter-dependent scalar");
    return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
    if (!t_free()) throw MathError("cannot invert a parameter-dependent scalar");
    if (is_zero()) throw DegenerateInput("division by zero");
    return Scalar(c_[0].inverse());
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Scalar Scalar::subst_t(const Scalar& value) const {
    Scalar acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * value + Scalar(c_[i]);
    return acc;
}

CNum Scalar::embed() const {
    if (!t_free()) throw MathError("cannot embed a parameter-dependent scalar");
    return c_.empty() ? CNum(0) : c_[0].embed();
}

CFast Scalar::embed_fast() const {
    if (!t_free()) throw MathError("cannot embed a parameter-dependent scalar");
    return c_.empty() ? CFast(0) : c_[0].embed_fast();
}

std::string KVal::str() const {
    if (exact) return s.str();
    std::ostringstream os;
    os << z.real().convert_to<double>();
    double im = z.imag().convert_to<double>();
    if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
    return os.str();
}

std::string Scalar::str() const {
    if (c_.empty()) return "0";
    if (t_free()) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool neg = cs.size() > 1 && cs[0] == '-';
        if (!first) {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        bool needs_parens = cs.find(' ') != std::string::npos;
        bool unit = (cs == "1") && i > 0;
        bool munit = first && (cs == "-1") && i > 0;
        if (munit) os << "-";
        else if (!unit) {
            if (needs_parens) os << "(" << cs << ")";
            else os << cs;
        }
        if (i > 0) {
            if (!unit && !munit) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace webfolio
