#include "webfolio/projective.hpp"

#include <sstream>

namespace webfolio {

std::string P1Point::str() const {
    if (infinite) return "[1:0]";
    std::ostringstream os;
    if (exact) {
        os << "[" << z.str() << ":1]";
    } else {
        os << "[" << zn.real().convert_to<double>();
        double im = zn.imag().convert_to<double>();
        if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
        os << ":1]";
    }
    return os.str();
}

bool p1_order(const P1Point& a, const P1Point& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    if (a.zn.real() != b.zn.real()) return a.zn.real() < b.zn.real();
    return a.zn.imag() < b.zn.imag();
}

ProjLine::ProjLine(Scalar a, Scalar b, Scalar g) : al(std::move(a)), be(std::move(b)), ga(std::move(g)) {
    if (al.is_zero() && be.is_zero() && ga.is_zero())
        throw DegenerateInput("line coefficients all zero");
    Scalar lead = !al.is_zero() ? al : (!be.is_zero() ? be : ga);
    Scalar inv = lead.inverse();
    al = al * inv;
    be = be * inv;
    ga = ga * inv;
}

ProjLine ProjLine::through_origin(const P1Point& dir) {
    if (!dir.exact) throw PreconditionError("line through origin needs an exact direction");
    // direction [a:b]: the line a*x - b*y = 0 contains (x,y) = (b,a)
    return ProjLine(dir.a(), -dir.b(), Scalar(0));
}

P1Point ProjLine::origin_direction() const {
    if (!through_origin_p()) throw PreconditionError("line does not pass through the origin");
    return P1Point::from_pair(-al, be);
}

std::string ProjLine::str() const {
    std::ostringstream os;
    os << "[" << al.str() << ":" << be.str() << ":" << ga.str() << "]";
    return os.str();
}

} // namespace webfolio
