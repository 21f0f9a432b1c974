#include "metaplus/metaplectic.hpp"

#include <climits>
#include <cmath>
#include <sstream>

namespace metaplus {

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

bool Mat2::equals(const Mat2& o) const {
    return a.equals(o.a) && b.equals(o.b) && c.equals(o.c) && d.equals(o.d);
}

std::string Mat2::to_string() const {
    return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

PadicNumber b_function(const Mat2& g) {
    if (!g.c.is_zero()) return g.c;
    if (!g.c.is_exact_zero() && g.c.absolute_precision() <= 0)
        throw AmbiguityError("b_function: lower-left entry indistinguishable from zero");
    return g.d;
}

int kubota_cocycle(const Mat2& g1, const Mat2& g2) {
    PadicNumber x1 = b_function(g1), x2 = b_function(g2), x3 = b_function(g1 * g2);
    return hilbert_symbol(x1 / x3, x2 / x3);
}

Mp2Element Mp2Element::operator*(const Mp2Element& o) const {
    return {g * o.g, sign * o.sign * kubota_cocycle(g, o.g)};
}

Mp2Element Mp2Element::inverse() const {
    Mat2 gi = g.inverse();
    // [g, s][g^-1, t] = [1, s t c(g, g^-1)]
    return {gi, sign * kubota_cocycle(g, gi)};
}

std::string Mp2Element::to_string() const {
    return "[" + g.to_string() + ", " + (sign > 0 ? "+1" : "-1") + "]";
}

Mp2Element make_mp2(const PadicNumber& a, const PadicNumber& b, const PadicNumber& c, const PadicNumber& d,
                    int sign) {
    Mat2 g{a, b, c, d};
    PadicNumber one = PadicNumber::from_integer(a.prime(), 1, a.is_zero() ? d.precision() : a.precision());
    if (!g.det().equals(one)) throw DomainError("make_mp2: determinant is not one");
    if (sign != 1 && sign != -1) throw DomainError("make_mp2: sign must be +-1");
    return {g, sign};
}

Mp2Element mp2_identity(int p, int prec) {
    PadicNumber one = PadicNumber::from_integer(p, 1, prec), zero = PadicNumber::zero(p);
    return {{one, zero, zero, one}, 1};
}

Mp2Element central(int p, int sign, int prec) {
    Mp2Element e = mp2_identity(p, prec);
    e.sign = sign;
    return e;
}

namespace {
PadicNumber one_like(const PadicNumber& x) {
    int prec = x.is_zero() ? 0 : x.precision();
    return PadicNumber::from_integer(x.prime(), 1, prec);
}
}  // namespace

Mp2Element u_sharp(const PadicNumber& b) {
    PadicNumber one = one_like(b), zero = PadicNumber::zero(b.prime());
    return {{one, b, zero, one}, 1};
}

Mp2Element u_flat(const PadicNumber& c) {
    PadicNumber one = one_like(c), zero = PadicNumber::zero(c.prime());
    return {{one, zero, c, one}, 1};
}

Mp2Element torus(const PadicNumber& a) {
    PadicNumber zero = PadicNumber::zero(a.prime());
    return {{a, zero, zero, a.inverse()}, 1};
}

Mp2Element weyl(const PadicNumber& a) {
    PadicNumber zero = PadicNumber::zero(a.prime());
    return {{zero, -a.inverse(), a, zero}, 1};
}

std::string Level::name() const {
    if (beta == 0 && gamma == 0) return "Gamma0(1)";
    if (beta == 0 && gamma == 1) return "Gamma0(pi)";
    if (beta == 1 && gamma == 0) return "Gamma[pi d^-1, d]";
    std::ostringstream os;
    os << "Gamma[p^" << beta << " d^-1, p^" << gamma << " d]";
    return os.str();
}

int normalized_b_valuation(const Mat2& g, const AdditiveCharacter& psi) {
    return g.b.is_zero() ? INT_MAX : g.b.valuation() + psi.index();
}

int normalized_c_valuation(const Mat2& g, const AdditiveCharacter& psi) {
    return g.c.is_zero() ? INT_MAX : g.c.valuation() - psi.index();
}

bool in_level(const Mat2& g, const Level& level, const AdditiveCharacter& psi) {
    auto integral = [](const PadicNumber& x) { return x.is_zero() || x.valuation() >= 0; };
    return integral(g.a) && integral(g.d) && normalized_b_valuation(g, psi) >= level.beta &&
           normalized_c_valuation(g, psi) >= level.gamma;
}

Mu8 epsilon(const Mp2Element& x, const AdditiveCharacter& psi) {
    int p = psi.prime();
    if (!in_level(x.g, Level::gamma0_4(p), psi)) throw DomainError("epsilon: element outside Gamma0(4)");
    Mu8 z = Mu8::sign(x.sign);
    PadicNumber one = psi.make(1);
    const Mat2& g = x.g;
    if (g.c.is_zero()) return weil_index(g.d, psi) / weil_index(one, psi) * z;
    if (p != 2 && g.d.valuation() >= 1) return z;
    return weil_index(g.c, psi) / weil_index(g.c * g.d, psi) * z;
}

Mu8 epsilon_check(const Mp2Element& x, const AdditiveCharacter& psi) {
    int p = psi.prime();
    Level dom{p == 2 ? 2 : 0, 0};
    if (!in_level(x.g, dom, psi)) throw DomainError("epsilon_check: element outside Gamma[4 d^-1, d]");
    PadicNumber two = psi.make(2);
    Mp2Element m2 = torus(two);
    return epsilon(m2.inverse() * x * m2, psi);
}

Iwasawa iwasawa_decompose(const Mp2Element& g, const AdditiveCharacter& psi) {
    const Mat2& m = g.g;
    PadicNumber b0, a0;
    bool case_a;
    if (m.c.is_zero())
        case_a = true;
    else if (m.d.is_zero())
        case_a = false;
    else
        case_a = m.c.valuation() - psi.index() >= m.d.valuation();
    if (case_a) {
        a0 = m.d.inverse();
        b0 = m.b / m.d;
    } else {
        a0 = psi.delta() / m.c;
        b0 = m.a / m.c;
    }
    Mp2Element bor = u_sharp(b0) * torus(a0);
    Mp2Element k = bor.inverse() * g;
    if (!in_level(k.g, Level::maximal(), psi)) throw InsufficientPrecision("iwasawa_decompose: reassembly left K");
    return {b0, a0, k};
}

RealMp2 RealMp2::operator*(const RealMp2& o) const {
    RealMp2 r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, 1};
    r.sign = sign * o.sign * real_kubota_cocycle(*this, o);
    return r;
}

int real_hilbert_symbol(double x, double y) { return (x < 0 && y < 0) ? -1 : 1; }

int real_kubota_cocycle(const RealMp2& g1, const RealMp2& g2) {
    auto bf = [](double c, double d) { return c != 0 ? c : d; };
    double x1 = bf(g1.c, g1.d), x2 = bf(g2.c, g2.d);
    double c3 = g1.c * g2.a + g1.d * g2.c, d3 = g1.c * g2.b + g1.d * g2.d;
    double x3 = bf(c3, d3);
    return real_hilbert_symbol(x1 / x3, x2 / x3);
}

std::complex<double> mobius(const RealMp2& g, std::complex<double> tau) {
    return (g.a * tau + g.b) / (g.c * tau + g.d);
}

std::complex<double> tilde_j(const RealMp2& g, std::complex<double> tau) {
    if (tau.imag() <= 0) throw DomainError("tilde_j: tau must lie in the upper half plane");
    double z = g.sign;
    if (g.c == 0) {
        std::complex<double> root = std::sqrt(std::complex<double>(g.d, 0.0));
        return g.d > 0 ? z * root : -z * root;
    }
    return z * std::sqrt(g.c * tau + g.d);
}

}  // namespace metaplus
