#pragma once

#include <complex>
#include <string>

#include "metaplus/localfield.hpp"

namespace metaplus {

struct Mat2 {
    PadicNumber a, b, c, d;

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // determinant one
    PadicNumber det() const { return a * d - b * c; }
    bool equals(const Mat2& o) const;
    int prime() const { return a.prime(); }
    std::string to_string() const;
};

// [g, zeta] in Mp2(Q_p) with the Kubota cocycle.
struct Mp2Element {
    Mat2 g;
    int sign = 1;

    Mp2Element operator*(const Mp2Element& o) const;
    Mp2Element inverse() const;
    bool equals(const Mp2Element& o) const { return sign == o.sign && g.equals(o.g); }
    int prime() const { return g.prime(); }
    std::string to_string() const;
};

// c if c != 0, else d.
PadicNumber b_function(const Mat2& g);
int kubota_cocycle(const Mat2& g1, const Mat2& g2);

Mp2Element make_mp2(const PadicNumber& a, const PadicNumber& b, const PadicNumber& c, const PadicNumber& d,
                    int sign = 1);
Mp2Element mp2_identity(int p, int prec = 0);
Mp2Element central(int p, int sign, int prec = 0);
Mp2Element u_sharp(const PadicNumber& b);
Mp2Element u_flat(const PadicNumber& c);
Mp2Element torus(const PadicNumber& a);  // m(a) = diag(a, 1/a)
Mp2Element weyl(const PadicNumber& a);   // w_a = [[0, -1/a], [a, 0]]

// Gamma[p^beta d^-1, p^gamma d]: a, d integral, delta*b in p^beta O, c/delta in p^gamma O.
struct Level {
    int beta = 0;
    int gamma = 0;

    static Level maximal() { return {0, 0}; }
    static Level iwahori() { return {0, 1}; }           // Gamma0(pi)
    static Level iwahori_opposite() { return {1, 0}; }  // Gamma[pi d^-1, d]
    static Level gamma0_4(int p) { return {0, p == 2 ? 2 : 0}; }
    bool operator==(const Level& o) const { return beta == o.beta && gamma == o.gamma; }
    std::string name() const;
};

// Valuations of the entries in coordinates where the maximal level is SL2(Z_p).
int normalized_b_valuation(const Mat2& g, const AdditiveCharacter& psi);
int normalized_c_valuation(const Mat2& g, const AdditiveCharacter& psi);
bool in_level(const Mat2& g, const Level& level, const AdditiveCharacter& psi);

// Genuine character on the metaplectic lift of Gamma0(4).
Mu8 epsilon(const Mp2Element& x, const AdditiveCharacter& psi);
// Conjugate character on Gamma[4 d^-1, d].
Mu8 epsilon_check(const Mp2Element& x, const AdditiveCharacter& psi);

// g = u#(b0) m(a0) k with k in the maximal level, exact including the sign.
struct Iwasawa {
    PadicNumber b0, a0;
    Mp2Element k;
};
Iwasawa iwasawa_decompose(const Mp2Element& g, const AdditiveCharacter& psi);

// Real metaplectic group.
struct RealMp2 {
    double a = 1, b = 0, c = 0, d = 1;
    int sign = 1;
    RealMp2 operator*(const RealMp2& o) const;
};
int real_hilbert_symbol(double x, double y);
int real_kubota_cocycle(const RealMp2& g1, const RealMp2& g2);
std::complex<double> mobius(const RealMp2& g, std::complex<double> tau);
std::complex<double> tilde_j(const RealMp2& g, std::complex<double> tau);

}  // namespace metaplus
