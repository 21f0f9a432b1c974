#pragma once

#include <array>
#include <complex>
#include <string>

#include "metaplus/padic.hpp"

namespace metaplus {

using cplx = std::complex<double>;

// Zero or an eighth root of unity zeta8^e.
struct Mu8 {
    bool zero = false;
    int e = 0;

    static Mu8 one() { return {}; }
    static Mu8 zeta(int e) { return {false, ((e % 8) + 8) % 8}; }
    static Mu8 sign(int s) { return zeta(s < 0 ? 4 : 0); }

    Mu8 operator*(const Mu8& o) const {
        if (zero || o.zero) return {true, 0};
        return zeta(e + o.e);
    }
    Mu8 conj() const { return zero ? *this : zeta(-e); }
    Mu8 inverse() const;
    Mu8 operator/(const Mu8& o) const { return *this * o.inverse(); }
    bool operator==(const Mu8& o) const { return zero == o.zero && (zero || e == o.e); }
    bool operator!=(const Mu8& o) const { return !(*this == o); }
    cplx to_complex() const;
    std::string to_string() const;
};

// Snap a complex number to the nearest element of mu8; throws when the distance exceeds tol.
Mu8 snap_mu8(cplx z, double tol);

// Element of Q(zeta8, sqrt(q)) in the normal form sum r_{j,h} zeta8^j q^{h/2},
// j in 0..3, h in 0..1.  For q = 2 the square root is folded into Q(zeta8).
class ExactScalar {
  public:
    ExactScalar() = default;
    explicit ExactScalar(int q) : q_(q) {}
    ExactScalar(int q, const Rational& r) : q_(q) { c_[0][0] = r; }

    static ExactScalar zero(int q) { return ExactScalar(q); }
    static ExactScalar one(int q) { return ExactScalar(q, Rational(1)); }
    // r * zeta8^j * q^(m/2)
    static ExactScalar monomial(int q, const Rational& r, int j, int m);
    static ExactScalar from_mu8(int q, const Mu8& z);

    int q() const { return q_; }
    const Rational& coeff(int j, int h) const { return c_[j][h]; }
    bool is_zero() const;

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator*(const Mu8& z) const;
    ExactScalar operator*(const Rational& r) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    ExactScalar conj() const;

    cplx to_complex() const;
    std::string to_string() const;

  private:
    void adopt(int q);
    int q_ = 0;
    std::array<std::array<Rational, 2>, 4> c_{};
};

}  // namespace metaplus
