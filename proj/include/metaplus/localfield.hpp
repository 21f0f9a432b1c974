#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "metaplus/padic.hpp"
#include "metaplus/scalars.hpp"

namespace metaplus {

// Hilbert symbol (a,b)_p in {+1,-1}.  Needs 3 relative digits (5 when p = 2).
int hilbert_symbol(const PadicNumber& a, const PadicNumber& b);

// Index of the square class of a nonzero element: 0..3 for odd p, 0..7 for p = 2.
int square_class(const PadicNumber& a);
bool is_square(const PadicNumber& a);
// One element of every square class with valuation in [vmin, vmax].
std::vector<PadicNumber> square_class_representatives(int p, int vmin, int vmax);
// Smallest positive non-square unit (3 for p = 2).
long long first_nonresidue(int p);

// e(num/den), a root of unity of p-power order.
struct RootOfUnity {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    cplx to_complex() const;
};

// psi(x) = psi1(scale * x) where psi1(x) = exp(2 pi i {x}_p) has index 0 and
// scale = p^c * eta with eta a unit.  c is the index c_psi, delta = p^c.
class AdditiveCharacter {
  public:
    AdditiveCharacter() = default;
    AdditiveCharacter(int p, int c = 0, long long eta = 1, int prec = 0);

    int prime() const { return p_; }
    int index() const { return c_; }
    long long eta() const { return eta_; }
    int precision() const { return prec_; }
    PadicNumber scale() const;
    PadicNumber delta() const;  // p^c
    // psi restricted to y -> psi(b * y) for a nonzero b.
    AdditiveCharacter twisted(const PadicNumber& b) const;

    RootOfUnity value(const PadicNumber& x) const;
    // psi(p^k * n) for an integer n, without building a PadicNumber.
    RootOfUnity value_scaled(int k, i128 n) const;

    PadicNumber make(long long n) const { return PadicNumber::from_integer(p_, n, prec_); }
    PadicNumber make(const Rational& r) const { return PadicNumber::from_rational(p_, r, prec_); }
    PadicNumber pi_power(int k) const { return PadicNumber::uniformizer_power(p_, k, prec_); }

  private:
    int p_ = 0;
    int c_ = 0;
    long long eta_ = 1;
    int prec_ = 0;
};

// Closed-form Weil index alpha_psi(a).
Mu8 weil_index(const PadicNumber& a, const AdditiveCharacter& psi);
// Weil index at the real place for psi_inf(x) = e(x): e^{+-pi i/4} by the sign of a.
Mu8 weil_index_real(double a);

// Integral of psi(b y^2) over p^-M O, as a finite sum over p^-M O / p^K O.
cplx quadratic_character_integral(const AdditiveCharacter& psi, const PadicNumber& b, int M, int K);
// Smallest K for which the sum above is exact.
int quadratic_integral_depth(const AdditiveCharacter& psi, const PadicNumber& b, int M);

// Brute-force Weil index from its defining identity with phi = 1_O.
// depth is the number of extra digits beyond the minimal exact depth; stabilisation
// between depth and depth + 1 is checked and the result is snapped to mu8.
struct OracleResult {
    Mu8 value;
    cplx raw;
    double stabilisation_gap = 0;
};
OracleResult weil_index_oracle(const PadicNumber& a, const AdditiveCharacter& psi, int depth = 0);

}  // namespace metaplus
