#pragma once

#include <cstdint>
#include <random>

#include "metaplus/metaplectic.hpp"

namespace metaplus {

// Exact rational matrix, lifted to any precision on demand so that a sample can
// be re-evaluated at higher precision after an InsufficientPrecision error.
struct RationalMat2 {
    Rational a{1}, b{0}, c{0}, d{1};
    int sign = 1;

    RationalMat2 operator*(const RationalMat2& o) const;
    Mp2Element lift(int p, int prec = 0) const;
};

class Sampler {
  public:
    Sampler(int p, std::uint64_t seed) : p_(p), rng_(seed) {}

    int prime() const { return p_; }
    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi);
    Rational unit();
    Rational with_valuation(int v);
    // Element of p^vmin O, zero with probability zero_prob.
    Rational integral(int vmin, double zero_prob = 0.1);
    int sign();

    // Element of SL2(Q_p) with entry valuations roughly in [-vr, vr].
    RationalMat2 sl2(int vr = 2);
    // Element of Gamma[p^beta d^-1, p^gamma d] for psi of index c.
    RationalMat2 level_element(const Level& level, int c);

  private:
    int p_;
    std::mt19937_64 rng_;
};

RationalMat2 rational_weyl(int p, int k);  // w_{p^k}

}  // namespace metaplus
