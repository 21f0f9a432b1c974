#pragma once

#include <vector>

#include <Eigen/Dense>

#include "metaplus/metaplectic.hpp"

namespace metaplus {

// Function on Q_p supported in p^-M O and invariant under p^N O, stored on the
// p^(M+N) points x = p^-M t, 0 <= t < p^(M+N).  Models grow and shrink on demand.
class SchwartzFunction {
  public:
    static constexpr std::size_t kMaxPoints = 1u << 16;
    static constexpr std::size_t kMaxFourierPoints = 1u << 12;

    SchwartzFunction() = default;
    SchwartzFunction(int p, int M, int N);

    // Indicator of p^k O.
    static SchwartzFunction indicator(int p, int k);
    // Indicator of r + p^k O for a rational r.
    static SchwartzFunction coset_indicator(int p, const Rational& r, int k);

    int prime() const { return p_; }
    int support_exponent() const { return M_; }
    int period_exponent() const { return N_; }
    std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
    const Eigen::VectorXcd& values() const { return values_; }
    Eigen::VectorXcd& values() { return values_; }

    cplx operator()(const PadicNumber& x) const;
    // Same function on a larger model (M2 >= M, N2 >= N).
    SchwartzFunction resampled(int M2, int N2) const;
    // Smallest model representing the same function (up to tol).
    SchwartzFunction compressed(double tol = 1e-12) const;

    SchwartzFunction operator+(const SchwartzFunction& o) const;
    SchwartzFunction operator-(const SchwartzFunction& o) const;
    SchwartzFunction operator*(cplx z) const;

    // x -> phi(t x).
    SchwartzFunction dilated(const PadicNumber& t) const;
    // x -> psi(b x^2) phi(x).
    SchwartzFunction quadratic_twist(const PadicNumber& b, const AdditiveCharacter& psi) const;
    // |delta|^(1/2) int phi(y) psi(xy) dy.
    SchwartzFunction fourier(const AdditiveCharacter& psi) const;

    double max_abs() const;

  private:
    int p_ = 0;
    int M_ = 0;
    int N_ = 0;
    Eigen::VectorXcd values_;
};

cplx inner_product(const SchwartzFunction& f, const SchwartzFunction& g);
bool approx_equal(const SchwartzFunction& f, const SchwartzFunction& g, double tol = 1e-9);
// lambda with f = lambda g, or throws DomainError when f is not proportional to g.
cplx proportionality(const SchwartzFunction& f, const SchwartzFunction& g, double tol = 1e-9);

// Generator words for the Weil representation.
struct WeilGenerator {
    enum Kind { USharp, Torus, Weyl } kind;
    PadicNumber x;
    Mp2Element element() const;
};
struct WeilWord {
    std::vector<WeilGenerator> letters;  // product letters[0] * letters[1] * ...
    int sign = 1;                        // g = sign * product
};
WeilWord bruhat_word(const Mp2Element& g, const AdditiveCharacter& psi);

SchwartzFunction weil_generator(const WeilGenerator& gen, const SchwartzFunction& phi, const AdditiveCharacter& psi);
SchwartzFunction weil_action(const Mp2Element& g, const SchwartzFunction& phi, const AdditiveCharacter& psi);

// phi_0 = 1_O and phi_0' = 1_{O/2}.
SchwartzFunction phi0(int p);
SchwartzFunction phi0_prime(int p);
// Indicator of lambda/2 + O for lambda in O/2O (p = 2: lambda in {0, 1}; odd p: lambda = 0).
SchwartzFunction phi_lambda(int p, int lambda);

// e^K and E^K as matrix coefficients of phi_0.
class IdempotentKernels {
  public:
    // For p = 2 the level K must be maximal; for odd p any level with Gamma = K.
    IdempotentKernels(const AdditiveCharacter& psi, const Level& K = Level::maximal());

    const AdditiveCharacter& psi() const { return psi_; }
    const Level& K() const { return K_; }
    const Level& Gamma() const { return Gamma_; }
    // Vol(K~) with Vol(Gamma~) = 1, computed as the index [K : Gamma].
    int volume() const { return static_cast<int>(k_cosets_.size()); }
    const std::vector<Mp2Element>& k_cosets() const { return k_cosets_; }
    const std::vector<Mp2Element>& E_cosets() const { return E_cosets_; }
    Mp2Element w2delta() const;

    bool in_K(const Mp2Element& g) const;
    bool in_E_support(const Mp2Element& g) const;
    cplx eK(const Mp2Element& g) const;
    cplx EK(const Mp2Element& g) const;
    // E^K by conjugating e^K (the definition, as opposed to the matrix coefficient).
    cplx EK_by_conjugation(const Mp2Element& g) const;
    // (e^K * e^K)(g) and (E^K * E^K)(g) as finite sums over Gamma-cosets of the support.
    cplx eK_squared(const Mp2Element& g) const;
    cplx EK_squared(const Mp2Element& g) const;

  private:
    AdditiveCharacter psi_;
    Level K_, Gamma_;
    int e_ = 0;
    std::vector<Mp2Element> k_cosets_;
    std::vector<Mp2Element> E_cosets_;
};

}  // namespace metaplus
