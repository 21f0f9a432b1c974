#pragma once

#include <map>
#include <string>
#include <vector>

#include "metaplus/metaplectic.hpp"

namespace metaplus {

struct DoubleCosetLabel {
    enum Kind { Torus, Weyl, Other } kind = Torus;
    int m = 0;

    static DoubleCosetLabel torus(int m) { return {Torus, m}; }
    static DoubleCosetLabel weyl(int m) { return {Weyl, m}; }
    bool operator<(const DoubleCosetLabel& o) const { return kind != o.kind ? kind < o.kind : m < o.m; }
    bool operator==(const DoubleCosetLabel& o) const { return kind == o.kind && m == o.m; }
    std::string to_string() const;
};

// g = left * rep * right with left, right in Gamma~ and rep the label representative [r, 1].
struct CanonicalForm {
    DoubleCosetLabel label;
    Mp2Element left, rep, right;
};

// Gamma~ \ Mp2 / Gamma~ for Gamma = Gamma0(1) (odd p), Gamma0(pi), Gamma[pi d^-1, d] (odd p)
// or Gamma0(4) (p = 2).  Torus labels are m(pi^m); Weyl labels are w_{delta pi^m}.
class HeckeAlgebra {
  public:
    HeckeAlgebra(int p, const Level& level, int c_psi = 0, long long eta = 1);

    int prime() const { return psi_.prime(); }
    const AdditiveCharacter& psi() const { return psi_; }
    const Level& level() const { return level_; }
    bool is_maximal() const { return level_ == Level::maximal(); }
    bool has_weyl_labels() const { return level_.beta + level_.gamma == 1; }

    bool legal(const DoubleCosetLabel& l) const;
    Mp2Element representative(const DoubleCosetLabel& l) const;
    // Extension of epsilon to the representatives.
    Mu8 epsilon_rep(const DoubleCosetLabel& l) const;
    Mu8 epsilon_gamma(const Mp2Element& g) const { return epsilon(g, psi_); }
    bool in_gamma(const Mat2& g) const { return in_level(g, level_, psi_); }

    CanonicalForm canonicalize(const Mp2Element& g) const;
    DoubleCosetLabel label_of(const Mp2Element& g) const { return canonicalize(g).label; }

    // Left cosets g_i Gamma~ of Gamma~ rep Gamma~, each g_i = h_i rep with h_i in Gamma~.
    std::vector<Mp2Element> coset_reps(const DoubleCosetLabel& l) const;
    long long coset_count(const DoubleCosetLabel& l) const;
    // Right cosets Gamma~ h_j.
    std::vector<Mp2Element> right_coset_reps(const DoubleCosetLabel& l) const;

    // Legal labels with |m| <= window.
    std::vector<DoubleCosetLabel> labels(int window) const;

  private:
    PadicNumber pi_pow(int k) const { return psi_.pi_power(k); }
    AdditiveCharacter psi_;
    Level level_;
};

// Finite combination sum c_L X_L, X_L(g1 rep g2) = eps(g1) eps(rep) eps(g2).
class HeckeElement {
  public:
    HeckeElement() = default;
    explicit HeckeElement(const HeckeAlgebra& alg) : alg_(&alg) {}
    static HeckeElement basis(const HeckeAlgebra& alg, const DoubleCosetLabel& l, const ExactScalar& c);
    static HeckeElement identity(const HeckeAlgebra& alg);

    const HeckeAlgebra& algebra() const { return *alg_; }
    const std::map<DoubleCosetLabel, ExactScalar>& coefficients() const { return coeffs_; }
    ExactScalar coefficient(const DoubleCosetLabel& l) const;
    void set(const DoubleCosetLabel& l, const ExactScalar& c);
    int max_abs_label() const;
    long long coset_total() const;

    ExactScalar evaluate(const Mp2Element& g) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const ExactScalar& c) const;
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }
    std::string to_string() const;

  private:
    const HeckeAlgebra* alg_ = nullptr;
    std::map<DoubleCosetLabel, ExactScalar> coeffs_;
};

// (X * Y)(g) with Vol(Gamma~) = 1, summing over the smaller side's cosets.
ExactScalar convolve_at(const HeckeElement& X, const HeckeElement& Y, const Mp2Element& g);
// X * Y on every legal label up to the support bound.
HeckeElement convolve(const HeckeElement& X, const HeckeElement& Y);

// Normalized operators.
struct StandardOps {
    const HeckeAlgebra* alg;
    HeckeElement identity() const;
    HeckeElement T(int m) const;  // q^{-|m|/2} X_{m(pi^m)}, or X_{m(pi^-m)} on Gamma[pi d^-1, d]
    HeckeElement U(int m) const;  // q^{-|m|/2} X_{w_{delta pi^m}}, or w_{delta pi^-m} on Gamma[pi d^-1, d]
    // Operators displayed in the introduction for levels dividing the conductor.
    HeckeElement T1_local() const;
    HeckeElement U1_local() const;
};
StandardOps standard_ops(const HeckeAlgebra& alg);

struct RelationResult {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
};
// Relations for Gamma1 / Gamma2 / Gamma0(4) (chosen by the algebra), labels |m| <= mmax.
std::vector<RelationResult> relation_suite(const HeckeAlgebra& alg, int mmax = 5);

// PGL2(Q_p) analogues with raw characteristic functions.
class Pgl2HeckeAlgebra {
  public:
    enum Type { Maximal, Iwahori };
    Pgl2HeckeAlgebra(int p, Type type, int c_psi = 0);

    int prime() const { return psi_.prime(); }
    Type type() const { return type_; }
    const AdditiveCharacter& psi() const { return psi_; }
    DoubleCosetLabel label_of(const Mat2& g) const;
    Mat2 representative(const DoubleCosetLabel& l) const;
    std::vector<Mat2> coset_reps(const DoubleCosetLabel& l) const;
    std::vector<DoubleCosetLabel> labels(int window) const;

  private:
    AdditiveCharacter psi_;
    Type type_;
};

// Integer combination of double coset characteristic functions.
struct Pgl2Element {
    const Pgl2HeckeAlgebra* alg = nullptr;
    std::map<DoubleCosetLabel, long long> coeffs;
    long long evaluate(const Mat2& g) const;
    bool operator==(const Pgl2Element& o) const;
    std::string to_string() const;
};
Pgl2Element pgl2_basis(const Pgl2HeckeAlgebra& alg, const DoubleCosetLabel& l, long long c = 1);
Pgl2Element pgl2_add(const Pgl2Element& a, const Pgl2Element& b, long long cb = 1);
Pgl2Element pgl2_convolve(const Pgl2Element& X, const Pgl2Element& Y);
std::vector<RelationResult> pgl2_relation_suite(const Pgl2HeckeAlgebra& alg, int mmax = 5);

}  // namespace metaplus
