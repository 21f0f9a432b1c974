#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "metaplus/hecke.hpp"
#include "metaplus/weilrep.hpp"

namespace metaplus {

// Gamma-fixed part of the principal series I_psi(s), s carried as z = q^s.
class PrincipalSeries {
  public:
    PrincipalSeries(const HeckeAlgebra& alg, cplx qs);

    const HeckeAlgebra& algebra() const { return *alg_; }
    const AdditiveCharacter& psi() const { return alg_->psi(); }
    int q() const { return alg_->prime(); }
    cplx qs() const { return qs_; }
    std::size_t dimension() const { return cells_.size(); }
    // Representatives of B~ \ Mp2 / Gamma~: I, w_delta and (p = 2) u_flat(2 delta).
    const std::vector<Mp2Element>& cells() const { return cells_; }
    const std::vector<std::string>& cell_names() const { return names_; }
    // False when the stabilizer characters disagree on the cell, forcing every fixed vector to vanish there.
    bool supports(std::size_t cell) const { return supported_[cell]; }
    std::size_t fixed_dimension() const;

    // g = [u#(b) m(A), 1] * cells[cell] * gamma with gamma in Gamma~.
    struct Decomposition {
        std::size_t cell;
        PadicNumber A;
        Mp2Element gamma;
    };
    Decomposition decompose(const Mp2Element& g) const;
    // alpha(1)/alpha(a) |a|^(s+1)
    cplx character(const PadicNumber& a) const;

  private:
    const HeckeAlgebra* alg_;
    cplx qs_;
    std::vector<Mp2Element> cells_;
    std::vector<std::string> names_;
    std::vector<bool> supported_;
};

class PrincipalSeriesVector {
  public:
    PrincipalSeriesVector(const PrincipalSeries& ps, Eigen::VectorXcd table);
    static PrincipalSeriesVector cell(const PrincipalSeries& ps, std::size_t i, cplx value = 1.0);

    const PrincipalSeries& space() const { return *ps_; }
    const Eigen::VectorXcd& table() const { return table_; }
    cplx operator()(const Mp2Element& g) const;

    PrincipalSeriesVector operator+(const PrincipalSeriesVector& o) const;
    PrincipalSeriesVector operator-(const PrincipalSeriesVector& o) const;
    PrincipalSeriesVector operator*(cplx z) const;

  private:
    const PrincipalSeries* ps_;
    Eigen::VectorXcd table_;
};

bool approx_equal(const PrincipalSeriesVector& f, const PrincipalSeriesVector& g, double tol = 1e-9);

// rho(X) f = sum_i X(g_i) rho(g_i) f over the left cosets of supp X.
PrincipalSeriesVector act(const HeckeElement& X, const PrincipalSeriesVector& f);
Eigen::MatrixXcd action_matrix(const HeckeElement& X, const PrincipalSeries& ps);

enum class Kernel { eK, EK };
// rho(e^K) f or rho(E^K) f as a sum over Gamma~-cosets of the kernel support (p = 2, Gamma0(4)).
PrincipalSeriesVector act_kernel(const IdempotentKernels& ker, Kernel which, const PrincipalSeriesVector& f);
Eigen::MatrixXcd kernel_matrix(const IdempotentKernels& ker, Kernel which, const PrincipalSeries& ps);
int numerical_rank(const Eigen::MatrixXcd& m, double tol = 1e-9);

PrincipalSeriesVector f0(const PrincipalSeries& ps);
PrincipalSeriesVector f1(const PrincipalSeries& ps);
PrincipalSeriesVector f2(const PrincipalSeries& ps);

// f^+ = rho(w_{2 delta}) f^[0], f^[0] = q^-e Vol(K~) conj(e^K) on K~; and its restriction to one cell.
PrincipalSeriesVector f_plus(const PrincipalSeries& ps, const IdempotentKernels& ker);
PrincipalSeriesVector f_plus_cell(const PrincipalSeries& ps, const IdempotentKernels& ker, std::size_t cell);

// Steinberg parameter: q^s = sign sqrt(q); twisted relative to psi1 = psi(eta^-1 .).
struct SteinbergTag {
    int sign = 1;
    bool twisted = false;
};
SteinbergTag steinberg_tag(int q, int sign, long long eta);
// f1 - q^-1 f2 on Gamma0(pi); requires q^(2s) = q.
PrincipalSeriesVector steinberg_fixed(const PrincipalSeries& ps);

// Exact action matrix at q^s = sign sqrt(q), entries in Q(zeta8, sqrt(q)); column j is rho(X) applied to cell j.
using ExactMatrix = std::vector<std::vector<ExactScalar>>;
ExactMatrix exact_action_matrix(const HeckeElement& X, const PrincipalSeries& ps, int sign);
ExactMatrix exact_multiply(const ExactMatrix& a, const ExactMatrix& b);
// f1 - q^-1 f2 as an exact table.
std::vector<ExactScalar> exact_steinberg_table(const PrincipalSeries& ps);
std::vector<ExactScalar> exact_apply(const ExactMatrix& m, const std::vector<ExactScalar>& v);

// Truncation of int f(w_delta u#(x)) conj(psi1(xi x)) dx over p^-depth O, where psi = psi1(eta .).
cplx whittaker_truncated(const PrincipalSeriesVector& f, long long xi, int depth);
struct WhittakerValue {
    cplx value;
    int depth;
};
// Raises the depth from c_psi - beta until two consecutive truncations agree; throws DomainError otherwise.
WhittakerValue whittaker(const PrincipalSeriesVector& f, long long xi, int max_extra = 6);

// sum over K/Gamma of f(k) conj(g(k)), normalized by the index; g is taken in the dual parameter.
cplx pairing(const PrincipalSeriesVector& f, const PrincipalSeriesVector& g);

// alpha(1) alpha(xi a) / (alpha(a) alpha(xi)) = (-1)^ord(a) for a non-square unit xi.
bool parameter_flip_holds(const AdditiveCharacter& psi, long long xi, const PadicNumber& a);

struct NumericCheck {
    std::string name;
    bool pass = false;
    cplx value, expected;
};
// Eigenvalue statements over a grid of s at prime p (odd: Gamma1 and both Iwahori levels; 2: Gamma0(4)).
std::vector<NumericCheck> eigen_suite(int p, const std::vector<cplx>& s_grid, int c_psi = 0, long long eta = 1,
                                      double tol = 1e-9);
// Whittaker closed forms on Gamma0(pi) for both residue classes of xi.
std::vector<NumericCheck> whittaker_suite(int p, const std::vector<cplx>& s_grid, int c_psi = 0, long long eta = 1,
                                          double tol = 1e-9);
std::vector<cplx> default_s_grid();
cplx q_power(int q, cplx s);

}  // namespace metaplus
