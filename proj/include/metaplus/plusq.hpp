#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "metaplus/padic.hpp"

namespace metaplus {

struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated q-expansion sum_{n <= bound} c(n) q^(n / den) with exact rational coefficients.
class QExpansion {
  public:
    QExpansion() = default;
    // twice_weight = 2k + 1 for weight k + 1/2, 2w for integral weight w.
    QExpansion(int bound, int twice_weight, int level = 4, int den = 1);

    int bound() const { return static_cast<int>(c_.size()) - 1; }
    int twice_weight() const { return twice_weight_; }
    int level() const { return level_; }
    int den() const { return den_; }
    bool half_integral() const { return twice_weight_ % 2 != 0; }
    // k for weight k + 1/2
    int k() const;

    const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
    Rational coeff(int n) const;  // zero outside [0, bound]
    bool is_zero() const;

    QExpansion operator+(const QExpansion& o) const;
    QExpansion operator-(const QExpansion& o) const;
    QExpansion operator*(const QExpansion& o) const;
    QExpansion operator*(const Rational& r) const;
    QExpansion pow(int e) const;
    bool operator==(const QExpansion& o) const;
    bool operator!=(const QExpansion& o) const { return !(*this == o); }

    QExpansion truncated(int bound) const;
    // f(z / m): exponents divided by m.
    QExpansion dilated_down(int m) const;

  private:
    std::vector<Rational> c_;
    int twice_weight_ = 0;
    int level_ = 4;
    int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QExpansion& f);

// "# key value" header lines followed by "n num/den" lines.
void write_expansion(std::ostream& os, const QExpansion& f);
QExpansion read_expansion(std::istream& is);

struct GlobalConfig {
    int k = 6;
    long long f = 1;  // sign unit, sgn f = (-1)^k
    long long level_multiplier = 1;
    int truncation = 200;

    void validate() const;
};
GlobalConfig make_config(int k, int truncation = 200, long long level_multiplier = 1);

QExpansion theta(int N);
QExpansion eisenstein_f2(int N);
// q prod (1 - q^n)^24
QExpansion ramanujan_delta(int N);
// eta(z)^8 / eta(2z)^4, so that F2 | W4 = this / 16 in weight 2.
QExpansion fricke_f2_base(int N);

// theta^(2k+1-4a) F2^a for 0 <= a <= (2k+1)/4; throws DomainError on rank deficiency.
std::vector<QExpansion> halfint_basis(int k, int N);

// Exact linear algebra over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;
int rational_rank(RationalMatrix m);
std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix m, std::size_t ncols);

// Sturm-type bound for weight k + 1/2 on Gamma0(4 N).
int sturm_bound(int k, long long level_multiplier);
bool plus_allowed(int n, long long f);
bool plus_member(const QExpansion& f, const GlobalConfig& cfg);
std::vector<QExpansion> plus_subspace(const std::vector<QExpansion>& basis, const GlobalConfig& cfg);
// Plus forms vanishing at all three cusps of Gamma0(4).
std::vector<QExpansion> cusp_plus_subspace(const GlobalConfig& cfg);

// b(n) = c(p^2 n) + ((-1)^k n / p) p^(k-1) c(n) + p^(2k-1) c(n / p^2), truncated at bound / p^2.
QExpansion hecke_Tp2(const QExpansion& f, int p);

// Elements of Q(zeta_M) reduced modulo the M-th cyclotomic polynomial.
class Cyclotomic {
  public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int M);
    static Cyclotomic root(int M, long long j, const Rational& r = 1);
    static Cyclotomic rational(const Rational& r);

    int order() const { return M_; }
    Cyclotomic lifted(int L) const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    bool operator==(const Cyclotomic& o) const;
    bool is_rational() const;
    Rational rational_part() const;
    std::complex<double> to_complex() const;

  private:
    void reduce(std::vector<Rational> poly);
    int M_;
    std::vector<Rational> c_;
};

struct CycloExpansion {
    int den = 1;
    int twice_weight = 0;
    std::vector<Cyclotomic> c;

    static CycloExpansion from(const QExpansion& f);
    QExpansion to_rational() const;  // throws DomainError on an irrational coefficient
    bool operator==(const CycloExpansion& o) const;
};

// rho(u#(x)): c(e) q^e -> c(e) psi1(e x) q^e with psi1(t) = exp(2 pi i t).
CycloExpansion fourier_translate(const CycloExpansion& f, const Rational& x);
CycloExpansion fourier_translate(const QExpansion& f, const Rational& x);

// rho(m(a)) f = sqrt(radicand) * expansion, expansion = a^-k f(a^-2 z) for a > 0 rational.
struct ScaledExpansion {
    QExpansion expansion;
    Rational radicand;
};
ScaledExpansion scaling_translate(const QExpansion& f, const Rational& a);

// f_lambda for lambda in {0, 1}, obtained by averaging translates of f(z/4) against psi(x lambda^2 / 4).
std::vector<QExpansion> lambda_components(const QExpansion& f, const GlobalConfig& cfg);
bool lambda_identity_holds(const QExpansion& f, const GlobalConfig& cfg);

// dim M_w(SL2(Z)) for even w >= 0.
int dim_level_one(int w);

struct ShimuraReport {
    bool pass = false;
    Rational eigenvalue, tau;
    std::string detail;
};
ShimuraReport shimura_eigen_check(const GlobalConfig& cfg, int p = 3);

}  // namespace metaplus
