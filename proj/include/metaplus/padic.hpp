#pragma once

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace metaplus {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;
using i128 = __int128;

struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Small modular helpers shared by the field code.
std::uint64_t ipow(std::uint64_t base, int exp);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t posmod(i128 a, std::uint64_t m);
bool is_prime(int p);

inline int default_precision(int p) { return p == 2 ? 16 : 12; }
// Largest relative precision with p^N < 2^62.
int max_precision(int p);

// x = p^v * u with u a unit known modulo p^N (N = relative precision).
// Zero carries v = +inf; an exact zero also has infinite absolute precision,
// a zero produced by cancellation remembers the absolute precision it is known to.
class PadicNumber {
  public:
    static constexpr int kInf = INT_MAX;

    PadicNumber() = default;

    static PadicNumber zero(int p);
    static PadicNumber from_integer(int p, long long n, int prec = 0);
    static PadicNumber from_rational(int p, const Rational& r, int prec = 0);
    static PadicNumber from_parts(int p, int v, std::uint64_t unit, int prec = 0);
    static PadicNumber uniformizer_power(int p, int k, int prec = 0);

    int prime() const { return p_; }
    int precision() const { return n_; }
    int valuation() const { return v_; }
    std::uint64_t unit() const { return u_; }
    bool is_zero() const { return v_ == kInf; }
    bool is_exact_zero() const { return v_ == kInf && abs_ == kInf; }
    // v + N for nonzero values.
    int absolute_precision() const;
    bool is_integral() const { return v_ >= 0; }
    bool is_unit() const { return v_ == 0; }

    // u mod p^k; throws when k exceeds the stored precision.
    std::uint64_t unit_mod(int k) const;
    // Unit part as a p-adic number of valuation 0.
    PadicNumber unit_part() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber inverse() const;
    PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
    PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }

    // Equality as elements to the common available precision.
    bool equals(const PadicNumber& o) const;

    // Residue of an integral element modulo p^k (needs v + N >= k or exact zero).
    std::uint64_t residue_mod(int k) const;

    std::string to_string() const;

  private:
    PadicNumber(int p, int v, std::uint64_t u, int n, int abs)
        : p_(p), v_(v), u_(u), n_(n), abs_(abs) {}
    static PadicNumber make_zero(int p, int abs_prec);

    int p_ = 0;
    int v_ = kInf;
    std::uint64_t u_ = 0;
    int n_ = 0;
    int abs_ = kInf;  // only meaningful for zero
};

// Legendre symbol of an integer residue, p odd, argument prime to p.
int legendre(long long u, int p);

}  // namespace metaplus
