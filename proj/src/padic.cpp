#include "metaplus/padic.hpp"

#include <algorithm>
#include <sstream>

namespace metaplus {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t posmod(i128 a, std::uint64_t m) {
    i128 r = a % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    i128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        i128 q = r / nr;
        i128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DomainError("invmod: not invertible");
    return posmod(t, m);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int max_precision(int p) {
    int n = 0;
    u128 v = 1;
    while (v * p < (static_cast<u128>(1) << 62)) {
        v *= p;
        ++n;
    }
    return n;
}

namespace {

int resolve_prec(int p, int prec) {
    if (!is_prime(p)) throw DomainError("PadicNumber: p must be prime");
    if (prec <= 0) prec = std::min(default_precision(p), max_precision(p));
    if (prec > max_precision(p)) throw DomainError("PadicNumber: precision too large for p");
    return prec;
}

int big_valuation(BigInt& n, int p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

PadicNumber PadicNumber::make_zero(int p, int abs_prec) { return PadicNumber(p, kInf, 0, 0, abs_prec); }

PadicNumber PadicNumber::zero(int p) {
    if (!is_prime(p)) throw DomainError("PadicNumber: p must be prime");
    return make_zero(p, kInf);
}

PadicNumber PadicNumber::from_integer(int p, long long n, int prec) {
    return from_rational(p, Rational(n), prec);
}

PadicNumber PadicNumber::from_rational(int p, const Rational& r, int prec) {
    prec = resolve_prec(p, prec);
    if (r == 0) return make_zero(p, kInf);
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    int v = big_valuation(num, p) - big_valuation(den, p);
    std::uint64_t mod = ipow(p, prec);
    BigInt nm = num % mod;
    if (nm < 0) nm += mod;
    BigInt dm = den % mod;
    std::uint64_t u = mulmod(nm.convert_to<std::uint64_t>(), invmod(dm.convert_to<std::uint64_t>(), mod), mod);
    return PadicNumber(p, v, u, prec, kInf);
}

PadicNumber PadicNumber::from_parts(int p, int v, std::uint64_t unit, int prec) {
    prec = resolve_prec(p, prec);
    std::uint64_t mod = ipow(p, prec);
    unit %= mod;
    if (unit % p == 0) throw DomainError("PadicNumber::from_parts: unit divisible by p");
    return PadicNumber(p, v, unit, prec, kInf);
}

PadicNumber PadicNumber::uniformizer_power(int p, int k, int prec) { return from_parts(p, k, 1, prec); }

int PadicNumber::absolute_precision() const {
    if (is_zero()) return abs_;
    return v_ + n_;
}

std::uint64_t PadicNumber::unit_mod(int k) const {
    if (is_zero()) throw DomainError("unit_mod of zero");
    if (k > n_)
        throw InsufficientPrecision("need " + std::to_string(k) + " digits, have " + std::to_string(n_));
    return u_ % ipow(p_, k);
}

PadicNumber PadicNumber::unit_part() const {
    if (is_zero()) throw DomainError("unit_part of zero");
    return PadicNumber(p_, 0, u_, n_, kInf);
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    std::uint64_t mod = ipow(p_, n_);
    return PadicNumber(p_, v_, (mod - u_) % mod, n_, kInf);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw DomainError("PadicNumber: mismatched primes");
    if (is_zero() && o.is_zero()) return make_zero(p_, std::min(abs_, o.abs_));
    if (is_zero() || o.is_zero()) {
        const PadicNumber& x = is_zero() ? o : *this;
        int a = is_zero() ? abs_ : o.abs_;
        if (a == kInf || a >= x.v_ + x.n_) return x;
        if (a <= x.v_) return make_zero(p_, a);
        int n = a - x.v_;
        return PadicNumber(p_, x.v_, x.u_ % ipow(p_, n), n, kInf);
    }
    int a = std::min(v_ + n_, o.v_ + o.n_);
    int vmin = std::min(v_, o.v_);
    int digits = a - vmin;
    std::uint64_t mod = ipow(p_, digits);
    auto shifted = [&](std::uint64_t u, int shift) -> std::uint64_t {
        if (shift >= digits) return 0;
        return mulmod(u % mod, ipow(p_, shift), mod);
    };
    u128 s = static_cast<u128>(shifted(u_, v_ - vmin)) + shifted(o.u_, o.v_ - vmin);
    std::uint64_t sum = static_cast<std::uint64_t>(s % mod);
    if (sum == 0) return make_zero(p_, a);
    int t = 0;
    while (sum % p_ == 0) {
        sum /= p_;
        ++t;
    }
    int n = digits - t;
    return PadicNumber(p_, vmin + t, sum % ipow(p_, n), n, kInf);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw DomainError("PadicNumber: mismatched primes");
    if (is_zero() || o.is_zero()) {
        if (is_exact_zero() || o.is_exact_zero()) return make_zero(p_, kInf);
        if (is_zero() && o.is_zero()) return make_zero(p_, abs_ + o.abs_);
        const PadicNumber& z = is_zero() ? *this : o;
        const PadicNumber& x = is_zero() ? o : *this;
        return make_zero(p_, z.abs_ + x.v_);
    }
    int n = std::min(n_, o.n_);
    std::uint64_t mod = ipow(p_, n);
    return PadicNumber(p_, v_ + o.v_, mulmod(u_ % mod, o.u_ % mod, mod), n, kInf);
}

PadicNumber PadicNumber::inverse() const {
    if (is_zero()) throw DomainError("PadicNumber: division by zero");
    std::uint64_t mod = ipow(p_, n_);
    return PadicNumber(p_, -v_, invmod(u_, mod), n_, kInf);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const { return *this * o.inverse(); }

bool PadicNumber::equals(const PadicNumber& o) const { return (*this - o).is_zero(); }

std::uint64_t PadicNumber::residue_mod(int k) const {
    if (k <= 0) return 0;
    std::uint64_t mod = ipow(p_, k);
    if (is_zero()) {
        if (abs_ < k) throw InsufficientPrecision("residue_mod: zero known only to lower precision");
        return 0;
    }
    if (v_ < 0) throw DomainError("residue_mod: element is not integral");
    if (v_ >= k) return 0;
    if (v_ + n_ < k) throw InsufficientPrecision("residue_mod: not enough digits");
    return mulmod(u_ % mod, ipow(p_, v_), mod);
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "0";
        if (abs_ != kInf) os << " + O(" << p_ << "^" << abs_ << ")";
        return os.str();
    }
    os << p_ << "^" << v_ << "*" << u_ << " + O(" << p_ << "^" << (v_ + n_) << ")";
    return os.str();
}

int legendre(long long u, int p) {
    long long r = u % p;
    if (r < 0) r += p;
    if (r == 0) throw DomainError("legendre: argument divisible by p");
    std::uint64_t e = (p - 1) / 2, base = r, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

}  // namespace metaplus
