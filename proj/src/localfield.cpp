#include "metaplus/localfield.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace metaplus {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

int mod2(int v) { return ((v % 2) + 2) % 2; }

void require_digits(const PadicNumber& x, int need, const char* what) {
    if (x.precision() < need)
        throw InsufficientPrecision(std::string(what) + ": square class undetermined at precision " +
                                    std::to_string(x.precision()));
}

}  // namespace

int hilbert_symbol(const PadicNumber& a, const PadicNumber& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("hilbert_symbol: zero argument");
    int p = a.prime();
    if (b.prime() != p) throw DomainError("hilbert_symbol: mismatched primes");
    int need = p == 2 ? 5 : 3;
    require_digits(a, need, "hilbert_symbol");
    require_digits(b, need, "hilbert_symbol");
    int al = a.valuation(), be = b.valuation();
    if (p != 2) {
        long long u = static_cast<long long>(a.unit_mod(1));
        long long w = static_cast<long long>(b.unit_mod(1));
        int s = 1;
        if (mod2(al) && mod2(be) && ((p - 1) / 2) % 2) s = -s;
        if (mod2(be)) s *= legendre(u, p);
        if (mod2(al)) s *= legendre(w, p);
        return s;
    }
    std::uint64_t u = a.unit_mod(3), w = b.unit_mod(3);
    auto eps = [](std::uint64_t x) { return static_cast<int>(((x - 1) / 2) % 2); };
    auto omega = [](std::uint64_t x) { return static_cast<int>(((x * x - 1) / 8) % 2); };
    int e = eps(u) * eps(w) + mod2(al) * omega(w) + mod2(be) * omega(u);
    return e % 2 ? -1 : 1;
}

int square_class(const PadicNumber& a) {
    if (a.is_zero()) throw DomainError("square_class: zero");
    int p = a.prime();
    int par = mod2(a.valuation());
    if (p == 2) return par * 4 + static_cast<int>((a.unit_mod(3) - 1) / 2);
    return par * 2 + (legendre(static_cast<long long>(a.unit_mod(1)), p) == 1 ? 0 : 1);
}

bool is_square(const PadicNumber& a) { return square_class(a) == 0; }

cplx RootOfUnity::to_complex() const {
    if (num == 0) return {1.0, 0.0};
    return std::polar(1.0, kTwoPi * (static_cast<double>(num) / static_cast<double>(den)));
}

AdditiveCharacter::AdditiveCharacter(int p, int c, long long eta, int prec) : p_(p), c_(c), prec_(prec) {
    if (!is_prime(p)) throw DomainError("AdditiveCharacter: p must be prime");
    if (prec_ <= 0) prec_ = std::min(default_precision(p), max_precision(p));
    long long r = eta % p;
    if (r < 0) r += p;
    if (r == 0) throw DomainError("AdditiveCharacter: eta must be a unit");
    long long mod = static_cast<long long>(ipow(p, std::min(prec_, 18)));
    eta_ = ((eta % mod) + mod) % mod;
}

PadicNumber AdditiveCharacter::scale() const {
    return PadicNumber::from_parts(p_, c_, static_cast<std::uint64_t>(eta_), prec_);
}

PadicNumber AdditiveCharacter::delta() const { return PadicNumber::uniformizer_power(p_, c_, prec_); }

AdditiveCharacter AdditiveCharacter::twisted(const PadicNumber& b) const {
    PadicNumber s = scale() * b;
    AdditiveCharacter out = *this;
    out.c_ = s.valuation();
    std::uint64_t mod = ipow(p_, std::min(prec_, 18));
    out.eta_ = static_cast<long long>(s.unit() % mod);
    return out;
}

RootOfUnity AdditiveCharacter::value(const PadicNumber& x) const {
    if (x.is_zero()) return {};
    PadicNumber y = scale() * x;
    if (y.valuation() >= 0) return {};
    int d = -y.valuation();
    if (y.precision() < d) throw InsufficientPrecision("AdditiveCharacter::value: fractional part undetermined");
    std::uint64_t den = ipow(p_, d);
    return {y.unit() % den, den};
}

RootOfUnity AdditiveCharacter::value_scaled(int k, i128 n) const {
    int t = k + c_;
    if (t >= 0 || n == 0) return {};
    int d = -t;
    if (d > max_precision(p_)) throw DomainError("value_scaled: denominator too large");
    std::uint64_t den = ipow(p_, d);
    std::uint64_t nm = posmod(n, den);
    std::uint64_t em = posmod(eta_, den);
    return {mulmod(nm, em, den), den};
}

Mu8 weil_index(const PadicNumber& a, const AdditiveCharacter& psi) {
    if (a.is_zero()) throw DomainError("weil_index: zero argument");
    PadicNumber b = psi.scale() * a;
    int p = b.prime();
    if (p == 2) {
        std::uint64_t u = b.unit_mod(3);
        if (mod2(b.valuation()) == 0) return Mu8::zeta(u % 4 == 1 ? 1 : 7);
        return Mu8::zeta(static_cast<int>(u));
    }
    if (mod2(b.valuation()) == 0) return Mu8::one();
    long long u = static_cast<long long>(b.unit_mod(1));
    int leg = legendre(-u, p);
    int base = (p % 4 == 1) ? 0 : 6;
    return Mu8::zeta(base + (leg == 1 ? 0 : 4));
}

Mu8 weil_index_real(double a) {
    if (a == 0) throw DomainError("weil_index_real: zero argument");
    return Mu8::zeta(a > 0 ? 7 : 1);
}

int quadratic_integral_depth(const AdditiveCharacter& psi, const PadicNumber& b, int M) {
    int p = psi.prime();
    int e = p == 2 ? 1 : 0;
    int c = psi.index();
    int vb = b.valuation();
    int k1 = -c - vb - e + M;
    int num = -c - vb;
    int k2 = num >= 0 ? (num + 1) / 2 : -((-num) / 2);
    return std::max({k1, k2, -M + 1});
}

cplx quadratic_character_integral(const AdditiveCharacter& psi, const PadicNumber& b, int M, int K) {
    int p = psi.prime();
    if (M + K <= 0) throw DomainError("quadratic_character_integral: empty grid");
    if (std::pow(static_cast<double>(p), M + K) > 6.0e7)
        throw DomainError("quadratic_character_integral: grid too large");
    double cell = std::pow(static_cast<double>(p), -K);
    if (b.is_zero()) return cplx(std::pow(static_cast<double>(p), M), 0.0);
    PadicNumber bs = psi.scale() * b;
    int k = bs.valuation() - 2 * M;
    std::uint64_t count = ipow(p, M + K);
    if (k >= 0) return cplx(static_cast<double>(count) * cell, 0.0);
    int d = -k;
    if (bs.precision() < d) throw InsufficientPrecision("quadratic_character_integral: coefficient too coarse");
    std::uint64_t den = ipow(p, d);
    std::uint64_t ub = bs.unit() % den;
    // Accumulate by residue to avoid summing count complex exponentials.
    std::vector<std::uint64_t> hist;
    bool use_hist = den <= (1u << 20);
    if (use_hist) hist.assign(den, 0);
    cplx acc{0, 0};
    for (std::uint64_t t = 0; t < count; ++t) {
        std::uint64_t tt = t % den;
        std::uint64_t r = mulmod(ub, mulmod(tt, tt, den), den);
        if (use_hist)
            ++hist[r];
        else
            acc += std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
    }
    if (use_hist)
        for (std::uint64_t r = 0; r < den; ++r)
            if (hist[r])
                acc += static_cast<double>(hist[r]) *
                       std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
    return acc * cell;
}

OracleResult weil_index_oracle(const PadicNumber& a, const AdditiveCharacter& psi, int depth) {
    if (a.is_zero()) throw DomainError("weil_index_oracle: zero argument");
    int p = psi.prime();
    int e = p == 2 ? 1 : 0;
    int c = psi.index();
    // phi = 1 on p^k O.  k = 0 is the plain 1_O; a larger k is used when the
    // integral of psi(a y^2) over O vanishes and the identity would read 0 = 0.
    int need = -c - a.valuation();
    int k = need > 0 ? (need + 1) / 2 : 0;
    PadicNumber four = psi.make(4);
    PadicNumber b = -(four * a).inverse();
    auto evaluate = [&](int extra) {
        int k1 = quadratic_integral_depth(psi, a, -k) + extra;
        int k2 = quadratic_integral_depth(psi, b, c + k) + extra;
        cplx lhs = quadratic_character_integral(psi, a, -k, k1);
        cplx rint = quadratic_character_integral(psi, b, c + k, k2);
        double factor = std::pow(static_cast<double>(p), (e + a.valuation()) / 2.0) *
                        std::pow(static_cast<double>(p), -c / 2.0) * std::pow(static_cast<double>(p), -k);
        return lhs / (factor * rint);
    };
    cplx v0 = evaluate(depth);
    cplx v1 = evaluate(depth + 1);
    OracleResult out;
    out.raw = v0;
    out.stabilisation_gap = std::abs(v0 - v1);
    if (out.stabilisation_gap > 1e-9) throw DomainError("weil_index_oracle: sum did not stabilise");
    out.value = snap_mu8(v0, 1e-6);
    return out;
}

std::vector<PadicNumber> square_class_representatives(int p, int vmin, int vmax) {
    std::vector<long long> units;
    if (p == 2)
        units = {1, 3, 5, 7};
    else
        units = {1, first_nonresidue(p)};
    std::vector<PadicNumber> out;
    for (int v = vmin; v <= vmax; ++v)
        for (long long u : units) out.push_back(PadicNumber::from_parts(p, v, u));
    return out;
}

long long first_nonresidue(int p) {
    for (long long u = 2; u < p; ++u)
        if (legendre(u, p) == -1) return u;
    return 3;
}

}  // namespace metaplus
