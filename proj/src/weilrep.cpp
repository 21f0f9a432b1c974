#include "metaplus/weilrep.hpp"

#include <cmath>
#include <set>

namespace metaplus {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::size_t model_size(int p, int M, int N) {
    if (M + N < 0) throw DomainError("SchwartzFunction: empty model");
    double n = std::pow(static_cast<double>(p), M + N);
    if (n > static_cast<double>(SchwartzFunction::kMaxPoints))
        throw DomainError("SchwartzFunction: model overflow (" + std::to_string(p) + "^" + std::to_string(M + N) + ")");
    return static_cast<std::size_t>(ipow(p, M + N));
}

int rational_valuation(const Rational& r, int p) {
    if (r == 0) return PadicNumber::kInf;
    BigInt n = numerator(r), d = denominator(r);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

double pw(int p, double e) { return std::pow(static_cast<double>(p), e); }

}  // namespace

SchwartzFunction::SchwartzFunction(int p, int M, int N)
    : p_(p), M_(M), N_(N), values_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(model_size(p, M, N)))) {}

SchwartzFunction SchwartzFunction::indicator(int p, int k) {
    SchwartzFunction f(p, -k, k);
    f.values_.setConstant(1.0);
    return f;
}

SchwartzFunction SchwartzFunction::coset_indicator(int p, const Rational& r, int k) {
    int vr = rational_valuation(r, p);
    int M = std::max(-k, vr == PadicNumber::kInf ? -k : -vr);
    SchwartzFunction f(p, M, k);
    Rational base = 1;
    for (int i = 0; i < M; ++i) base /= p;
    for (int i = 0; i > M; --i) base *= p;
    for (std::size_t t = 0; t < f.size(); ++t) {
        Rational x = base * static_cast<long long>(t) - r;
        if (x == 0 || rational_valuation(x, p) >= k) f.values_[static_cast<Eigen::Index>(t)] = 1.0;
    }
    return f;
}

cplx SchwartzFunction::operator()(const PadicNumber& x) const {
    if (x.is_zero()) return values_[0];
    if (x.valuation() < -M_) return 0.0;
    PadicNumber y = x * PadicNumber::uniformizer_power(p_, M_, x.precision());
    std::uint64_t t = y.residue_mod(M_ + N_);
    return values_[static_cast<Eigen::Index>(t)];
}

SchwartzFunction SchwartzFunction::resampled(int M2, int N2) const {
    if (M2 < M_ || N2 < N_) throw DomainError("SchwartzFunction::resampled: model must grow");
    SchwartzFunction out(p_, M2, N2);
    std::uint64_t step = ipow(p_, M2 - M_);
    std::uint64_t mod = ipow(p_, M_ + N_);
    for (std::size_t t = 0; t < out.size(); t += step)
        out.values_[static_cast<Eigen::Index>(t)] = values_[static_cast<Eigen::Index>((t / step) % mod)];
    return out;
}

SchwartzFunction SchwartzFunction::compressed(double tol) const {
    if (max_abs() <= tol) return SchwartzFunction(p_, 0, 0);
    SchwartzFunction cur = *this;
    for (;;) {
        bool changed = false;
        if (cur.M_ + cur.N_ >= 1) {
            bool outer_zero = true;
            for (std::size_t t = 0; t < cur.size() && outer_zero; ++t)
                if (t % cur.p_ != 0 && std::abs(cur.values_[static_cast<Eigen::Index>(t)]) > tol) outer_zero = false;
            if (outer_zero) {
                SchwartzFunction next(cur.p_, cur.M_ - 1, cur.N_);
                for (std::size_t t = 0; t < next.size(); ++t)
                    next.values_[static_cast<Eigen::Index>(t)] = cur.values_[static_cast<Eigen::Index>(t * cur.p_)];
                cur = std::move(next);
                changed = true;
            }
        }
        if (cur.M_ + cur.N_ >= 1) {
            std::size_t block = cur.size() / cur.p_;
            bool periodic = true;
            for (std::size_t t = block; t < cur.size() && periodic; ++t)
                if (std::abs(cur.values_[static_cast<Eigen::Index>(t)] -
                             cur.values_[static_cast<Eigen::Index>(t % block)]) > tol)
                    periodic = false;
            if (periodic) {
                SchwartzFunction next(cur.p_, cur.M_, cur.N_ - 1);
                next.values_ = cur.values_.head(static_cast<Eigen::Index>(block));
                cur = std::move(next);
                changed = true;
            }
        }
        if (!changed) return cur;
    }
}

SchwartzFunction SchwartzFunction::operator+(const SchwartzFunction& o) const {
    int M = std::max(M_, o.M_), N = std::max(N_, o.N_);
    SchwartzFunction a = resampled(M, N), b = o.resampled(M, N);
    a.values_ += b.values_;
    return a;
}

SchwartzFunction SchwartzFunction::operator-(const SchwartzFunction& o) const { return *this + o * cplx(-1.0); }

SchwartzFunction SchwartzFunction::operator*(cplx z) const {
    SchwartzFunction out = *this;
    out.values_ *= z;
    return out;
}

SchwartzFunction SchwartzFunction::dilated(const PadicNumber& t) const {
    if (t.is_zero()) throw DomainError("dilated: zero factor");
    int v = t.valuation();
    SchwartzFunction out(p_, M_ + v, N_ - v);
    int digits = M_ + N_;
    std::uint64_t mod = ipow(p_, digits);
    std::uint64_t u = digits == 0 ? 0 : t.unit_mod(digits);
    for (std::size_t s = 0; s < out.size(); ++s)
        out.values_[static_cast<Eigen::Index>(s)] = values_[static_cast<Eigen::Index>(digits == 0 ? 0 : mulmod(u, s, mod))];
    return out;
}

SchwartzFunction SchwartzFunction::quadratic_twist(const PadicNumber& b, const AdditiveCharacter& psi) const {
    if (b.is_zero()) return *this;
    int e = p_ == 2 ? 1 : 0;
    int s = b.valuation() + psi.index();
    int N2 = std::max({N_, M_ - s - e, (-s + 1) / 2});
    SchwartzFunction out = resampled(M_, N2);
    // psi(b x^2) with x = p^-M t is psi(p^(vb - 2M) * ub * t^2).
    int k = b.valuation() - 2 * M_;
    int den_digits = -(k + psi.index());
    if (den_digits > 0 && b.precision() < den_digits)
        throw InsufficientPrecision("quadratic_twist: coefficient known to too few digits");
    i128 ub = static_cast<i128>(b.unit());
    for (std::size_t t = 0; t < out.size(); ++t) {
        auto& val = out.values_[static_cast<Eigen::Index>(t)];
        if (val == cplx(0.0)) continue;
        i128 tt = static_cast<i128>(t);
        if (den_digits > 0) {
            std::uint64_t den = ipow(p_, den_digits);
            tt = static_cast<i128>(posmod(tt * tt, den));
            val *= psi.value_scaled(k, static_cast<i128>(posmod(ub, den)) * tt).to_complex();
        }
    }
    return out;
}

SchwartzFunction SchwartzFunction::fourier(const AdditiveCharacter& psi) const {
    int c = psi.index();
    std::size_t n = size();
    if (n > kMaxFourierPoints) throw DomainError("fourier: model overflow");
    SchwartzFunction out(p_, N_ + c, M_ - c);
    // psi(x y) for x = p^-(N+c) t', y = p^-M t is e(eta t t' / p^(M+N)).
    std::uint64_t mod = n;
    std::uint64_t eta = mod == 1 ? 0 : posmod(psi.eta(), mod);
    std::vector<cplx> roots(n);
    for (std::size_t r = 0; r < n; ++r) roots[r] = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(n));
    double scale = pw(p_, -c / 2.0) * pw(p_, -N_);
    for (std::size_t tp = 0; tp < n; ++tp) {
        cplx acc = 0.0;
        std::uint64_t step = mod == 1 ? 0 : mulmod(eta, tp, mod);
        std::uint64_t r = 0;
        for (std::size_t t = 0; t < n; ++t) {
            acc += values_[static_cast<Eigen::Index>(t)] * roots[r];
            r += step;
            if (r >= mod) r -= mod;
        }
        out.values_[static_cast<Eigen::Index>(tp)] = acc * scale;
    }
    return out;
}

double SchwartzFunction::max_abs() const { return values_.size() ? values_.cwiseAbs().maxCoeff() : 0.0; }

cplx inner_product(const SchwartzFunction& f, const SchwartzFunction& g) {
    int M = std::max(f.support_exponent(), g.support_exponent());
    int N = std::max(f.period_exponent(), g.period_exponent());
    SchwartzFunction a = f.resampled(M, N), b = g.resampled(M, N);
    return b.values().dot(a.values()) * pw(f.prime(), -N);
}

bool approx_equal(const SchwartzFunction& f, const SchwartzFunction& g, double tol) {
    return (f - g).max_abs() <= tol;
}

cplx proportionality(const SchwartzFunction& f, const SchwartzFunction& g, double tol) {
    cplx gg = inner_product(g, g);
    if (std::abs(gg) < tol) throw DomainError("proportionality: reference function is zero");
    cplx lambda = inner_product(f, g) / gg;
    if (!approx_equal(f, g * lambda, tol)) throw DomainError("proportionality: functions are not proportional");
    return lambda;
}

Mp2Element WeilGenerator::element() const {
    switch (kind) {
        case USharp: return u_sharp(x);
        case Torus: return torus(x);
        case Weyl: return weyl(x);
    }
    return {};
}

WeilWord bruhat_word(const Mp2Element& g, const AdditiveCharacter& psi) {
    const Mat2& m = g.g;
    WeilWord w;
    if (m.c.is_zero()) {
        w.letters = {{WeilGenerator::Torus, m.a}, {WeilGenerator::USharp, m.b / m.a}};
    } else if (m.d.is_zero() || m.c.valuation() <= m.d.valuation() + psi.index()) {
        w.letters = {{WeilGenerator::USharp, m.a / m.c}, {WeilGenerator::Weyl, m.c}, {WeilGenerator::USharp, m.d / m.c}};
    } else {
        // u_flat(x) = w_delta u#(-x / delta^2) w_{-delta}
        PadicNumber delta = psi.delta();
        PadicNumber x = m.c / m.d;
        w.letters = {{WeilGenerator::USharp, m.b / m.d},
                     {WeilGenerator::Torus, m.d.inverse()},
                     {WeilGenerator::Weyl, delta},
                     {WeilGenerator::USharp, -(x / (delta * delta))},
                     {WeilGenerator::Weyl, -delta}};
    }
    Mp2Element prod = w.letters.front().element();
    for (std::size_t i = 1; i < w.letters.size(); ++i) prod = prod * w.letters[i].element();
    if (!prod.g.equals(m)) throw InsufficientPrecision("bruhat_word: word does not reproduce the matrix");
    w.sign = g.sign * prod.sign;
    return w;
}

SchwartzFunction weil_generator(const WeilGenerator& gen, const SchwartzFunction& phi, const AdditiveCharacter& psi) {
    int p = psi.prime();
    PadicNumber one = psi.make(1);
    switch (gen.kind) {
        case WeilGenerator::USharp:
            return phi.quadratic_twist(gen.x, psi);
        case WeilGenerator::Torus: {
            cplx factor = (weil_index(one, psi) / weil_index(gen.x, psi)).to_complex() * pw(p, -gen.x.valuation() / 2.0);
            return phi.dilated(gen.x) * factor;
        }
        case WeilGenerator::Weyl: {
            // conj(alpha(a)) |2/a|^(1/2) phi^(-2x/a)
            int e = p == 2 ? 1 : 0;
            cplx factor = weil_index(gen.x, psi).conj().to_complex() * pw(p, -(e - gen.x.valuation()) / 2.0);
            PadicNumber t = -(psi.make(2) / gen.x);
            return phi.fourier(psi).dilated(t) * factor;
        }
    }
    return phi;
}

SchwartzFunction weil_action(const Mp2Element& g, const SchwartzFunction& phi, const AdditiveCharacter& psi) {
    WeilWord w = bruhat_word(g, psi);
    SchwartzFunction cur = phi;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = weil_generator(*it, cur, psi).compressed();
    return w.sign < 0 ? cur * cplx(-1.0) : cur;
}

SchwartzFunction phi0(int p) { return SchwartzFunction::indicator(p, 0); }

SchwartzFunction phi0_prime(int p) { return SchwartzFunction::indicator(p, p == 2 ? -1 : 0); }

SchwartzFunction phi_lambda(int p, int lambda) {
    if (p != 2) {
        if (lambda != 0) throw DomainError("phi_lambda: O/2O is trivial for odd p");
        return phi0(p);
    }
    if (lambda != 0 && lambda != 1) throw DomainError("phi_lambda: lambda must be 0 or 1");
    return SchwartzFunction::coset_indicator(2, Rational(lambda, 2), 0);
}

IdempotentKernels::IdempotentKernels(const AdditiveCharacter& psi, const Level& K) : psi_(psi), K_(K) {
    int p = psi.prime();
    if (p == 2) {
        if (!(K == Level::maximal())) throw DomainError("IdempotentKernels: K must be maximal at p = 2");
        e_ = 1;
        Gamma_ = Level::gamma0_4(2);
    } else {
        Gamma_ = K;
    }
    // Gamma-cosets of K from integer matrices in coordinates where K is SL2(Z_p).
    PadicNumber delta = psi.delta();
    std::vector<Mp2Element> reps;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    if (a * d - b * c != 1) continue;
                    Mat2 m{psi.make(a), psi.make(b) / delta, psi.make(c) * delta, psi.make(d)};
                    Mp2Element k{m, 1};
                    if (!in_level(k.g, K_, psi)) continue;
                    bool fresh = true;
                    for (const auto& r : reps)
                        if (in_level((r.inverse() * k).g, Gamma_, psi)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) reps.push_back(k);
                }
    k_cosets_ = reps;
    Mp2Element w = w2delta(), wi = w.inverse();
    for (const auto& r : reps) E_cosets_.push_back(p == 2 ? w * r * wi : r);
}

Mp2Element IdempotentKernels::w2delta() const { return weyl(psi_.make(2) * psi_.delta()); }

bool IdempotentKernels::in_K(const Mp2Element& g) const { return in_level(g.g, K_, psi_); }

bool IdempotentKernels::in_E_support(const Mp2Element& g) const {
    if (psi_.prime() != 2) return in_K(g);
    return in_level(g.g, Level{-2, 2}, psi_);
}

cplx IdempotentKernels::eK(const Mp2Element& g) const {
    if (!in_K(g)) return 0.0;
    SchwartzFunction f = phi0(psi_.prime());
    return pw(psi_.prime(), e_) / volume() * inner_product(f, weil_action(g, f, psi_));
}

cplx IdempotentKernels::EK(const Mp2Element& g) const {
    if (!in_E_support(g)) return 0.0;
    SchwartzFunction f = phi0(psi_.prime());
    return pw(psi_.prime(), e_) / volume() * inner_product(f, weil_action(g, f, psi_));
}

cplx IdempotentKernels::EK_by_conjugation(const Mp2Element& g) const {
    if (psi_.prime() != 2) return eK(g);
    Mp2Element w = w2delta();
    return eK(w.inverse() * g * w);
}

cplx IdempotentKernels::eK_squared(const Mp2Element& g) const {
    cplx acc = 0.0;
    for (const auto& k : k_cosets_) acc += eK(k) * eK(k.inverse() * g);
    return acc;
}

cplx IdempotentKernels::EK_squared(const Mp2Element& g) const {
    cplx acc = 0.0;
    for (const auto& k : E_cosets_) acc += EK(k) * EK(k.inverse() * g);
    return acc;
}

}  // namespace metaplus
