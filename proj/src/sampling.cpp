#include "metaplus/sampling.hpp"

namespace metaplus {

namespace {
Rational ppow(int p, int k) {
    Rational r(1);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= p;
    return k < 0 ? 1 / r : r;
}
}  // namespace

RationalMat2 RationalMat2::operator*(const RationalMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, sign * o.sign};
}

Mp2Element RationalMat2::lift(int p, int prec) const {
    Mat2 g{PadicNumber::from_rational(p, a, prec), PadicNumber::from_rational(p, b, prec),
           PadicNumber::from_rational(p, c, prec), PadicNumber::from_rational(p, d, prec)};
    return {g, sign};
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::unit() {
    auto draw = [&] {
        long long u;
        do {
            u = std::uniform_int_distribution<long long>(1, 2000)(rng_);
        } while (u % p_ == 0);
        return u;
    };
    Rational r(draw(), draw());
    return uniform(0, 1) ? r : -r;
}

Rational Sampler::with_valuation(int v) { return unit() * ppow(p_, v); }

Rational Sampler::integral(int vmin, double zero_prob) {
    if (std::uniform_real_distribution<double>(0, 1)(rng_) < zero_prob) return Rational(0);
    return with_valuation(vmin + uniform(0, 3));
}

int Sampler::sign() { return uniform(0, 1) ? 1 : -1; }

RationalMat2 Sampler::sl2(int vr) {
    RationalMat2 m;
    m.sign = sign();
    int kind = uniform(0, 9);
    if (kind == 0) {
        // a = 0
        m.c = with_valuation(uniform(-vr, vr));
        m.a = 0;
        m.b = -1 / m.c;
        m.d = uniform(0, 2) ? with_valuation(uniform(-vr, vr)) : Rational(0);
        return m;
    }
    m.a = with_valuation(uniform(-vr, vr));
    m.b = uniform(0, 9) ? with_valuation(uniform(-vr, vr)) : Rational(0);
    m.c = kind == 1 ? Rational(0) : with_valuation(uniform(-vr, vr));
    m.d = (1 + m.b * m.c) / m.a;
    return m;
}

RationalMat2 Sampler::level_element(const Level& level, int c) {
    RationalMat2 m;
    m.sign = sign();
    m.a = unit();
    m.b = integral(level.beta - c, 0.15);
    m.c = integral(level.gamma + c, 0.15);
    m.d = (1 + m.b * m.c) / m.a;
    if (level.beta == 0 && level.gamma == 0 && uniform(0, 1)) m = m * rational_weyl(p_, c);
    return m;
}

RationalMat2 rational_weyl(int p, int k) {
    RationalMat2 w;
    w.a = 0;
    w.b = -ppow(p, -k);
    w.c = ppow(p, k);
    w.d = 0;
    return w;
}

}  // namespace metaplus
