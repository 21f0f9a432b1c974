#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metaplus/sampling.hpp"
#include "metaplus/weilrep.hpp"

using namespace metaplus;

namespace {

SchwartzFunction random_function(int p, int M, int N, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    SchwartzFunction f(p, M, N);
    for (Eigen::Index i = 0; i < f.values().size(); ++i) f.values()[i] = cplx(g(rng), g(rng));
    return f;
}

// k1 m(p^j) k2 with |j| <= 1, so that images stay in small models.
Mp2Element cartan_sample(Sampler& s, const AdditiveCharacter& psi) {
    int p = psi.prime();
    Mp2Element k1 = s.level_element(Level::maximal(), psi.index()).lift(p);
    Mp2Element k2 = s.level_element(Level::maximal(), psi.index()).lift(p);
    return k1 * torus(psi.pi_power(s.uniform(-1, 1))) * k2;
}

SchwartzFunction parity(const SchwartzFunction& f, const AdditiveCharacter& psi) { return f.dilated(psi.make(-1)); }

}  // namespace

TEST_CASE("fourier transform") {
    AdditiveCharacter psi5(5);
    CHECK(approx_equal(phi0(5).fourier(psi5), phi0(5)));
    // 1_p -> q^-1 1_{p^-1}
    SchwartzFunction ft = SchwartzFunction::indicator(5, 1).fourier(psi5);
    CHECK(approx_equal(ft, SchwartzFunction::indicator(5, -1) * cplx(0.2)));
    std::mt19937_64 rng(3);
    for (int p : {2, 3, 5}) {
        for (int c : {-1, 0, 2}) {
            AdditiveCharacter psi(p, c, p == 2 ? 5 : 2);
            SchwartzFunction f = random_function(p, 1, 1, rng);
            CHECK(approx_equal(f.fourier(psi).fourier(psi), parity(f, psi), 1e-9));
            CHECK(std::abs(inner_product(f.fourier(psi), f.fourier(psi)) - inner_product(f, f)) < 1e-9);
        }
    }
}

TEST_CASE("inner products") {
    CHECK(std::abs(inner_product(phi0(3), phi0(3)) - 1.0) < 1e-15);
    CHECK(std::abs(inner_product(phi_lambda(2, 0), phi_lambda(2, 1))) < 1e-15);
    CHECK(std::abs(inner_product(phi_lambda(2, 1), phi_lambda(2, 1)) - 1.0) < 1e-15);
}

TEST_CASE("generator formulas on phi_0") {
    for (int p : {2, 3, 5}) {
        for (int c : {0, 1}) {
            AdditiveCharacter psi(p, c);
            PadicNumber b = psi.make(Rational(7, 3)) / psi.delta();
            if (p == 3) b = psi.make(Rational(7, 2)) / psi.delta();
            CHECK(approx_equal(weil_action(u_sharp(b), phi0(p), psi), phi0(p)));
            if (p != 2) CHECK(approx_equal(weil_action(weyl(psi.delta()), phi0(p), psi), phi0(p)));
        }
    }
    AdditiveCharacter psi2(2);
    PadicNumber two = psi2.make(2);
    cplx expected = (weil_index(two, psi2) / weil_index(psi2.make(1), psi2)).to_complex() * std::sqrt(2.0);
    CHECK(approx_equal(weil_action(torus(two.inverse()), phi0_prime(2), psi2), phi0(2) * expected));
    // w_{2 delta} phi_0 = conj(alpha(2 delta)) phi_0
    for (int c : {0, 1, -1}) {
        AdditiveCharacter psi(2, c, 3);
        PadicNumber a = psi.make(2) * psi.delta();
        cplx z = weil_index(a, psi).conj().to_complex();
        CHECK(approx_equal(weil_action(weyl(a), phi0(2), psi), phi0(2) * z));
    }
}

TEST_CASE("weil representation is a unitary representation") {
    std::mt19937_64 rng(17);
    for (int p : {2, 3, 5}) {
        AdditiveCharacter psi(p, p == 3 ? 1 : 0);
        Sampler s(p, 400 + p);
        for (int i = 0; i < 150; ++i) {
            Mp2Element g1 = cartan_sample(s, psi), g2 = cartan_sample(s, psi);
            SchwartzFunction f = random_function(p, 1, 1, rng), h = random_function(p, 1, 1, rng);
            SchwartzFunction lhs = weil_action(g1, weil_action(g2, f, psi), psi);
            SchwartzFunction rhs = weil_action(g1 * g2, f, psi);
            CHECK(approx_equal(lhs, rhs, 1e-8));
            cplx ip = inner_product(weil_action(g1, f, psi), weil_action(g1, h, psi));
            CHECK(std::abs(ip - inner_product(f, h)) < 1e-8);
        }
        CHECK(approx_equal(weil_action(central(p, -1), phi0(p), psi), phi0(p) * cplx(-1.0)));
    }
}

TEST_CASE("phi_0 is an eigenvector with character epsilon^-1") {
    for (int p : {2, 3, 5}) {
        for (int c : {-1, 0, 1}) {
            AdditiveCharacter psi(p, c, p == 2 ? 7 : 2);
            Sampler s(p, 900 + 10 * p + c);
            Level l = Level::gamma0_4(p);
            for (int i = 0; i < 200; ++i) {
                Mp2Element g = s.level_element(l, c).lift(p);
                cplx expected = epsilon(g, psi).inverse().to_complex();
                CHECK(approx_equal(weil_action(g, phi0(p), psi), phi0(p) * expected));
            }
        }
    }
}

TEST_CASE("phi_0' is an eigenvector with character epsilon_check^-1") {
    for (int c : {0, 1}) {
        AdditiveCharacter psi(2, c, 5);
        Sampler s(2, 77 + c);
        for (int i = 0; i < 200; ++i) {
            Mp2Element g = s.level_element(Level{2, 0}, c).lift(2);
            cplx expected = epsilon_check(g, psi).inverse().to_complex();
            CHECK(approx_equal(weil_action(g, phi0_prime(2), psi), phi0_prime(2) * expected));
        }
    }
}

TEST_CASE("the space spanned by phi_lambda") {
    for (int c : {0, 1}) {
        AdditiveCharacter psi(2, c, 3);
        Sampler s(2, 55 + c);
        for (int i = 0; i < 40; ++i) {
            PadicNumber x = psi.make(s.integral(0, 0.1)) / psi.delta();
            for (int lam : {0, 1}) {
                PadicNumber l2 = psi.make(Rational(lam * lam, 4));
                cplx z = psi.value(x * l2).to_complex();
                CHECK(approx_equal(weil_action(u_sharp(x), phi_lambda(2, lam), psi), phi_lambda(2, lam) * z));
            }
        }
        cplx z = weil_index(psi.delta(), psi).conj().to_complex() / std::sqrt(2.0);
        CHECK(approx_equal(weil_action(weyl(psi.delta()), phi0(2), psi), (phi_lambda(2, 0) + phi_lambda(2, 1)) * z));
        for (int i = 0; i < 100; ++i) {
            Mp2Element k = s.level_element(Level::maximal(), c).lift(2);
            for (int lam : {0, 1}) {
                SchwartzFunction img = weil_action(k, phi_lambda(2, lam), psi);
                SchwartzFunction proj = phi_lambda(2, 0) * inner_product(img, phi_lambda(2, 0)) +
                                        phi_lambda(2, 1) * inner_product(img, phi_lambda(2, 1));
                CHECK(approx_equal(img, proj));
            }
        }
    }
}

TEST_CASE("volume of K relative to Gamma") {
    CHECK(IdempotentKernels(AdditiveCharacter(2)).volume() == 6);
    CHECK(IdempotentKernels(AdditiveCharacter(2, 1)).volume() == 6);
    CHECK(IdempotentKernels(AdditiveCharacter(3)).volume() == 1);
    CHECK(IdempotentKernels(AdditiveCharacter(5), Level::iwahori()).volume() == 1);
}

TEST_CASE("explicit values of e^K and E^K at p = 2") {
    for (int c : {0, 1, -1}) {
        AdditiveCharacter psi(2, c, 3);
        IdempotentKernels ker(psi);
        double vol = ker.volume();
        for (long long z : {1, 3, 2, 6, 4, 12, 8, 5}) {
            PadicNumber zz = psi.make(z);
            // |2|^-1 int_O psi(delta^-1 z y^2 / 4) dy
            PadicNumber arg = zz / (psi.delta() * psi.make(4));
            cplx integral = quadratic_character_integral(psi, arg, 0, quadratic_integral_depth(psi, arg, 0));
            cplx expected = 2.0 * integral / vol;
            CHECK(std::abs(ker.eK(u_flat(psi.delta() * zz)) - expected) < 1e-9);
            // E^K(u#(4^-1 delta^-1 z)) is the conjugate
            Mp2Element u = u_sharp(zz / (psi.make(4) * psi.delta()));
            CHECK(std::abs(ker.EK(u) - std::conj(expected)) < 1e-9);
        }
        for (long long cu : {1, 3, 5, 7}) {
            PadicNumber cc = psi.make(cu);
            cplx expected = weil_index(psi.delta() * cc, psi).to_complex() * std::sqrt(2.0) / vol;
            CHECK(std::abs(ker.EK(weyl(psi.make(4) * psi.delta() * cc)) - expected) < 1e-9);
        }
    }
}

TEST_CASE("kernels are bi-epsilon-equivariant and idempotent") {
    for (int c : {0, 1}) {
        AdditiveCharacter psi(2, c, 5, 40);
        IdempotentKernels ker(psi);
        Sampler s(2, 3 + c);
        Level l = Level::gamma0_4(2);
        for (int i = 0; i < 60; ++i) {
            Mp2Element k = s.level_element(Level::maximal(), c).lift(2, 40);
            Mp2Element g1 = s.level_element(l, c).lift(2, 40), g2 = s.level_element(l, c).lift(2, 40);
            cplx eps = (epsilon(g1, psi) * epsilon(g2, psi)).to_complex();
            CHECK(std::abs(ker.eK(g1 * k * g2) - eps * ker.eK(k)) < 1e-9);
            CHECK(std::abs(ker.eK_squared(k) - ker.eK(k)) < 1e-12);
            Mp2Element w = ker.w2delta();
            Mp2Element kk = w * k * w.inverse();
            CHECK(std::abs(ker.EK(kk) - ker.EK_by_conjugation(kk)) < 1e-9);
            CHECK(std::abs(ker.EK(g1 * kk * g2) - eps * ker.EK(kk)) < 1e-9);
            CHECK(std::abs(ker.EK_squared(kk) - ker.EK(kk)) < 1e-12);
        }
    }
    for (int p : {3, 5}) {
        AdditiveCharacter psi(p);
        IdempotentKernels ker(psi);
        Sampler s(p, 8);
        for (int i = 0; i < 30; ++i) {
            Mp2Element k = s.level_element(Level::maximal(), 0).lift(p);
            CHECK(std::abs(ker.eK(k) - epsilon(k, psi).to_complex()) < 1e-9);
            CHECK(std::abs(ker.eK_squared(k) - ker.eK(k)) < 1e-12);
        }
    }
}
