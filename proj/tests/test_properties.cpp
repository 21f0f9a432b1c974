#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metaplus/localfield.hpp"
#include "metaplus/pseries.hpp"
#include "metaplus/sampling.hpp"
#include "metaplus/weilrep.hpp"

using namespace metaplus;

namespace {

Mp2Element gamma_sample(Sampler& s, const HeckeAlgebra& alg) {
    int p = alg.prime();
    return s.level_element(alg.level(), alg.psi().index()).lift(p, max_precision(p));
}

Mp2Element k_sample(Sampler& s, int p, int c) {
    return s.level_element(Level::maximal(), c).lift(p, max_precision(p));
}

PadicNumber random_nonzero(Sampler& s, int vr) {
    int p = s.prime();
    return PadicNumber::from_rational(p, s.with_valuation(s.uniform(-vr, vr)), default_precision(p));
}

}  // namespace

TEST_CASE("hilbert symbol is bimultiplicative on random triples") {
    for (int p : {2, 3, 5, 7}) {
        Sampler s(p, 40 + p);
        for (int i = 0; i < 500; ++i) {
            PadicNumber a1 = random_nonzero(s, 3), a2 = random_nonzero(s, 3), b = random_nonzero(s, 3);
            CHECK(hilbert_symbol(a1 * a2, b) == hilbert_symbol(a1, b) * hilbert_symbol(a2, b));
        }
    }
}

TEST_CASE("weil index depends only on the square class") {
    for (int p : {2, 3, 5, 7}) {
        for (int c : {-1, 0, 1}) {
            AdditiveCharacter psi(p, c, first_nonresidue(p));
            Sampler s(p, 60 + p + c);
            for (int i = 0; i < 200; ++i) {
                PadicNumber a = random_nonzero(s, 3);
                PadicNumber t = PadicNumber::from_rational(p, s.unit(), default_precision(p));
                CHECK(weil_index(a * t * t, psi) == weil_index(a, psi));
            }
        }
    }
}

TEST_CASE("weil representation on 1000 random pairs, cocycle sign included") {
    for (int p : {2, 3, 5}) {
        AdditiveCharacter psi(p);
        Sampler s(p, 700 + p);
        std::mt19937_64 rng(p);
        std::normal_distribution<double> g;
        SchwartzFunction f(p, 1, 1);
        for (Eigen::Index i = 0; i < f.values().size(); ++i) f.values()[i] = cplx(g(rng), g(rng));
        for (int i = 0; i < 1000; ++i) {
            Mp2Element g1 = k_sample(s, p, 0) * torus(psi.pi_power(s.uniform(-1, 1))) * k_sample(s, p, 0);
            Mp2Element g2 = k_sample(s, p, 0);
            CHECK(approx_equal(weil_action(g1, weil_action(g2, f, psi), psi), weil_action(g1 * g2, f, psi), 1e-8));
        }
    }
}

TEST_CASE("double coset labels are invariant under 1000 random Gamma translates") {
    for (int p : {2, 3, 5}) {
        HeckeAlgebra alg(p, p == 2 ? Level::gamma0_4(2) : Level::iwahori(), 0, p == 2 ? 3 : 1);
        Sampler s(p, 800 + p);
        std::vector<DoubleCosetLabel> labels = alg.labels(2);
        for (int i = 0; i < 1000; ++i) {
            const DoubleCosetLabel& l = labels[static_cast<std::size_t>(i) % labels.size()];
            Mp2Element g = gamma_sample(s, alg) * alg.representative(l) * gamma_sample(s, alg);
            CHECK(alg.label_of(g) == l);
        }
    }
}

TEST_CASE("act and act_kernel produce Gamma-fixed vectors") {
    for (int p : {2, 3, 5}) {
        HeckeAlgebra alg(p, p == 2 ? Level::gamma0_4(2) : Level::iwahori(), 0, p == 2 ? 3 : 1);
        StandardOps ops = standard_ops(alg);
        PrincipalSeries ps(alg, q_power(p, cplx(0.15, 0.35)));
        Sampler s(p, 900 + p);
        for (int trial = 0; trial < 4; ++trial) {
            HeckeElement X = ops.T(1) * ExactScalar(p, Rational(s.uniform(-3, 3))) +
                             ops.T(2) * ExactScalar(p, Rational(s.uniform(-3, 3)));
            if (alg.has_weyl_labels()) X = X + ops.U(1) * ExactScalar(p, Rational(s.uniform(1, 3)));
            Eigen::VectorXcd table = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ps.dimension()));
            for (std::size_t i = 0; i < ps.dimension(); ++i)
                if (ps.supports(i)) table[static_cast<Eigen::Index>(i)] = cplx(s.uniform(-5, 5), s.uniform(-5, 5));
            PrincipalSeriesVector f(ps, table);
            PrincipalSeriesVector g = act(X, f);
            for (int i = 0; i < 10; ++i) {
                // (rho(X) f)(h) computed from the definition at a point off the cell representatives
                Mp2Element h = k_sample(s, p, 0) * gamma_sample(s, alg);
                cplx direct = 0;
                for (const auto& [label, coef] : X.coefficients())
                    for (const Mp2Element& gj : alg.coset_reps(label)) direct += X.evaluate(gj).to_complex() * f(h * gj);
                CHECK(std::abs(direct - g(h)) < 1e-9);
            }
        }
    }
    HeckeAlgebra alg(2, Level::gamma0_4(2), 0, 3);
    IdempotentKernels ker(alg.psi());
    PrincipalSeries ps(alg, q_power(2, cplx(0.15, 0.35)));
    Sampler s(2, 950);
    PrincipalSeriesVector f = PrincipalSeriesVector::cell(ps, 0, cplx(1, 2)) + PrincipalSeriesVector::cell(ps, 1, -3.0);
    for (Kernel which : {Kernel::eK, Kernel::EK}) {
        PrincipalSeriesVector g = act_kernel(ker, which, f);
        const std::vector<Mp2Element>& cosets = which == Kernel::eK ? ker.k_cosets() : ker.E_cosets();
        for (int i = 0; i < 10; ++i) {
            Mp2Element h = k_sample(s, 2, 0) * gamma_sample(s, alg);
            cplx direct = 0;
            for (const Mp2Element& k : cosets) direct += (which == Kernel::eK ? ker.eK(k) : ker.EK(k)) * f(h * k);
            CHECK(std::abs(direct - g(h)) < 1e-9);
        }
    }
}

TEST_CASE("Whittaker truncations agree beyond depth c_psi + 2") {
    for (int p : {3, 5}) {
        for (int c : {0, 1}) {
            HeckeAlgebra alg(p, Level::iwahori(), c);
            for (cplx s : {cplx(0.3), cplx(-0.2, 0.7)}) {
                PrincipalSeries ps(alg, q_power(p, s));
                for (const PrincipalSeriesVector& f : {f1(ps), f2(ps), f1(ps) + f2(ps) * cplx(0.5, -1)}) {
                    for (long long xi : {1LL, first_nonresidue(p)}) {
                        for (int d = c + 3; d <= c + 4; ++d) {
                            cplx a = whittaker_truncated(f, xi, d), b = whittaker_truncated(f, xi, d + 1);
                            CHECK(std::abs(a - b) <= 1e-12 * (1 + std::abs(a)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("epsilon and the real factor of automorphy are genuine") {
    for (int p : {2, 3, 5}) {
        AdditiveCharacter psi(p, 0, p == 2 ? 3 : 1);
        Sampler s(p, 990 + p);
        for (int i = 0; i < 200; ++i) {
            Mp2Element g = s.level_element(Level::gamma0_4(p), 0).lift(p);
            Mp2Element h = g * central(p, -1);
            CHECK(epsilon(h, psi) == epsilon(g, psi) * Mu8::sign(-1));
        }
    }
    RealMp2 g;
    g.a = 2;
    g.b = 1;
    g.c = 3;
    g.d = 2;
    RealMp2 h = g;
    h.sign = -1;
    std::complex<double> tau(0.2, 0.9);
    CHECK(std::abs(tilde_j(h, tau) + tilde_j(g, tau)) < 1e-15);
}
