#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metaplus/pseries.hpp"
#include "metaplus/sampling.hpp"

using namespace metaplus;

namespace {

void require_all(const std::vector<NumericCheck>& cs) {
    for (const NumericCheck& c : cs) {
        INFO(c.name << " value " << c.value << " expected " << c.expected);
        CHECK(c.pass);
    }
}

Mp2Element gamma_sample(Sampler& s, const HeckeAlgebra& alg) {
    int p = alg.prime();
    return s.level_element(alg.level(), alg.psi().index()).lift(p, max_precision(p));
}

Mp2Element k_sample(Sampler& s, const HeckeAlgebra& alg) {
    int p = alg.prime();
    return s.level_element(Level::maximal(), alg.psi().index()).lift(p, max_precision(p));
}

std::vector<HeckeAlgebra> all_algebras(int c) {
    std::vector<HeckeAlgebra> algs;
    for (int p : {3, 5}) {
        algs.emplace_back(p, Level::maximal(), c);
        algs.emplace_back(p, Level::iwahori(), c);
        algs.emplace_back(p, Level::iwahori_opposite(), c);
    }
    algs.emplace_back(2, Level::gamma0_4(2), c, 3);
    return algs;
}

}  // namespace

TEST_CASE("evaluation examples") {
    HeckeAlgebra g1(5, Level::maximal());
    PrincipalSeries ps(g1, q_power(5, 0.3));
    CHECK(std::abs(f0(ps)(mp2_identity(5, max_precision(5))) - 1.0) < 1e-12);
    const AdditiveCharacter& psi = g1.psi();
    PadicNumber a = psi.make(Rational(10, 3)), b = psi.make(Rational(7, 25));
    cplx expected = (weil_index(psi.make(1), psi) / weil_index(a, psi)).to_complex() * std::pow(5.0, -1.3);
    CHECK(std::abs(f0(ps)(u_sharp(b) * torus(a)) - expected) < 1e-12);

    HeckeAlgebra g2(3, Level::iwahori());
    PrincipalSeries p2(g2, 1.0);
    CHECK(std::abs(f2(p2)(weyl(g2.psi().delta())) - 1.0) < 1e-12);
    CHECK(std::abs(f1(p2)(mp2_identity(3, max_precision(3))) - 1.0) < 1e-12);
    // on Gamma[pi d^-1, d] the lemma fixes f1 on the w_delta cell
    HeckeAlgebra g3(3, Level::iwahori_opposite());
    PrincipalSeries p3(g3, 1.0);
    CHECK(std::abs(f1(p3)(weyl(g3.psi().delta())) - 1.0) < 1e-12);
    CHECK(std::abs(f2(p3)(mp2_identity(3, max_precision(3))) - 1.0) < 1e-12);
}

TEST_CASE("table vectors transform correctly on both sides") {
    for (int c : {0, 1}) {
        for (const HeckeAlgebra& alg : all_algebras(c)) {
            int p = alg.prime();
            const AdditiveCharacter& psi = alg.psi();
            PrincipalSeries ps(alg, q_power(p, cplx(0.2, 0.4)));
            Sampler s(p, 31 * p + c);
            for (std::size_t i = 0; i < ps.dimension(); ++i) {
                if (!ps.supports(i)) continue;
                PrincipalSeriesVector f = PrincipalSeriesVector::cell(ps, i);
                INFO(alg.level().name() << " p=" << p << " c=" << c << " cell " << ps.cell_names()[i]);
                for (int t = 0; t < 40; ++t) {
                    Mp2Element k = k_sample(s, alg);
                    Mp2Element gm = gamma_sample(s, alg);
                    cplx eps = epsilon(gm, psi).inverse().to_complex();
                    CHECK(std::abs(f(k * gm) - f(k) * eps) < 1e-9);
                    PadicNumber a = psi.make(2 * s.uniform(0, 20) + 1) * psi.pi_power(s.uniform(-2, 2));
                    PadicNumber x = psi.make(s.uniform(-50, 50)) * psi.pi_power(s.uniform(-2, 1));
                    Mp2Element b = u_sharp(x) * torus(a);
                    CHECK(std::abs(f(b * k) - ps.character(b.g.a) * double(b.sign) * f(k)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("the u_flat(2 delta) cell carries no fixed vector") {
    for (int c : {0, 1, -1}) {
        HeckeAlgebra alg(2, Level::gamma0_4(2), c, 5);
        PrincipalSeries ps(alg, 1.0);
        CHECK(ps.dimension() == 3);
        CHECK(ps.fixed_dimension() == 2);
        CHECK_FALSE(ps.supports(2));
        CHECK_THROWS_AS(PrincipalSeriesVector::cell(ps, 2), DomainError);
    }
    for (int p : {3, 5}) {
        HeckeAlgebra alg(p, Level::iwahori());
        CHECK(PrincipalSeries(alg, 1.0).fixed_dimension() == 2);
    }
}

TEST_CASE("action is a representation of the Hecke algebra") {
    for (int p : {3, 5}) {
        for (Level lv : {Level::iwahori(), Level::iwahori_opposite()}) {
            HeckeAlgebra alg(p, lv, 1);
            StandardOps ops = standard_ops(alg);
            PrincipalSeries ps(alg, q_power(p, cplx(0.1, -0.7)));
            std::vector<HeckeElement> gens = {ops.T(1), ops.T(-1), ops.U(0), ops.U(1)};
            for (const HeckeElement& x : gens)
                for (const HeckeElement& y : gens) {
                    Eigen::MatrixXcd lhs = action_matrix(convolve(x, y), ps);
                    Eigen::MatrixXcd rhs = action_matrix(x, ps) * action_matrix(y, ps);
                    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
                }
        }
    }
    HeckeAlgebra even(2, Level::gamma0_4(2), 0, 3);
    StandardOps ops = standard_ops(even);
    PrincipalSeries ps(even, q_power(2, 0.3));
    for (int m1 : {1, 2, -1})
        for (int m2 : {1, -2, -1}) {
            if (m1 * m2 < 0) continue;
            Eigen::MatrixXcd lhs = action_matrix(convolve(ops.T(m1), ops.T(m2)), ps);
            Eigen::MatrixXcd rhs = action_matrix(ops.T(m1), ps) * action_matrix(ops.T(m2), ps);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
        }
    // the mixed product has support off the torus labels
    Eigen::MatrixXcd mixed = action_matrix(ops.T(1), ps) * action_matrix(ops.T(-1), ps);
    CHECK(std::abs(mixed(1, 0)) > 0.1);
    CHECK_THROWS_AS(convolve(ops.T(1), ops.T(-1)), DomainError);
}

TEST_CASE("kernels act as rank one projectors at p = 2") {
    for (int c : {0, 1}) {
        HeckeAlgebra alg(2, Level::gamma0_4(2), c, 3);
        IdempotentKernels ker(alg.psi());
        PrincipalSeries ps(alg, q_power(2, 0.3));
        for (Kernel k : {Kernel::eK, Kernel::EK}) {
            Eigen::MatrixXcd m = kernel_matrix(ker, k, ps);
            CHECK((m * m - m).cwiseAbs().maxCoeff() < 1e-9);
            CHECK(numerical_rank(m) == 1);
        }
        Eigen::VectorXcd fp = f_plus(ps, ker).table();
        Eigen::MatrixXcd E = kernel_matrix(ker, Kernel::EK, ps);
        CHECK((E * fp - fp).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("eigen suite") {
    for (int p : {3, 5, 7})
        for (int c : {0, 1}) require_all(eigen_suite(p, default_s_grid(), c));
    for (int c : {0, 1, -1}) require_all(eigen_suite(2, default_s_grid(), c, 3));
    // p = 5, s = 0.3
    HeckeAlgebra g1(5, Level::maximal());
    PrincipalSeries ps(g1, q_power(5, 0.3));
    cplx lam = act(standard_ops(g1).T(1), f0(ps)).table()[0];
    CHECK(std::abs(lam - std::sqrt(5.0) * (std::pow(5.0, 0.3) + std::pow(5.0, -0.3))) < 1e-9);
}

TEST_CASE("composite eigenvalue at p = 2, s = 0") {
    HeckeAlgebra alg(2, Level::gamma0_4(2));
    IdempotentKernels ker(alg.psi());
    PrincipalSeries ps(alg, 1.0);
    PrincipalSeriesVector fp = f_plus(ps, ker);
    PrincipalSeriesVector g = act_kernel(ker, Kernel::EK, act(standard_ops(alg).T(1), fp));
    cplx lam = g.table()[0] / fp.table()[0];
    CHECK(std::abs(lam - 2.0 / 3.0 * std::sqrt(2.0) * 2.0) < 1e-9);
    CHECK(approx_equal(g, fp * lam));
}

TEST_CASE("Steinberg vector") {
    HeckeAlgebra alg(3, Level::iwahori());
    PrincipalSeries ps(alg, std::sqrt(3.0));
    PrincipalSeriesVector st = steinberg_fixed(ps);
    CHECK(std::abs(st.table()[0] - 1.0) < 1e-15);
    CHECK(std::abs(st.table()[1] + 1.0 / 3.0) < 1e-15);
    PrincipalSeriesVector u = act(standard_ops(alg).U(1), st);
    CHECK(approx_equal(u, st * cplx(-1.0)));
    CHECK_THROWS_AS(steinberg_fixed(PrincipalSeries(alg, 1.0)), DomainError);

    CHECK_FALSE(steinberg_tag(3, 1, 1).twisted);
    CHECK(steinberg_tag(3, -1, 1).twisted);
    CHECK(steinberg_tag(5, 1, 2).twisted);
    CHECK_FALSE(steinberg_tag(5, -1, 2).twisted);
}

TEST_CASE("Whittaker values") {
    for (int p : {3, 5})
        for (int c : {0, 1}) require_all(whittaker_suite(p, default_s_grid(), c));
    require_all(whittaker_suite(3, {0.0, 0.3}, 0, 2));
    HeckeAlgebra alg(3, Level::iwahori());
    PrincipalSeries ps(alg, std::sqrt(3.0));
    WhittakerValue w = whittaker(steinberg_fixed(ps), 1);
    CHECK(std::abs(w.value) < 1e-12);
    CHECK(w.depth <= alg.psi().index() + 2);
    // the truncation below the stable depth differs
    PrincipalSeries generic(alg, q_power(3, 0.3));
    PrincipalSeriesVector f = f1(generic) + f2(generic);
    cplx stable = whittaker(f, 1).value;
    CHECK(std::abs(whittaker_truncated(f, 1, 3) - stable) < 1e-12);
}

TEST_CASE("parameter flip for a non-square unit") {
    for (int p : {3, 5, 7}) {
        AdditiveCharacter psi(p, 1, 1, max_precision(p));
        long long xi = 2;
        while (legendre(xi, p) != -1) ++xi;
        for (int k = -3; k <= 3; ++k)
            for (long long u : {1, 2, 3, 6}) {
                if (u % p == 0) continue;
                CHECK(parameter_flip_holds(psi, xi, psi.make(u) * psi.pi_power(k)));
            }
        CHECK_THROWS_AS(parameter_flip_holds(psi, 1, psi.make(1)), DomainError);
    }
}

TEST_CASE("pairing against the dual spherical-type vector") {
    for (int p : {3, 5}) {
        HeckeAlgebra alg(p, Level::iwahori(), 1);
        for (int sign : {1, -1}) {
            PrincipalSeries ps(alg, sign * std::sqrt(double(p)));
            PrincipalSeries dual(alg, 1.0 / std::conj(ps.qs()));
            CHECK(std::abs(pairing(steinberg_fixed(ps), f1(dual) + f2(dual))) < 1e-12);
            CHECK(std::abs(pairing(f1(ps), f1(dual) + f2(dual)) - 1.0 / (p + 1)) < 1e-12);
        }
    }
}

TEST_CASE("exact action at the Steinberg points") {
    for (int p : {3, 5}) {
        HeckeAlgebra alg(p, Level::iwahori());
        StandardOps ops = standard_ops(alg);
        for (int sign : {1, -1}) {
            PrincipalSeries ps(alg, sign * std::sqrt(double(p)));
            ExactMatrix t = exact_action_matrix(ops.T(1), ps, sign), u = exact_action_matrix(ops.U(1), ps, sign);
            Eigen::MatrixXcd tn = action_matrix(ops.T(1), ps);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(std::abs(t[i][j].to_complex() - tn(i, j)) < 1e-9);
            std::vector<ExactScalar> st = exact_steinberg_table(ps);
            std::vector<ExactScalar> minus = {-st[0], -st[1]};
            CHECK(exact_apply(exact_multiply(t, u), st) == minus);
            CHECK(exact_apply(exact_multiply(u, t), st) == minus);
        }
    }
    HeckeAlgebra alg(3, Level::iwahori());
    PrincipalSeries ps(alg, 1.0);
    CHECK_THROWS_AS(exact_action_matrix(standard_ops(alg).T(1), ps, 1), DomainError);
}
