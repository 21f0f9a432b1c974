#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metaplus/hecke.hpp"
#include "metaplus/sampling.hpp"

using namespace metaplus;

namespace {

Mp2Element gamma_sample(Sampler& s, const HeckeAlgebra& alg) {
    int p = alg.prime();
    return s.level_element(alg.level(), alg.psi().index()).lift(p, max_precision(p));
}

std::vector<HeckeAlgebra> odd_algebras(int p, int c) {
    return {HeckeAlgebra(p, Level::maximal(), c), HeckeAlgebra(p, Level::iwahori(), c),
            HeckeAlgebra(p, Level::iwahori_opposite(), c)};
}

void require_all(const std::vector<RelationResult>& rs) {
    for (const RelationResult& r : rs) {
        INFO(r.name << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs);
        CHECK(r.pass);
    }
}

}  // namespace

TEST_CASE("coset counts match the index") {
    HeckeAlgebra g1(3, Level::maximal());
    CHECK(g1.coset_reps(DoubleCosetLabel::torus(1)).size() == 12);
    HeckeAlgebra g2(5, Level::iwahori());
    CHECK(g2.coset_reps(DoubleCosetLabel::torus(2)).size() == 625);
    HeckeAlgebra even(2, Level::gamma0_4(2));
    CHECK(even.coset_reps(DoubleCosetLabel::torus(1)).size() == 4);
    CHECK(even.coset_reps(DoubleCosetLabel::torus(-2)).size() == 16);
    CHECK_THROWS_AS(HeckeAlgebra(2, Level::maximal()), DomainError);
}

TEST_CASE("left cosets are disjoint, lie in the double coset, and cover it") {
    for (int p : {2, 3, 5}) {
        for (int c : {0, 1}) {
            std::vector<HeckeAlgebra> algs;
            if (p == 2)
                algs.emplace_back(2, Level::gamma0_4(2), c);
            else
                algs = odd_algebras(p, c);
            for (const HeckeAlgebra& alg : algs) {
                Sampler s(p, 10 * p + c);
                for (const DoubleCosetLabel& l : alg.labels(2)) {
                    INFO(alg.level().name() << " p=" << p << " c=" << c << " " << l.to_string());
                    std::vector<Mp2Element> reps = alg.coset_reps(l);
                    CHECK(static_cast<long long>(reps.size()) == alg.coset_count(l));
                    for (const Mp2Element& g : reps) CHECK(alg.label_of(g) == l);
                    if (reps.size() <= 200)
                        for (std::size_t i = 0; i < reps.size(); ++i)
                            for (std::size_t j = i + 1; j < reps.size(); ++j)
                                CHECK_FALSE(alg.in_gamma((reps[i].inverse() * reps[j]).g));
                    for (int t = 0; t < 10; ++t) {
                        Mp2Element x = gamma_sample(s, alg) * alg.representative(l) * gamma_sample(s, alg);
                        int hits = 0;
                        for (const Mp2Element& g : reps) hits += alg.in_gamma((g.inverse() * x).g);
                        CHECK(hits == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("canonical form reassembles and X_g is well defined") {
    for (int p : {2, 3, 5, 7}) {
        for (int c : {0, 1, -1}) {
            std::vector<HeckeAlgebra> algs;
            if (p == 2)
                algs.emplace_back(2, Level::gamma0_4(2), c, 3);
            else
                algs = odd_algebras(p, c);
            for (const HeckeAlgebra& alg : algs) {
                Sampler s(p, 100 * p + c + 7);
                for (const DoubleCosetLabel& l : alg.labels(3)) {
                    HeckeElement X = HeckeElement::basis(alg, l, ExactScalar::one(p));
                    Mp2Element rep = alg.representative(l);
                    CHECK(X.evaluate(rep) == ExactScalar::from_mu8(p, alg.epsilon_rep(l)));
                    for (int t = 0; t < 100; ++t) {
                        Mp2Element g1 = gamma_sample(s, alg), g2 = gamma_sample(s, alg);
                        Mp2Element g = g1 * rep * g2;
                        CanonicalForm cf = alg.canonicalize(g);
                        INFO(alg.level().name() << " p=" << p << " c=" << c << " " << l.to_string());
                        CHECK(cf.label == l);
                        CHECK(alg.in_gamma(cf.left.g));
                        CHECK(alg.in_gamma(cf.right.g));
                        CHECK((cf.left * cf.rep * cf.right).equals(g));
                        Mu8 expected = alg.epsilon_gamma(g1) * alg.epsilon_rep(l) * alg.epsilon_gamma(g2);
                        CHECK(X.evaluate(g) == ExactScalar::from_mu8(p, expected));
                    }
                }
            }
        }
    }
}

TEST_CASE("evaluation examples") {
    for (int p : {3, 5}) {
        HeckeAlgebra alg(p, Level::iwahori());
        const AdditiveCharacter& psi = alg.psi();
        HeckeElement X = HeckeElement::basis(alg, DoubleCosetLabel::torus(1), ExactScalar::one(p));
        Mu8 e = weil_index(psi.pi_power(1), psi) / weil_index(psi.make(1), psi);
        CHECK(X.evaluate(torus(psi.pi_power(1))) == ExactScalar::from_mu8(p, e));
        CHECK(X.evaluate(torus(psi.pi_power(2))).is_zero());
        StandardOps ops = standard_ops(alg);
        Mu8 a = weil_index(psi.delta() * psi.pi_power(1), psi);
        CHECK(ops.U1_local().evaluate(weyl(psi.delta() * psi.pi_power(1))) == ExactScalar::from_mu8(p, a));
        ExactScalar t1 = ExactScalar::monomial(p, 1, 0, -1) * e;
        CHECK(ops.T1_local().evaluate(torus(psi.pi_power(1))) == t1);
        CHECK(ops.T(0) == ops.identity());

        HeckeAlgebra opp(p, Level::iwahori_opposite());
        const AdditiveCharacter& psi2 = opp.psi();
        StandardOps ops2 = standard_ops(opp);
        Mu8 e2 = weil_index(psi2.pi_power(-1), psi2) / weil_index(psi2.make(1), psi2);
        CHECK(ops2.T1_local().evaluate(torus(psi2.pi_power(-1))) == ExactScalar::monomial(p, 1, 0, -1) * e2);
        CHECK(ops2.U1_local().evaluate(weyl(psi2.delta() * psi2.pi_power(-1))) ==
              ExactScalar::from_mu8(p, weil_index(psi2.delta() * psi2.pi_power(1), psi2)));
    }
}

TEST_CASE("convolution examples") {
    HeckeAlgebra g1(5, Level::maximal());
    StandardOps ops = standard_ops(g1);
    HeckeElement t11 = convolve(ops.T(1), ops.T(1));
    CHECK(t11.coefficient(DoubleCosetLabel::torus(0)) == ExactScalar(5, Rational(6)));
    CHECK(convolve(ops.T(1), ops.T(2)) == ops.T(1) * ExactScalar(5, Rational(5)) + ops.T(3));
    CHECK(convolve(ops.identity(), ops.T(2)) == ops.T(2));

    HeckeAlgebra g2(3, Level::iwahori_opposite());
    StandardOps o2 = standard_ops(g2);
    HeckeElement u0 = o2.U(0);
    CHECK(convolve(u0, u0) - u0 * ExactScalar(3, Rational(2)) - o2.identity() * ExactScalar(3, Rational(3)) ==
          HeckeElement(g2));
    CHECK(convolve(o2.U1_local(), o2.U1_local()) == o2.identity() * ExactScalar(3, Rational(3)));

    HeckeAlgebra even(2, Level::gamma0_4(2));
    StandardOps oe = standard_ops(even);
    CHECK(convolve(oe.T(2), oe.T(3)) == oe.T(5));
}

TEST_CASE("relation suites") {
    for (int p : {3, 5, 7})
        for (int c : {0, 1})
            for (const HeckeAlgebra& alg : odd_algebras(p, c)) require_all(relation_suite(alg, 5));
    for (int c : {0, 1, -1}) require_all(relation_suite(HeckeAlgebra(2, Level::gamma0_4(2), c, 3), 5));
}

TEST_CASE("convolution is associative") {
    for (int p : {3, 5}) {
        for (Level lv : {Level::iwahori(), Level::iwahori_opposite()}) {
            HeckeAlgebra alg(p, lv, 1);
            StandardOps ops = standard_ops(alg);
            std::vector<HeckeElement> gens = {ops.identity(), ops.T(1), ops.T(-1), ops.U(0), ops.U(1),
                                              ops.U(0) + ops.T(1) * ExactScalar(p, Rational(2))};
            for (const HeckeElement& x : gens)
                for (const HeckeElement& y : gens)
                    for (const HeckeElement& z : gens) {
                        if (x.coset_total() * y.coset_total() * z.coset_total() > 2000) continue;
                        CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
                    }
        }
    }
}

TEST_CASE("the Atkin-Lehner element has spectrum {1, -1}") {
    for (int p : {3, 5, 7}) {
        HeckeAlgebra alg(p, Level::iwahori());
        StandardOps ops = standard_ops(alg);
        HeckeElement u1 = ops.U(1), one = ops.identity();
        CHECK(convolve(u1, u1) == one);
        // u1 is not central, so both (1 + u1)/2 and (1 - u1)/2 are nonzero projections
        HeckeElement plus = (one + u1) * ExactScalar(p, Rational(1, 2));
        HeckeElement minus = (one - u1) * ExactScalar(p, Rational(1, 2));
        CHECK(convolve(u1, plus) == plus);
        CHECK(convolve(u1, minus) == minus * ExactScalar(p, Rational(-1)));
        CHECK(plus != HeckeElement(alg));
        CHECK(minus != HeckeElement(alg));
    }
}

TEST_CASE("PGL2 analogues satisfy the same relations") {
    for (int p : {2, 3, 5, 7}) {
        for (int c : {0, 1}) {
            require_all(pgl2_relation_suite(Pgl2HeckeAlgebra(p, Pgl2HeckeAlgebra::Maximal, c), 5));
            require_all(pgl2_relation_suite(Pgl2HeckeAlgebra(p, Pgl2HeckeAlgebra::Iwahori, c), 5));
        }
    }
    Pgl2HeckeAlgebra iw(3, Pgl2HeckeAlgebra::Iwahori);
    CHECK(iw.coset_reps(DoubleCosetLabel::weyl(0)).size() == 3);
    CHECK(iw.coset_reps(DoubleCosetLabel::weyl(1)).size() == 1);
    Pgl2HeckeAlgebra mx(5, Pgl2HeckeAlgebra::Maximal);
    CHECK(mx.coset_reps(DoubleCosetLabel::torus(2)).size() == 30);
}
