#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "metaplus/localfield.hpp"

using namespace metaplus;


TEST_CASE("padic arithmetic keeps valuations and precision") {
    PadicNumber a = PadicNumber::from_integer(3, 18);
    CHECK(a.valuation() == 2);
    CHECK(a.unit() == 2);
    PadicNumber b = PadicNumber::from_rational(3, Rational(1, 9));
    CHECK(b.valuation() == -2);
    CHECK((a * b).equals(PadicNumber::from_integer(3, 2)));
    PadicNumber one = PadicNumber::from_integer(5, 1);
    PadicNumber tiny = PadicNumber::uniformizer_power(5, 10);
    PadicNumber diff = (one + tiny) - one;
    CHECK(diff.valuation() == 10);
    CHECK(diff.precision() == 2);
    PadicNumber z = one - one;
    CHECK(z.is_zero());
    CHECK_FALSE(z.is_exact_zero());
    CHECK(PadicNumber::zero(5).is_exact_zero());
    CHECK_THROWS_AS(one / PadicNumber::zero(5), DomainError);
}

TEST_CASE("hilbert symbol on small values") {
    auto h = [](int p, long long a, long long b) {
        return hilbert_symbol(PadicNumber::from_integer(p, a), PadicNumber::from_integer(p, b));
    };
    CHECK(h(2, -1, -1) == -1);
    CHECK(h(2, 2, 3) == -1);
    CHECK(h(2, 2, 5) == -1);
    CHECK(h(2, 2, 7) == 1);
    CHECK(h(3, 3, 2) == -1);
    CHECK(h(3, -1, 3) == -1);
    CHECK(h(5, -1, 5) == 1);
    CHECK(h(5, 2, 5) == -1);
    CHECK(h(7, 3, 7) == -1);
}

TEST_CASE("hilbert symbol is symmetric, bimultiplicative and (a,-a) = 1") {
    for (int p : {2, 3, 5, 7}) {
        auto reps = square_class_representatives(p, 0, 1);
        for (auto& a : reps)
            for (auto& b : reps) {
                CHECK(hilbert_symbol(a, b) == hilbert_symbol(b, a));
                CHECK(hilbert_symbol(a, -a) == 1);
                for (auto& c : reps)
                    CHECK(hilbert_symbol(a, b * c) == hilbert_symbol(a, b) * hilbert_symbol(a, c));
            }
    }
}

TEST_CASE("hilbert symbol rejects undetermined square classes") {
    PadicNumber one = PadicNumber::from_integer(2, 1);
    PadicNumber coarse = (one + PadicNumber::uniformizer_power(2, 14)) - one;
    CHECK(coarse.precision() == 2);
    CHECK_THROWS_AS(hilbert_symbol(coarse, one), InsufficientPrecision);
}

TEST_CASE("additive character has the requested index") {
    for (int p : {2, 3, 5}) {
        for (int c : {-1, 0, 2}) {
            AdditiveCharacter psi(p, c, first_nonresidue(p));
            CHECK(psi.value(psi.pi_power(-c)).num == 0);
            CHECK(psi.value(psi.pi_power(-c - 1)).num != 0);
        }
    }
    AdditiveCharacter psi(2);
    RootOfUnity r = psi.value(PadicNumber::from_rational(2, Rational(1, 4)));
    CHECK(r.num == 1);
    CHECK(r.den == 4);
}

TEST_CASE("closed-form weil index agrees with the brute-force oracle") {
    for (int p : {2, 3, 5, 7}) {
        for (int c : {-1, 0, 1}) {
            for (long long eta : {1LL, first_nonresidue(p)}) {
                AdditiveCharacter psi(p, c, eta);
                for (auto& a : square_class_representatives(p, -2, 2)) {
                    OracleResult o = weil_index_oracle(a, psi);
                    INFO("p=" << p << " c=" << c << " eta=" << eta << " a=" << a.to_string());
                    CHECK(o.value == weil_index(a, psi));
                    CHECK(o.stabilisation_gap < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("weil index values pinned from the oracle") {
    // Frozen from weil_index_oracle with psi1 = exp(2 pi i {x}_p).
    AdditiveCharacter psi2(2);
    CHECK(weil_index(PadicNumber::from_integer(2, 1), psi2) == Mu8::zeta(1));
    CHECK(weil_index(PadicNumber::from_integer(2, 3), psi2) == Mu8::zeta(7));
    CHECK(weil_index(PadicNumber::from_integer(2, 2), psi2) == Mu8::zeta(1));
    CHECK(weil_index(PadicNumber::from_integer(2, 6), psi2) == Mu8::zeta(3));
    CHECK(weil_index(PadicNumber::from_integer(2, 10), psi2) == Mu8::zeta(5));
    AdditiveCharacter psi3(3);
    CHECK(weil_index(PadicNumber::from_integer(3, 3), psi3) == Mu8::zeta(2));
    CHECK(weil_index(PadicNumber::from_integer(3, 6), psi3) == Mu8::zeta(6));
    AdditiveCharacter psi5(5);
    CHECK(weil_index(PadicNumber::from_integer(5, 1), psi5) == Mu8::one());
    CHECK(weil_index(PadicNumber::from_integer(5, 5), psi5) == Mu8::one());
    CHECK(weil_index(PadicNumber::from_integer(5, 10), psi5) == Mu8::zeta(4));
}

TEST_CASE("weil index laws") {
    for (int p : {2, 3, 5, 7}) {
        for (int c : {-1, 0, 2}) {
            AdditiveCharacter psi(p, c, first_nonresidue(p));
            auto reps = square_class_representatives(p, -1, 2);
            PadicNumber one = psi.make(1);
            for (auto& a : reps) {
                CHECK(weil_index(-a, psi) == weil_index(a, psi).conj());
                for (auto& b : reps) {
                    CHECK(weil_index(a, psi.twisted(b)) == weil_index(b * a, psi));
                    Mu8 lhs = weil_index(one, psi) * weil_index(a * b, psi) /
                              (weil_index(a, psi) * weil_index(b, psi));
                    CHECK(lhs == Mu8::sign(hilbert_symbol(a, b)));
                }
            }
            if (p != 2) {
                PadicNumber delta = psi.delta();
                for (long long u = 1; u < p; ++u)
                    CHECK(weil_index(delta * psi.make(u), psi) == Mu8::one());
            }
        }
    }
}

TEST_CASE("weil constants over unit classes sum to zero for odd p") {
    for (int p : {3, 5, 7, 11}) {
        AdditiveCharacter psi(p, 1, first_nonresidue(p));
        ExactScalar sum(p);
        PadicNumber dp = psi.delta() * psi.pi_power(1);
        for (long long u = 1; u < p; ++u) sum += ExactScalar::from_mu8(p, weil_index(dp * psi.make(u), psi));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("product formula over all places for rational arguments") {
    // psi_inf(x) = e(-x) pairs with the local psi1 into a character trivial on Q.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-400, 400);
    for (int trial = 0; trial < 200; ++trial) {
        long long n = dist(rng);
        if (n == 0) continue;
        Mu8 prod = weil_index_real(static_cast<double>(n));
        long long m = n < 0 ? -n : n;
        std::vector<int> primes = {2};
        for (int p = 3; p <= m; p += 2)
            if (is_prime(p) && m % p == 0) primes.push_back(p);
        for (int p : primes) prod = prod * weil_index(PadicNumber::from_integer(p, n), AdditiveCharacter(p));
        CHECK(prod == Mu8::one());
    }
}

TEST_CASE("exact scalar arithmetic") {
    ExactScalar s2 = ExactScalar::monomial(2, 1, 0, 1);
    CHECK(s2 * s2 == ExactScalar(2, 2));
    ExactScalar s3 = ExactScalar::monomial(3, 1, 0, 1);
    CHECK(s3 * s3 == ExactScalar(3, 3));
    CHECK(ExactScalar::monomial(3, 1, 2, 0) * ExactScalar::monomial(3, 1, 2, 0) == ExactScalar(3, -1));
    ExactScalar z = ExactScalar::monomial(5, Rational(2, 3), 3, -1);
    CHECK(std::abs((z * z.conj()).to_complex() - std::complex<double>(4.0 / 45.0, 0)) < 1e-12);
}
