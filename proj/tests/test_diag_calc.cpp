#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/combinat.hpp>
#include <kwb/diag_calc.hpp>
#include <kwb/series.hpp>

using namespace kwb;

TEST_CASE("diagonal self-intersection flips sign and raises the exponent") {
    DiagClass d12 = DiagClass::diagonal(2, 1, 2);
    DiagClass sq = diag_multiply(d12, d12);
    DiagMonomial want{{{1, 2}}, {1}};  // one block {1,2} with exponent 1
    CHECK(sq.size() == 1);
    CHECK(sq.coeff(want) == -1);
}

TEST_CASE("cotangent classes agree on a diagonal block") {
    DiagClass d12 = DiagClass::diagonal(2, 1, 2);
    DiagClass a = diag_multiply(DiagClass::psi(2, 1), d12);
    DiagClass b = diag_multiply(DiagClass::psi(2, 2), d12);
    CHECK(a.terms() == b.terms());
    DiagMonomial want{{{1, 2}}, {1}};
    CHECK(a.coeff(want) == 1);
}

TEST_CASE("merging distinct blocks adds exponents") {
    // psi_1^2 . psi_2 . D_12 -> block {1,2} with exponent 3
    DiagClass cls = diag_multiply(
        diag_multiply(DiagClass::psi(3, 1, 2), DiagClass::psi(3, 2)),
        DiagClass::diagonal(3, 1, 2));
    DiagMonomial want{{{1, 2}, {3}}, {3, 0}};
    CHECK(cls.coeff(want) == 1);
}

TEST_CASE("normal-form degree bookkeeping") {
    DiagMonomial m{{{1, 2}, {3}}, {3, 0}};
    CHECK(m.degree(3) == 4);  // exponents 3 + (marks 3 - blocks 2)
    DiagClass cls(3);
    cls.add(m, 5);
    CHECK(cls.degree_part(4).coeff(m) == 5);
    CHECK(cls.degree_part(3).is_zero());
    CHECK(cls.truncated(3).is_zero());
    CHECK(cls.truncated(4).coeff(m) == 5);
}

TEST_CASE("key encoding round-trips") {
    DiagMonomial m{{{1, 3}, {2}}, {2, 7}};
    auto key = DiagClass::encode(3, m);
    DiagMonomial back = DiagClass::decode(3, key);
    CHECK(back.blocks == m.blocks);
    CHECK(back.expo == m.expo);
    CHECK(DiagClass::degree_of(3, key) == m.degree(3));
}

TEST_CASE("chern expansion is symmetric in the marks") {
    DiagClass cls = expand_chern_class(3, 4);
    CHECK(cls.terms() == cls.relabeled({2, 3, 1}).terms());
    CHECK(cls.terms() == cls.relabeled({3, 2, 1}).terms());
}

TEST_CASE("substitution counts all monomials") {
    CHECK(substitution_count(2, 5) == 32);
    CHECK(substitution_count(5, 10) == 9765625);
    for (unsigned d = 1; d <= 5; ++d)
        for (unsigned r = 1; r <= 8; ++r)
            CHECK(substitution_count(d, r) == int_pow(Integer(d), r));
}

TEST_CASE("one-block substitution equals the series-route connected count") {
    for (unsigned r = 1; r <= 7; ++r)
        for (unsigned d = 1; d <= (r < 4 ? r : 4u); ++d)
            CHECK(Rational(connected_count_direct(r, d)) == connected_coeff(r, d));
    CHECK(connected_count_direct(5, 2) == 26);
}

TEST_CASE("pushforward to kappa classes") {
    // one point with psi^3 integrates along the fiber to kappa_2
    DiagClass cls = DiagClass::psi(1, 1, 3);
    CHECK(pushforward_to_kappa(cls, 7) == KappaPoly::monomial({2}, Rational(1)));
    // exponent zero dies
    CHECK(pushforward_to_kappa(DiagClass::unit(1), 7).is_zero());
    // exponent one is the scalar kappa_0 = s
    CHECK(pushforward_to_kappa(DiagClass::psi(1, 1, 1), 7) ==
          KappaPoly::monomial({}, Rational(7)));
}
