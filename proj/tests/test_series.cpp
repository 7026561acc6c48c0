#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/combinat.hpp>
#include <kwb/partitions.hpp>
#include <kwb/series.hpp>

using namespace kwb;

TEST_CASE("exp and log are inverse on the box") {
    BiSeries a(4, 3);
    a.coeff(1, 0) = Rational(2);
    a.coeff(0, 1) = Rational(-1, 3);
    a.coeff(2, 1) = Rational(5, 7);
    a.coeff(1, 2) = Rational(1);
    a.coeff(4, 3) = Rational(-11, 2);
    BiSeries round = a.exp().log();
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned d = 0; d <= 3; ++d) CHECK(round.coeff(r, d) == a.coeff(r, d));
    CHECK_THROWS_AS(a.log(), std::invalid_argument);
}

TEST_CASE("exp turns sums into products") {
    BiSeries a(3, 3), b(3, 3);
    a.coeff(1, 1) = Rational(1);
    b.coeff(2, 1) = Rational(-3, 2);
    BiSeries sum = a;
    sum += b;
    BiSeries lhs = sum.exp();
    BiSeries rhs = a.exp() * b.exp();
    for (unsigned r = 0; r <= 3; ++r)
        for (unsigned d = 0; d <= 3; ++d) CHECK(lhs.coeff(r, d) == rhs.coeff(r, d));
}

TEST_CASE("disconnected coefficients count all monomials") {
    for (unsigned d = 1; d <= 5; ++d)
        for (unsigned r = 1; r <= 8; ++r)
            CHECK(disconnected_coeff(r, d) ==
                  Rational(int_pow(Integer(d), r)) / Rational(factorial(d)));
}

TEST_CASE("connected coefficient fixtures") {
    CHECK(connected_coeff(5, 2) == Rational(26));
    CHECK(connected_coeff_hat(5, 2) == Rational(13));
    CHECK(connected_coeff(4, 4) == Rational(6));     // (r-1)! on the diagonal r = d
    CHECK(connected_coeff(5, 5) == Rational(24));
    CHECK(connected_coeff(3, 5) == Rational(0));     // more points than letters
    for (unsigned r = 1; r <= 8; ++r) CHECK(connected_coeff(r, 1) == Rational(1));
    for (unsigned r = 1; r <= 8; ++r)
        for (unsigned d = 1; d <= r; ++d)
            CHECK(connected_coeff_hat(r, d) ==
                  connected_coeff(r, d) / Rational(factorial(d)));
}

TEST_CASE("chain count polynomials") {
    CHECK(chain_polynomial(1) == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(chain_polynomial(2) == std::vector<Rational>{Rational(0), Rational(1), Rational(1)});
    CHECK(chain_polynomial(3) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(3), Rational(1)});
    CHECK(chain_polynomial(4) == std::vector<Rational>{Rational(0), Rational(1), Rational(7),
                                                       Rational(6), Rational(1)});
    // evaluating at 1 counts set partitions
    for (unsigned r = 1; r <= 7; ++r) {
        Rational total(0);
        for (const Rational& c : chain_polynomial(r)) total += c;
        CHECK(total == Rational(Integer(static_cast<long>(set_partitions(r).size()))));
    }
}

TEST_CASE("alpha and beta coefficients") {
    CHECK(alpha_coeff(1) == Rational(1));
    CHECK(alpha_coeff(2) == Rational(5, 2));
    CHECK(alpha_coeff(3) == Rational(37, 3));
    CHECK(alpha_coeff(4) == Rational(353, 4));
    CHECK(beta_coeff(1) == Rational(-1));
    CHECK(beta_coeff(2) == Rational(-2));
    CHECK(beta_coeff(3) == Rational(-10));
    CHECK(beta_coeff(4) == Rational(-74));
    for (unsigned l = 1; l <= 12; ++l) {
        CHECK(beta_coeff(l + 1) == alpha_coeff(l) * Rational(-2 * static_cast<int>(l)));
        CHECK(beta_coeff(l) < Rational(0));
        CHECK(-beta_coeff(l) <= Rational(odd_double_factorial(l)));
    }
}
