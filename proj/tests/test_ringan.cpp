#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/matrix_q.hpp>
#include <kwb/partitions.hpp>
#include <kwb/relations.hpp>
#include <kwb/ring_analysis.hpp>
#include <kwb/strata.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace kwb;

TEST_CASE("relation ranks in low degree") {
    // degree 3 at s = 4: the cell (5, 2) is -9 k3 + k2 k1 (paired with k1);
    // the cell (6, 3) carries an independent k1^3 term of weight 1/6
    CHECK(relation_series(4, 5, 2).coeff({1, 1, 1}) == Rational(0));
    CHECK(relation_series(4, 6, 3).coeff({1, 1, 1}) == Rational(1, 6));
    CHECK(relation_rank(4, 3, 3, false) == 2);
    // richer family at s = 8, degree 6: rank 7 inside the 11-dim monomial space
    CHECK(partitions(6).size() == 11);
    CHECK(relation_rank(8, 6, 6, true) == 7);
}

TEST_CASE("rank is invariant under row scaling and permutation") {
    std::vector<KappaPoly> rels = generated_relations(8, 6, 6, false);
    std::vector<Partition> cols = partitions(6);
    auto to_matrix = [&](const std::vector<KappaPoly>& rows) {
        MatrixQ m(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                m.at(i, j) = rows[i].coeff(cols[j]);
        return m;
    };
    size_t base = matrix_rank(to_matrix(rels));
    CHECK(base == relation_rank(8, 6, 6, false));

    std::mt19937 rng(7u);
    std::shuffle(rels.begin(), rels.end(), rng);
    std::vector<KappaPoly> scaled;
    for (const KappaPoly& p : rels) {
        int num = 1 + static_cast<int>(rng() % 5);
        int den = 1 + static_cast<int>(rng() % 5);
        scaled.push_back(p * Rational(num, den));
    }
    CHECK(matrix_rank(to_matrix(scaled)) == base);
}

TEST_CASE("graded dimensions by three methods") {
    CHECK(genus0_betti(10, 4, BettiMethod::Formula) == 5);
    CHECK(genus0_betti(7, 4, BettiMethod::Formula) == 1);
    for (unsigned n = 3; n <= 8; ++n) {
        CHECK(genus0_betti(n, 0, BettiMethod::Formula) == 1);
        for (unsigned d = 0; d + 3 <= n; ++d) {
            Integer want = partition_count(d, n - 2 - d);
            CHECK(genus0_betti(n, d, BettiMethod::Formula) == want);
            CHECK(genus0_betti(n, d, BettiMethod::Pairing) == want);
            CHECK(genus0_betti(n, d, BettiMethod::Relations) == want);
        }
    }
    CHECK_THROWS_AS(genus0_betti(2, 0, BettiMethod::Formula), std::invalid_argument);
    CHECK_THROWS_AS(genus0_betti(6, 4, BettiMethod::Formula), std::invalid_argument);
}

TEST_CASE("certified graded bases") {
    BasisResult b = genus0_basis(10, 6);
    std::vector<Partition> want{{6}, {5, 1}, {4, 2}, {3, 3}};
    CHECK(b.monomials == want);
    CHECK(b.certified);
    REQUIRE(b.certificate.rows() == 4);
    REQUIRE(b.certificate.cols() == 4);
    CHECK(!matrix_det(b.certificate).is_zero());

    BasisResult c = genus0_basis(7, 2);
    CHECK(c.monomials == std::vector<Partition>{{2}, {1, 1}});
    CHECK(c.certified);
}

TEST_CASE("eliminating a generator") {
    KappaPoly rel = minimal_generator_relation(4, 3, 6);
    KappaPoly want;
    want += KappaPoly::monomial({3}, Rational(-9));
    want += KappaPoly::monomial({2, 1}, Rational(1));
    CHECK(rel == want);

    CHECK(minimal_generator_relation(2, 2, 4) == KappaPoly::monomial({2}, Rational(1)));
    CHECK(minimal_generator_relation(1, 1, 6) == KappaPoly::monomial({1}, Rational(1)));

    // on the boundary s = 2l the class is a required generator
    CHECK_THROWS_AS(minimal_generator_relation(6, 3, 12), std::invalid_argument);
    CHECK_THROWS_AS(minimal_generator_relation(4, 0, 6), std::invalid_argument);
}

TEST_CASE("pointed independence certificates") {
    for (unsigned g = 1; g <= 3; ++g) {
        for (unsigned n = 1; n <= 3; ++n) {
            long s = 2L * g - 2 + n;
            if (s <= 0) continue;
            for (unsigned d = 0; d < static_cast<unsigned>(s); ++d) {
                CertificateResult cert = independence_certificate_pointed(g, n, d);
                CHECK(cert.nonsingular);
                CHECK(cert.certified_rank ==
                      static_cast<size_t>(partition_count(d, static_cast<unsigned>(s) - d).get_si()));
            }
            CHECK_THROWS_AS(independence_certificate_pointed(g, n, static_cast<unsigned>(s)),
                            std::invalid_argument);
        }
    }
    // degree zero is the trivial certificate
    CertificateResult triv = independence_certificate_pointed(2, 1, 0);
    REQUIRE(triv.matrix.rows() == 1);
    CHECK(triv.matrix.at(0, 0) == Rational(1));
    CHECK(triv.certified_rank == 1);
}

TEST_CASE("unpointed independence certificates") {
    CertificateResult full = independence_certificate_unpointed(4, 2);
    CHECK(full.nonsingular);
    CHECK(full.certified_rank == 2);  // all of P(2)

    CertificateResult edge = independence_certificate_unpointed(4, 3);
    CHECK(edge.certified_rank == 2);  // P(3) minus the longest partition

    CertificateResult edge5 = independence_certificate_unpointed(5, 4);
    CHECK(edge5.certified_rank == 4);  // P(4) minus the longest partition

    CHECK_THROWS_AS(independence_certificate_unpointed(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(independence_certificate_unpointed(1, 0), std::invalid_argument);
}

TEST_CASE("universality report rows") {
    UniversalityReport small = universality_report(1, 2, 0, 1);
    REQUIRE(small.rows.size() == 2);
    for (const UniversalityRow& row : small.rows) {
        CHECK(row.predicted == 1);
        CHECK(row.upper == 1);
        CHECK(row.has_lower);
        CHECK(row.lower == 1);
        CHECK(row.verdict == "verified");
    }

    UniversalityReport open = universality_report(5, 0, 6, 6);
    REQUIRE(open.rows.size() == 1);
    const UniversalityRow& row = open.rows[0];
    CHECK(row.degree == 6);
    CHECK(row.predicted == 4);
    CHECK(row.upper == 4);
    CHECK(!row.has_lower);
    CHECK(row.verdict == "gap");
    CHECK(!row.note.empty());
}

TEST_CASE("generated relations pair to zero against every chain stratum") {
    // s = 5 is the 7-pointed genus-0 ring; a nonzero pairing with any V
    // stratum would expose a false relation
    const unsigned n = 7;
    // degree 2 has no relations at s = 5 (the monomials are all independent)
    CHECK(generated_relations(5, 2, 2, true).empty());
    for (unsigned degree = 3; degree <= 4; ++degree) {
        std::vector<KappaPoly> rels = generated_relations(5, degree, degree, true);
        CHECK(!rels.empty());
        for (const Partition& q : partitions(degree, n - 2 - degree)) {
            DualGraph stratum = build_stratum_V(n, q);
            for (const KappaPoly& rel : rels) {
                Rational pairing(0);
                for (const auto& [part, coeff] : rel.terms())
                    pairing = pairing + coeff * stratum_pairing(part, stratum);
                CHECK(pairing == Rational(0));
            }
        }
    }
}
