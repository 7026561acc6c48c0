#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/hodge.hpp>
#include <kwb/matrix_q.hpp>
#include <kwb/partitions.hpp>
#include <kwb/strata.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

using namespace kwb;

TEST_CASE("builders produce valid trees with the requested socle profile") {
    for (unsigned g = 2; g <= 6; ++g) {
        for (const Partition& p : partitions(g - 1)) {
            DualGraph s = build_stratum_S(g, p);
            s.validate(g, 1);
            CHECK(s.socle_profile() == p);
        }
        for (const Partition& p : partitions(g)) {
            DualGraph t = build_stratum_T(g, p);
            t.validate(g, 2);
            CHECK(t.socle_profile() == p);
        }
        for (const Partition& p : partitions(g - 1)) {
            if (p.front() < 2) continue;
            DualGraph u = build_stratum_U(g, p);
            u.validate(g, 0);
            CHECK(u.socle_profile() == p);
        }
        for (const Partition& p : partitions(g - 2)) {
            DualGraph up = build_stratum_U_prime(g, p);
            up.validate(g, 0);
            CHECK(up.socle_profile() == p);
        }
    }
    for (unsigned n = 4; n <= 9; ++n) {
        for (unsigned d = 1; d + 2 < n; ++d) {
            for (const Partition& p : partitions(d, n - 2 - d)) {
                DualGraph v = build_stratum_V(n, p);
                v.validate(0, n);
                CHECK(v.socle_profile() == p);
            }
        }
    }
}

namespace {

// socle profile after paying the genus bump at the marked vertex: the vertex
// carrying marking 1 loses psi1_power dimensions to the prescribed psi class
Partition profile_after_bump(const DualGraph& g, unsigned psi1_power) {
    unsigned marked = 0;
    for (unsigned v = 0; v < g.vertices.size(); ++v)
        for (unsigned m : g.vertices[v].markings)
            if (m == 1) marked = v;
    Partition out;
    for (unsigned v = 0; v < g.vertices.size(); ++v) {
        long dim = g.socle_dim(v);
        if (v == marked) dim -= static_cast<long>(psi1_power);
        REQUIRE(dim >= 0);
        if (dim > 0) out.push_back(static_cast<unsigned>(dim));
    }
    std::sort(out.begin(), out.end(), std::greater<unsigned>());
    return out;
}

}  // namespace

TEST_CASE("pointed builders carry the genus bump in the psi power") {
    for (unsigned g = 2; g <= 5; ++g) {
        for (unsigned d = 1; d <= 2 * g - 1; ++d) {
            for (const Partition& p : partitions(d, 2 * g - 1 - d)) {
                PointedStratum w = build_stratum_W(g, p);
                w.graph.validate(g, 1);
                CHECK(profile_after_bump(w.graph, w.psi1_power) == p);
                CHECK(w.psi1_power % 2 == 0);
            }
        }
        for (unsigned d = 1; d <= 2 * g; ++d) {
            for (const Partition& p : partitions(d, 2 * g - d)) {
                PointedStratum wt = build_stratum_W_tilde(g, p);
                wt.graph.validate(g, 2);
                CHECK(profile_after_bump(wt.graph, wt.psi1_power) == p);
                CHECK(wt.psi1_power % 2 == 0);
            }
        }
    }
}

TEST_CASE("single-vertex pairing anchors") {
    // genus g, one unmarked genus-g vertex paired with kappa_(2g-3) would be
    // the one-part mu entry; the mu matrices certify P(g-1) at one marking
    MatrixQ mu1 = pairing_matrix(PairingFamily::Mu, 1, 1, 0);
    REQUIRE(mu1.rows() == 1);
    CHECK(mu1.at(0, 0) == Rational(1, 24));

    MatrixQ mu2 = pairing_matrix(PairingFamily::Mu, 2, 1, 0);
    REQUIRE(mu2.rows() == 1);
    CHECK(mu2.at(0, 0) == Rational(1, 576));
    CHECK(matrix_det(mu2) == Rational(1, 576));
}

TEST_CASE("an unmarked genus-g point pairs to the one-point socle value") {
    for (unsigned g = 2; g <= 4; ++g) {
        DualGraph pt;
        pt.add_vertex(g);
        pt.validate(g, 0);
        Partition top{2 * g - 3};
        CHECK(stratum_pairing(top, pt) == socle_integral(g, 0, {}, top));
    }
}

TEST_CASE("pairing with prescribed psi powers") {
    // a genus-2 one-mark vertex with psi_1^2 against the empty monomial
    DualGraph pt;
    unsigned v = pt.add_vertex(2);
    pt.vertices[v].markings.push_back(1);
    pt.validate(2, 1);
    std::map<unsigned, unsigned> psi{{1, 2}};
    CHECK(stratum_pairing({}, pt, psi) == socle_integral(2, 1, {2}, {}));
    CHECK(stratum_pairing({1}, pt, psi) == socle_integral(2, 1, {2}, {1}));
}

TEST_CASE("two-vertex pairing sums over ordered assignments") {
    // two genus-1 one-edge vertices, one marking on the first: profile (1, 1)
    // wait: socle dims are (2*1 - 3 + 2) = 1 and (2*1 - 3 + 1) = 0 -> profile (1)
    DualGraph two;
    unsigned a = two.add_vertex(1);
    unsigned b = two.add_vertex(1);
    two.add_edge(a, b);
    two.vertices[a].markings.push_back(1);
    two.validate(2, 1);
    CHECK(two.socle_profile() == Partition{1});
    // kappa_1 must land on the positive-dimension vertex; the other factor is
    // the 1-point genus-1 socle at degree 0
    Rational want = socle_integral(1, 2, {0, 0}, {1}) * socle_integral(1, 1, {0}, {});
    CHECK(stratum_pairing({1}, two) == want);
}

TEST_CASE("pairing matrices are triangular in partition length") {
    struct Fam {
        PairingFamily fam;
        unsigned g_lo, g_hi;
    };
    for (const Fam& f : {Fam{PairingFamily::Mu, 1, 5}, Fam{PairingFamily::Nu, 2, 5},
                         Fam{PairingFamily::Omega, 3, 5}, Fam{PairingFamily::OmegaPrime, 2, 5}}) {
        for (unsigned g = f.g_lo; g <= f.g_hi; ++g) {
            MatrixQ m = pairing_matrix(f.fam, g, 0, 0);
            REQUIRE(m.rows() == m.cols());
            if (m.rows() == 0) continue;
            Rational prod(1);
            for (size_t i = 0; i < m.rows(); ++i) {
                CHECK(!m.at(i, i).is_zero());
                prod = prod * m.at(i, i);
                for (size_t j = 0; j < m.cols(); ++j) {
                    if (m.at(i, j).is_zero()) continue;
                    CHECK(m.row_labels[i].size() >= m.col_labels[j].size());
                    if (i != j) CHECK(m.row_labels[i].size() > m.col_labels[j].size());
                }
            }
            CHECK(matrix_det(m) == prod);
        }
    }
}

TEST_CASE("known determinant anchors") {
    CHECK(matrix_det(pairing_matrix(PairingFamily::Mu, 3, 0, 0)) == Rational(1, 95551488));
    CHECK(matrix_det(pairing_matrix(PairingFamily::Omega, 3, 0, 0)) == Rational(7, 138240));
    CHECK(matrix_det(pairing_matrix(PairingFamily::OmegaPrime, 2, 0, 0)) == Rational(1, 576));
}

TEST_CASE("comb family recovers the one-point socle in degree zero") {
    for (unsigned g = 1; g <= 3; ++g) {
        MatrixQ w = pairing_matrix(PairingFamily::W, g, 1, 0);
        REQUIRE(w.rows() == 1);
        CHECK(w.at(0, 0) == lambda_g_base(g));
    }
}

TEST_CASE("genus shedding preserves profiles and validity") {
    for (unsigned g = 3; g <= 5; ++g) {
        for (const Partition& p : partitions(g - 2)) {
            DualGraph graph = build_stratum_U_prime(g, p);
            Partition before = graph.socle_profile();
            unsigned marks_before = graph.num_markings();
            shed_genus_for_markings(graph, 1);
            graph.validate(g - 1, marks_before + 2);
            CHECK(graph.socle_profile() == before);
        }
    }
}

TEST_CASE("genus-0 chain index set matches the graded basis order") {
    std::vector<Partition> want{{6}, {5, 1}, {4, 2}, {3, 3}};
    CHECK(pairing_index_set(PairingFamily::Genus0V, 0, 10, 6) == want);
}

namespace {

DualGraph random_stable_tree(std::mt19937& rng, unsigned vcount, unsigned n) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        DualGraph g;
        for (unsigned v = 0; v < vcount; ++v) {
            g.add_vertex(0);
            if (v > 0) g.add_edge(static_cast<unsigned>(rng() % v), v);
        }
        for (unsigned mark = 1; mark <= n; ++mark)
            g.vertices[rng() % vcount].markings.push_back(mark);
        try {
            g.validate(0, n);
            return g;
        } catch (const std::logic_error&) {
            continue;
        }
    }
    throw std::runtime_error("no stable tree found");
}

}  // namespace

TEST_CASE("every genus-0 tree pairs like its chain representative") {
    std::mt19937 rng(20240817u);
    for (unsigned n : {7u, 8u}) {
        for (unsigned vcount = 2; vcount <= 4; ++vcount) {
            for (int trial = 0; trial < 6; ++trial) {
                DualGraph tree = random_stable_tree(rng, vcount, n);
                Partition q = genus0_q_profile(tree);
                unsigned total = partition_weight(q);
                CHECK(total == n - 2 - vcount);
                if (total == 0) continue;
                DualGraph chain = build_stratum_V(n, q);
                for (const Partition& p : partitions(total))
                    CHECK(stratum_pairing(p, tree) == stratum_pairing(p, chain));
            }
        }
    }
}

TEST_CASE("graph validation rejects malformed input") {
    DualGraph cyc;
    unsigned a = cyc.add_vertex(1);
    unsigned b = cyc.add_vertex(1);
    cyc.add_edge(a, b);
    cyc.add_edge(a, b);  // cycle: compact type excludes it
    CHECK_THROWS_AS(cyc.validate(3, 0), std::logic_error);

    DualGraph gap;
    gap.add_vertex(1);
    gap.vertices[0].markings = {2};  // labels must be 1..n
    CHECK_THROWS_AS(gap.validate(1, 1), std::logic_error);

    DualGraph unstable;
    unstable.add_vertex(0);  // genus 0, valence 0
    CHECK_THROWS_AS(unstable.validate(0, 0), std::logic_error);
}
