#include <doctest.h>

#include <set>
#include <stdexcept>

#include "jtab/jordanlab.hpp"
#include "jtab/poset.hpp"
#include "jtab/rng.hpp"

using namespace jtab;

TEST_CASE("Fp arithmetic") {
    REQUIRE(Fp::modulus() == 65537);
    CHECK(Fp(65537).is_zero());
    CHECK(Fp(-1) == Fp(65536));
    CHECK(Fp(3) * Fp(4) == Fp(12));
    CHECK((Fp(7) / Fp(7)) == Fp(1));
    for (int x = 1; x <= 100; x++) CHECK(Fp(x) * Fp(x).inverse() == Fp(1));
    CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
    CHECK(Fp(3).pow(4) == Fp(81));
    CHECK(Fp(3).pow(-1) == Fp(3).inverse());
    CHECK(is_prime(65537));
    CHECK(!is_prime(65536));
    CHECK_THROWS_AS(Fp::set_modulus(15), std::domain_error);
}

TEST_CASE("rank over GF(p)") {
    MatFp id = MatFp::Identity(4, 4);
    CHECK(rank_gfp(id) == 4);
    CHECK(rank_gfp(MatFp::Zero(3, 5)) == 0);
    MatFp outer(3, 3);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) outer(i, j) = Fp((i + 1) * (j + 2));
    CHECK(rank_gfp(outer) == 1);
    MatFp two = MatFp::Zero(4, 4);
    two(0, 1) = Fp(5);
    two(2, 3) = Fp(9);
    CHECK(rank_gfp(two) == 2);
}

TEST_CASE("Jordan matrices") {
    MatFp j3 = jordan_matrix(Partition({3}));
    CHECK(j3(0, 1) == Fp(1));
    CHECK(j3(1, 2) == Fp(1));
    CHECK(j3(0, 2) == Fp(0));
    CHECK(rank_gfp(j3) == 2);

    MatFp j21 = jordan_matrix(Partition({2, 1}));
    CHECK(j21(0, 1) == Fp(1));
    CHECK(rank_gfp(j21) == 1);

    CHECK(is_zero_matrix(jordan_matrix(Partition({1, 1, 1, 1}))));
}

TEST_CASE("jordan_type round trips and power shifts") {
    for (int n = 1; n <= 12; n++) {
        PartitionStream ps(n);
        Partition p;
        while (ps.next(p)) {
            if (p.empty()) continue;
            CHECK(jordan_type(jordan_matrix(p)) == p);
        }
    }
    /* Lemma 2.3: P_{B^k} = [n]^k for B = J_(n) */
    for (int n = 2; n <= 12; n++) {
        MatFp b = jordan_matrix(Partition({n}));
        MatFp power = b;
        for (int k = 1; k < n; k++) {
            CHECK(jordan_type(power) == almost_rectangular(n, k));
            power = power * b;
        }
    }
    CHECK(jordan_type(MatFp::Zero(5, 5)) == Partition({1, 1, 1, 1, 1}));

    MatFp notnil = MatFp::Identity(3, 3);
    CHECK_THROWS_AS(jordan_type(notnil), std::domain_error);
}

TEST_CASE("rank sequence identity (Eq. 4.22)") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        /* random strictly upper triangular 6x6 */
        auto rng = trial_rng(seed, 77);
        MatFp a = MatFp::Zero(6, 6);
        for (int i = 0; i < 6; i++)
            for (int j = i + 1; j < 6; j++)
                a(i, j) = Fp(static_cast<long long>(uniform_below(rng, Fp::modulus())));
        Partition type = jordan_type(a);
        auto rs = rank_sequence(type);
        MatFp power = a;
        for (size_t k = 1; k <= rs.size(); k++) {
            CHECK(rank_gfp(power) == rs[k - 1]);
            power = power * a;
        }
    }
}

TEST_CASE("U_B structure for (5,2) matches Eq. (4.16)") {
    UBStructure ub(Partition({5, 2}));
    REQUIRE(ub.dim() == 9);
    CHECK(ub.two_part());
    CHECK(ub.coord_label(ub.index_a(1)) == "a_1");
    CHECK(ub.coord_label(ub.index_b(1)) == "b_1");
    CHECK(ub.coord_label(ub.index_g(2)) == "g_2");
    CHECK(ub.coord_label(ub.index_gp(1)) == "g'_1");

    std::vector<Fp> v(9);
    v[ub.index_a(1)] = Fp(1);
    v[ub.index_a(2)] = Fp(2);
    v[ub.index_a(3)] = Fp(3);
    v[ub.index_a(4)] = Fp(4);
    v[ub.index_b(1)] = Fp(5);
    v[ub.index_g(1)] = Fp(6);
    v[ub.index_g(2)] = Fp(7);
    v[ub.index_gp(1)] = Fp(8);
    v[ub.index_gp(2)] = Fp(9);
    MatFp m = ub.realize(v);

    MatFp want = MatFp::Zero(7, 7);
    auto row = [&](int i, std::initializer_list<int> entries) {
        int j = 0;
        for (int e : entries) want(i, j++) = Fp(e);
    };
    row(0, {0, 1, 2, 3, 4, 6, 7});
    row(1, {0, 0, 1, 2, 3, 0, 6});
    row(2, {0, 0, 0, 1, 2, 0, 0});
    row(3, {0, 0, 0, 0, 1, 0, 0});
    row(4, {0, 0, 0, 0, 0, 0, 0});
    row(5, {0, 0, 0, 8, 9, 0, 5});
    row(6, {0, 0, 0, 0, 8, 0, 0});
    CHECK(is_zero_matrix(m - want));
}

TEST_CASE("U_B dimension formula for two-part bases (Eq. 4.14)") {
    for (int u = 3; u <= 24; u++)
        for (int r = 2; r < u; r++)
            CHECK(UBStructure(Partition({u, u - r})).dim() == u + 3 * (u - r) - 2);
}

TEST_CASE("samples commute with J and are nilpotent") {
    for (const char* base : {"(5,2)", "(4,2,2,1)", "(3,2,2,1)", "(7)"}) {
        Partition q = parse_partition(base);
        MatFp j = jordan_matrix(q);
        for (uint64_t seed = 0; seed < 100; seed++) {
            UBSample s = sample_UB(q, seed);
            CHECK(is_zero_matrix(s.matrix * j - j * s.matrix));
            CHECK_NOTHROW(jordan_type(s.matrix));  // throws unless nilpotent
        }
    }
}

TEST_CASE("projections to repeated-part copies are strictly upper triangular") {
    /* component of A(1,i,s') on (1,i,s) must vanish for s <= s' */
    Partition base({4, 2, 2, 1});
    UBStructure ub(base);
    auto vertex_index = [&](int u, int len, int copy) {
        for (const auto& row : ub.rows())
            if (row.len == len && row.copy == copy) return row.offset + len - u;
        FAIL("row not found");
        return -1;
    };
    for (uint64_t seed = 0; seed < 20; seed++) {
        UBSample s = sample_UB(base, seed);
        for (int sp = 1; sp <= 2; sp++)
            for (int sg = 1; sg <= sp; sg++)
                CHECK(s.matrix(vertex_index(1, 2, sg), vertex_index(1, 2, sp)).is_zero());
    }
}

TEST_CASE("samples over a single row are polynomials in J") {
    /* the realized matrix must be an upper-triangular Toeplitz polynomial in
     * J_(n) with zero constant term */
    UBSample s = sample_UB(Partition({6}), 3);
    REQUIRE(s.structure.dim() == 5);
    for (int i = 0; i < 6; i++)
        for (int j = 0; j < 6; j++) {
            if (j <= i) CHECK(s.matrix(i, j).is_zero());
            if (i > 0 && j > 0) CHECK(s.matrix(i, j) == s.matrix(i - 1, j - 1));
        }
}

TEST_CASE("mc_image on pinned partitions") {
    CHECK(mc_image(Partition({5, 2}), 8, 1).type == Partition({5, 2}));
    CHECK(mc_image(Partition({3, 2}), 8, 1).type == Partition({5}));
    McImage big = mc_image(Partition({4, 3, 3, 2, 2, 1}), 16, 1);
    CHECK(big.type == Partition({12, 3}));
    CHECK(big.dominance_ok);
}

TEST_CASE("mc_image equals oblak for all small partitions") {
    for (int n = 1; n <= 9; n++) {
        PartitionStream ps(n);
        Partition p;
        while (ps.next(p)) {
            if (p.empty()) continue;
            McImage m = mc_image(p, 8, 42);
            CHECK(m.type == oblak(p));
            CHECK(m.dominance_ok);
        }
    }
}

TEST_CASE("coordinate weights reproduce Eq. (4.19) and Example 4.6") {
    UBStructure ub52(Partition({5, 2}));
    int r = 3;
    for (int m = 1; m <= 4; m++) CHECK(ub52.coord_weight(ub52.index_a(m)) == 2 * m);
    CHECK(ub52.coord_weight(ub52.index_b(1)) == 2);
    for (int j = 1; j <= 2; j++) {
        CHECK(ub52.coord_weight(ub52.index_g(j)) == r + 2 * (j - 1));
        CHECK(ub52.coord_weight(ub52.index_gp(j)) == r + 2 * (j - 1));
    }

    /* (3,2): the alpha_3- and beta_3-like coordinates have weight 1 */
    UBStructure ub32(Partition({3, 2}));
    CHECK(ub32.dim() == 7);
    CHECK(ub32.coord_weight(ub32.index_g(1)) == 1);
    CHECK(ub32.coord_weight(ub32.index_gp(1)) == 1);
}

TEST_CASE("scaling invariance") {
    for (const char* base : {"(5,2)", "(3,2)", "(5,3)"}) {
        ScalingReport rep = scaling_invariance_check(parse_partition(base), 50, 7);
        CHECK(rep.passes == rep.trials);
    }
}

TEST_CASE("locus specs for (5,2) match Fig. 4") {
    Partition q({5, 2});
    auto s11 = locus_spec(q, 1, 1);
    CHECK(s11.generator_names().empty());
    auto s12 = locus_spec(q, 1, 2);
    CHECK(s12.generator_names() == std::vector<std::string>{"b_1"});
    CHECK(s12.beyond_conjecture);
    auto s21 = locus_spec(q, 2, 1);
    CHECK(s21.generator_names() == std::vector<std::string>{"a_1"});
    CHECK(!s21.beyond_conjecture);
    auto s22 = locus_spec(q, 2, 2);
    CHECK(s22.generator_names() == std::vector<std::string>{"a_1", "X_1(1,0)"});
    CHECK(s22.s == 1);
    CHECK(s22.k1 == 1);
    CHECK(s22.k2 == 0);
}

TEST_CASE("locus specs for (5,3): pure quadrics") {
    Partition q({5, 3});
    auto s12 = locus_spec(q, 1, 2);
    CHECK(s12.generator_names() == std::vector<std::string>{"X_1(0,0)"});
    CHECK(!s12.beyond_conjecture);
    auto s13 = locus_spec(q, 1, 3);
    CHECK(s13.generator_names() == std::vector<std::string>{"X_1(0,0)", "X_2(0,0)"});
    CHECK(s13.beyond_conjecture);
}

TEST_CASE("locus sampling hits the table types for (5,2)") {
    Partition q({5, 2});
    for (int k = 1; k <= 2; k++)
        for (int l = 1; l <= 2; l++) {
            LocusReport rep = locus_sample_check(locus_spec(q, k, l), 100, 11);
            CHECK(rep.matches_table);
            CHECK(rep.modal_count >= 99);
        }
}

TEST_CASE("locus sampling for (5,3) quadric cells") {
    Partition q({5, 3});
    for (int l = 1; l <= 3; l++) {
        LocusReport rep = locus_sample_check(locus_spec(q, 1, l), 100, 13);
        CHECK(rep.matches_table);
    }
}

TEST_CASE("the intersection locus of Eq. (4.25)") {
    UBStructure ub(Partition({5, 2}));
    SampleConstraints cons;
    cons.zero_coords = {ub.index_a(1), ub.index_b(1)};
    cons.nonzero_coords = {ub.index_g(1), ub.index_gp(1)};
    LocusReport rep = sample_jordan_types(ub, cons, 100, 17);
    CHECK(rep.failed_trials == 0);
    REQUIRE(rep.histogram.size() == 1);
    CHECK(rep.modal == Partition({3, 3, 1}));
    CHECK(rep.modal_count == 100);
}
