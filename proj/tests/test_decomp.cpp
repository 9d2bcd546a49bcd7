#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdef/blocks.hpp"
#include "support/fixtures.hpp"

using namespace blockdef;
namespace fx = blockdef::fixtures;

TEST_CASE("C2 at p=2: both characters reduce to the trivial Brauer character") {
    auto G = fx::cyclic(2);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    Simples S = simples(G, 2, opt);
    DecompositionMatrix D = decomposition_matrix(t, S, 2);
    REQUIRE(D.d.size() == 2);
    CHECK(D.d[0] == std::vector<i64>{1});
    CHECK(D.d[1] == std::vector<i64>{1});
}

TEST_CASE("S3 at p=3") {
    auto G = fx::sym(3);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    Simples S = simples(G, 3, opt);
    DecompositionMatrix D = decomposition_matrix(t, S, 3);
    REQUIRE(D.d.size() == 3);
    // the two linear characters hit distinct simples, the 2-dimensional
    // character reduces to their sum
    CHECK(D.d[0][0] + D.d[0][1] == 1);
    CHECK(D.d[1][0] + D.d[1][1] == 1);
    CHECK(D.d[2] == std::vector<i64>{1, 1});
    auto C = D.cartan();
    CHECK(C[0][0] == 2);
    CHECK(C[1][1] == 2);
    CHECK(C[0][1] == 1);
}

TEST_CASE("semisimple case gives a permutation matrix") {
    auto G = fx::sym(3);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    Simples S = simples(G, 5, opt);
    DecompositionMatrix D = decomposition_matrix(t, S, 5);
    for (auto& row : D.d) {
        i64 sum = 0, max = 0;
        for (i64 v : row) {
            sum += v;
            max = std::max(max, v);
        }
        CHECK(sum == 1);
        CHECK(max == 1);
    }
}

TEST_CASE("S4 at p=2 decomposition") {
    auto G = fx::sym(4);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    Simples S = simples(G, 2, opt);
    DecompositionMatrix D = decomposition_matrix(t, S, 2);
    // degrees 1,1,2,3,3 -> rows (1,0),(1,0),(0,1),(1,1),(1,1)
    for (size_t mu = 0; mu < t.chars.size(); ++mu) {
        if (t.chars[mu].degree == 1) CHECK(D.d[mu] == std::vector<i64>{1, 0});
        if (t.chars[mu].degree == 2) CHECK(D.d[mu] == std::vector<i64>{0, 1});
        if (t.chars[mu].degree == 3) CHECK(D.d[mu] == std::vector<i64>{1, 1});
    }
}

TEST_CASE("generalized table: i=0 slice equals the ordinary matrix") {
    MeatAxeOptions opt;
    for (auto [G, p] : std::vector<std::pair<std::shared_ptr<Group>, u64>>{
             {fx::cyclic(4), 2}, {fx::sym(4), 2}, {fx::sym(3), 3}}) {
        CharTable t = character_table(G);
        Simples S = simples(G, p, opt);
        DecompositionMatrix D = decomposition_matrix(t, S, p);
        GenDecompTable T = generalized_decomposition(t, p, opt);
        REQUIRE(T.frame.parts[0].u == 0);
        const auto& slice0 = T.slices[0];
        // the identity-part centralizer is G itself; simple order matches
        for (size_t mu = 0; mu < t.chars.size(); ++mu)
            for (size_t nu = 0; nu < slice0.d[mu].size(); ++nu)
                CHECK(slice0.d[mu][nu] == Cyc(D.d[mu][nu]));
    }
}

TEST_CASE("C2 at p=2: the u=sigma column is the character values") {
    auto G = fx::cyclic(2);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    GenDecompTable T = generalized_decomposition(t, 2, opt);
    REQUIRE(T.slices.size() == 2);
    REQUIRE(T.slices[1].d.size() == 2);
    // column = zeta_mu(sigma): one character gives 1, the other -1
    std::vector<Cyc> col{T.slices[1].d[0][0], T.slices[1].d[1][0]};
    CHECK(((col[0] == Cyc::one() && col[1] == Cyc(-1)) ||
           (col[0] == Cyc(-1) && col[1] == Cyc::one())));
}

TEST_CASE("C4 at p=2: order-4 column lies in Z[i] and leaves {0,+-1}") {
    auto G = fx::cyclic(4);
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    GenDecompTable T = generalized_decomposition(t, 2, opt);
    // find the part with alpha = 2 (order-4 u)
    int part = -1;
    for (size_t i = 0; i < T.frame.parts.size(); ++i)
        if (T.frame.parts[i].alpha == 2) part = (int)i;
    REQUIRE(part >= 0);
    bool outside = false;
    std::vector<Cyc> seen;
    for (size_t mu = 0; mu < t.chars.size(); ++mu) {
        const Cyc& v = T.slices[part].d[mu][0];
        CHECK(v.is_algebraic_integer());
        CHECK(v.lies_in_conductor(4));
        if (!(v == Cyc::zero() || v == Cyc::one() || v == Cyc(-1))) outside = true;
        seen.push_back(v);
    }
    CHECK(outside);
    // values are exactly {1, i, -1, -i} in some order
    int count_i = 0;
    for (auto& v : seen)
        if (v == Cyc::root_of_unity(4, 1) || v == Cyc::root_of_unity(4, 3)) ++count_i;
    CHECK(count_i == 2);
}

TEST_CASE("reconstruction and vanishing for the corpus") {
    MeatAxeOptions opt;
    std::vector<std::pair<std::shared_ptr<Group>, u64>> corpus = {
        {fx::cyclic(4), 2}, {fx::quaternion8(), 2}, {fx::dihedral(8), 2},
        {fx::sym(4), 2},    {fx::sl2(3), 2},        {fx::alt5(), 2},
        {fx::alt5(), 5}};
    for (auto [G, p] : corpus) {
        CharTable t = character_table(G);
        Simples S = simples(G, p, opt);
        DecompositionMatrix D = decomposition_matrix(t, S, p);
        BlockData bd = block_data(t, S, D, p);
        GenDecompTable T = generalized_decomposition(t, p, opt);
        verify_reconstruction(t, T);
        VanishingReport rep = verify_block_vanishing(T, bd, opt);
        CHECK(rep.violations == 0);
        if (bd.blocks.size() > 1) CHECK(rep.checked.size() > 0);
    }
}

TEST_CASE("A5 at p=5: defect-0 character vanishes on singular parts") {
    auto G = fx::alt5();
    CharTable t = character_table(G);
    MeatAxeOptions opt;
    GenDecompTable T = generalized_decomposition(t, 5, opt);
    int five = -1;
    for (size_t c = 0; c < t.chars.size(); ++c)
        if (t.chars[c].degree == 5) five = (int)c;
    REQUIRE(five >= 0);
    for (size_t i = 1; i < T.slices.size(); ++i)
        for (auto& v : T.slices[i].d[five]) CHECK(v == Cyc::zero());
}
