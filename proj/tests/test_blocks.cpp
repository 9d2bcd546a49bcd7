#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdef/blocks.hpp"
#include "support/fixtures.hpp"

using namespace blockdef;
namespace fx = blockdef::fixtures;

namespace {
struct Pipeline {
    std::shared_ptr<Group> G;
    CharTable table;
    Simples S;
    DecompositionMatrix D;
    BlockData bd;
};

Pipeline run(std::shared_ptr<Group> G, u64 p) {
    Pipeline P;
    P.G = G;
    P.table = character_table(G);
    MeatAxeOptions opt;
    P.S = simples(G, p, opt);
    P.D = decomposition_matrix(P.table, P.S, p);
    P.bd = block_data(P.table, P.S, P.D, p);
    return P;
}
} // namespace

TEST_CASE("semisimple case: one block per character, defect zero") {
    Pipeline P = run(fx::sym(3), 5);
    CHECK(P.bd.blocks.size() == 3);
    for (auto& b : P.bd.blocks) {
        CHECK(b.ordinary.size() == 1);
        CHECK(b.brauer.size() == 1);
        CHECK(b.defect == 0);
        CHECK(b.defect_group_elements.size() == 1);
        CHECK(b.rep_type == RepType::Finite);
    }
    // decomposition matrix is a permutation matrix
    for (auto& row : P.D.d) {
        i64 s = 0;
        for (i64 v : row) s += v;
        CHECK(s == 1);
    }
}

TEST_CASE("S4 at p=2 has a single block") {
    Pipeline P = run(fx::sym(4), 2);
    REQUIRE(P.bd.blocks.size() == 1);
    CHECK(P.bd.blocks[0].ordinary.size() == 5);
    CHECK(P.bd.blocks[0].defect == 3);
    CHECK(P.bd.blocks[0].defect_group_elements.size() == 8);
    CHECK(P.bd.blocks[0].shape == TwoGroupShape::Dihedral);
    CHECK(P.bd.blocks[0].rep_type == RepType::Tame);
}

TEST_CASE("A5 at p=5: principal block plus one defect-0 block") {
    Pipeline P = run(fx::alt5(), 5);
    REQUIRE(P.bd.blocks.size() == 2);
    int principal = -1, defect0 = -1;
    for (size_t i = 0; i < P.bd.blocks.size(); ++i) {
        if (P.bd.blocks[i].defect == 0) defect0 = (int)i;
        else principal = (int)i;
    }
    REQUIRE(principal >= 0);
    REQUIRE(defect0 >= 0);
    CHECK(P.bd.blocks[principal].ordinary.size() == 4);
    CHECK(P.bd.blocks[defect0].ordinary.size() == 1);
    CHECK(P.table.chars[P.bd.blocks[defect0].ordinary[0]].degree == 5);
    CHECK(P.bd.blocks[principal].defect_group_elements.size() == 5);
}

TEST_CASE("A5 at p=2: klein-four defect group, tagged tame (klein-four)") {
    Pipeline P = run(fx::alt5(), 2);
    int principal = -1;
    for (size_t i = 0; i < P.bd.blocks.size(); ++i)
        if (P.bd.blocks[i].defect > 0) principal = (int)i;
    REQUIRE(principal >= 0);
    CHECK(P.bd.blocks[principal].defect == 2);
    CHECK(P.bd.blocks[principal].shape == TwoGroupShape::KleinFour);
    CHECK(P.bd.blocks[principal].rep_type == RepType::Tame);
    // plus the defect-0 block of the 4-dimensional character
    CHECK(P.bd.blocks.size() == 2);
}

TEST_CASE("classification of small 2-groups") {
    CHECK(classify_2group(*fx::cyclic(4)) == TwoGroupShape::Cyclic);
    CHECK(classify_2group(*fx::klein_four()) == TwoGroupShape::KleinFour);
    CHECK(classify_2group(*fx::dihedral(8)) == TwoGroupShape::Dihedral);
    CHECK(classify_2group(*fx::quaternion8()) == TwoGroupShape::Quaternion);
    CHECK(classify_2group(*fx::dihedral(16)) == TwoGroupShape::Dihedral);
    CHECK_THROWS_AS(classify_2group(*fx::sym(3)), Error);
    // sylow subgroups: S4 -> dihedral 8, SL(2,3) -> quaternion 8,
    // GL(2,3) -> semidihedral 16, SL(2,7) -> quaternion 16
    CHECK(classify_2group(fx::sym(4)->sylow(2)) == TwoGroupShape::Dihedral);
    CHECK(classify_2group(fx::sl2(3)->sylow(2)) == TwoGroupShape::Quaternion);
    CHECK(classify_2group(fx::gl2(3)->sylow(2)) == TwoGroupShape::Semidihedral);
    CHECK(classify_2group(fx::sl2(7)->sylow(2)) == TwoGroupShape::Quaternion);
    CHECK(classify_2group(fx::pgl2(7)->sylow(2)) == TwoGroupShape::Dihedral);
}

TEST_CASE("defect group of the principal block is the Sylow subgroup") {
    for (auto [G, p] : std::vector<std::pair<std::shared_ptr<Group>, u64>>{
             {fx::sym(4), 2}, {fx::alt5(), 2}, {fx::alt5(), 5}, {fx::sl2(3), 2}}) {
        Pipeline P = run(G, p);
        // principal block contains the trivial character (degree 1, all values 1)
        int triv = -1;
        for (size_t c = 0; c < P.table.chars.size(); ++c) {
            bool all_one = true;
            for (auto& v : P.table.chars[c].values)
                if (!(v == Cyc::one())) all_one = false;
            if (all_one) triv = (int)c;
        }
        REQUIRE(triv >= 0);
        const Block& b0 = P.bd.blocks[P.bd.block_of_char[triv]];
        CHECK(b0.defect_group_elements.size() == p_part(G->order(), p));
    }
}

TEST_CASE("character heights in S4 at p=2") {
    Pipeline P = run(fx::sym(4), 2);
    for (size_t c = 0; c < P.table.chars.size(); ++c) {
        int h = character_height(P.table, P.bd, (int)c, P.bd.block_of_char[(int)c]);
        if (P.table.chars[c].degree == 2) CHECK(h == 1);
        else CHECK(h == 0);
    }
}

TEST_CASE("brauer correspondent basics") {
    // u = 1: identity map on blocks
    Pipeline P = run(fx::alt5(), 5);
    MeatAxeOptions opt;
    for (size_t b = 0; b < P.bd.blocks.size(); ++b) {
        int corr = brauer_correspondent(P.bd, *P.G, P.table, P.bd, (int)b);
        CHECK(corr == (int)b);
    }
    // S4, u an involution: every block of C(u) corresponds to the principal block
    auto S4 = fx::sym(4);
    Pipeline PS = run(S4, 2);
    int invol = -1;
    for (u64 g = 1; g < S4->order(); ++g)
        if (S4->order_of((int)g) == 2) {
            invol = (int)g;
            break;
        }
    auto C = std::make_shared<Group>(S4->centralizer(invol));
    CharTable ct = character_table(C);
    Simples cs = simples(C, 2, opt);
    DecompositionMatrix cd = decomposition_matrix(ct, cs, 2);
    BlockData cbd = block_data(ct, cs, cd, 2);
    for (size_t b = 0; b < cbd.blocks.size(); ++b)
        CHECK(brauer_correspondent(PS.bd, *C, ct, cbd, (int)b) == 0);
}

TEST_CASE("block-diagonal structure of the decomposition matrix") {
    for (auto [G, p] : std::vector<std::pair<std::shared_ptr<Group>, u64>>{
             {fx::alt5(), 5}, {fx::alt5(), 2}, {fx::sl2(3), 2}}) {
        Pipeline P = run(G, p);
        for (size_t mu = 0; mu < P.D.d.size(); ++mu)
            for (size_t nu = 0; nu < P.D.d[mu].size(); ++nu)
                if (P.D.d[mu][nu] != 0)
                    CHECK(P.bd.block_of_char[mu] == P.bd.block_of_simple[nu]);
    }
}
