#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdef/errors.hpp"
#include "blockdef/psingular.hpp"
#include "support/fixtures.hpp"

using namespace blockdef;
namespace fx = blockdef::fixtures;

TEST_CASE("orders of the corpus groups") {
    CHECK(fx::cyclic(2)->order() == 2);
    CHECK(fx::cyclic(4)->order() == 4);
    CHECK(fx::klein_four()->order() == 4);
    CHECK(fx::sym(3)->order() == 6);
    CHECK(fx::dihedral(8)->order() == 8);
    CHECK(fx::quaternion8()->order() == 8);
    CHECK(fx::sym(4)->order() == 24);
    CHECK(fx::sl2(3)->order() == 24);
    CHECK(fx::alt5()->order() == 60);
    CHECK(fx::sl2(7)->order() == 336);
    CHECK(fx::pgl2(7)->order() == 336);
    CHECK(fx::dihedral(16)->order() == 16);
}

TEST_CASE("class counts and class equation") {
    struct Row {
        std::shared_ptr<Group> G;
        size_t classes;
    };
    std::vector<Row> rows = {
        {fx::cyclic(2), 2},   {fx::sym(3), 3},   {fx::sym(4), 5},  {fx::dihedral(8), 5},
        {fx::quaternion8(), 5}, {fx::sl2(3), 7}, {fx::alt5(), 5},  {fx::sl2(7), 11},
        {fx::pgl2(7), 9},
    };
    for (auto& r : rows) {
        const auto& cls = r.G->classes();
        CHECK(cls.size() == r.classes);
        u64 total = 0;
        for (const auto& c : cls) {
            total += c.size;
            CHECK(c.size * c.centralizer_order == r.G->order());
        }
        CHECK(total == r.G->order());
    }
}

TEST_CASE("empty generator list gives the trivial group") {
    Group G = Group::from_generators(1, {});
    CHECK(G.order() == 1);
    CHECK(G.classes().size() == 1);
}

TEST_CASE("single transposition gives order 2 with 2 classes") {
    Group G = Group::from_generators(2, {{1, 0}});
    CHECK(G.order() == 2);
    CHECK(G.classes().size() == 2);
}

TEST_CASE("group too large raises budget error") {
    CHECK_THROWS_AS(Group::from_generators(12, {fx::cyclic(12)->perm(fx::cyclic(12)->generator_ids()[0])}, 5),
                    Error);
}

TEST_CASE("sylow subgroups") {
    auto C6 = fx::cyclic(6);
    CHECK(C6->sylow(2).order() == 2);
    CHECK(C6->sylow(3).order() == 3);
    auto S4 = fx::sym(4);
    Group P = S4->sylow(2);
    CHECK(P.order() == 8);
    // repeated runs agree (deterministic), and the result is a 2-group
    Group P2 = S4->sylow(2);
    CHECK(P.elements() == P2.elements());
    auto A5 = fx::alt5();
    CHECK(A5->sylow(2).order() == 4);
    CHECK(A5->sylow(5).order() == 5);
    CHECK(fx::sl2(7)->sylow(2).order() == 16);
    // p not dividing the order: trivial subgroup
    CHECK(S4->sylow(7).order() == 1);
}

TEST_CASE("centralizers") {
    auto S3 = fx::sym(3);
    // centralizer of a 3-cycle is the cyclic group of order 3
    int three_cycle = -1;
    for (u64 g = 1; g < S3->order(); ++g)
        if (S3->order_of((int)g) == 3) {
            three_cycle = (int)g;
            break;
        }
    Group C = S3->centralizer(three_cycle);
    CHECK(C.order() == 3);
    for (u64 g = 0; g < C.order(); ++g) CHECK(C.order_of((int)g) != 2);
}

TEST_CASE("p-part decomposition") {
    auto C6 = fx::cyclic(6);
    int g = C6->generator_ids()[0]; // order 6
    auto [u, v] = C6->p_part_decomposition(g, 2);
    CHECK(C6->order_of(u) == 2);
    CHECK(C6->order_of(v) == 3);
    CHECK(C6->mul(u, v) == g);
    CHECK(C6->mul(v, u) == g);
    CHECK(u == C6->pow(g, 3));
    CHECK(v == C6->pow(g, 4));

    // order p element and p-regular element edge cases
    auto S3 = fx::sym(3);
    for (u64 h = 0; h < S3->order(); ++h) {
        auto [uu, vv] = S3->p_part_decomposition((int)h, 2);
        if (S3->order_of((int)h) == 2) {
            CHECK(uu == (int)h);
            CHECK(vv == 0);
        }
        if (S3->order_of((int)h) % 2 == 1) {
            CHECK(uu == 0);
            CHECK(vv == (int)h);
        }
    }
}

TEST_CASE("p-part decomposition is conjugation equivariant") {
    auto S4 = fx::sym(4);
    for (const auto& cls : S4->classes()) {
        int g = cls.rep;
        auto [u, v] = S4->p_part_decomposition(g, 2);
        for (u64 h = 0; h < S4->order(); h += 3) {
            int gc = S4->conjugate(g, (int)h);
            auto [uc, vc] = S4->p_part_decomposition(gc, 2);
            CHECK(uc == S4->conjugate(u, (int)h));
            CHECK(vc == S4->conjugate(v, (int)h));
        }
    }
}

TEST_CASE("p-singular frame covers all classes exactly once") {
    struct Row {
        std::shared_ptr<Group> G;
        u64 p;
    };
    std::vector<Row> rows = {{fx::cyclic(2), 2},  {fx::cyclic(4), 2}, {fx::sym(4), 2},
                             {fx::sym(3), 3},     {fx::alt5(), 2},    {fx::alt5(), 5},
                             {fx::quaternion8(), 2}, {fx::sl2(3), 2}};
    for (auto& r : rows) {
        PSingularFrame F = p_singular_frame(*r.G, r.p);
        size_t pairs = 0;
        for (const auto& part : F.parts) {
            pairs += part.v_reps.size();
            // u_i commutes with each v
            for (int v : part.v_reps) {
                int v_in_G = r.G->index_of(part.cent->perm(v));
                CHECK(r.G->mul(part.u, v_in_G) == r.G->mul(v_in_G, part.u));
            }
        }
        CHECK(pairs == r.G->classes().size());
        CHECK(F.parts[0].u == 0);
    }
}

TEST_CASE("frame for C2 and C4 at p=2") {
    PSingularFrame F2 = p_singular_frame(*fx::cyclic(2), 2);
    CHECK(F2.parts.size() == 2);
    CHECK(F2.parts[0].v_reps.size() == 1);
    CHECK(F2.parts[1].v_reps.size() == 1);

    PSingularFrame F4 = p_singular_frame(*fx::cyclic(4), 2);
    CHECK(F4.parts.size() == 4);
    for (const auto& part : F4.parts) CHECK(part.v_reps.size() == 1);
}

TEST_CASE("frame for S4 at p=2 has 5 pairs") {
    PSingularFrame F = p_singular_frame(*fx::sym(4), 2);
    size_t pairs = 0;
    for (const auto& part : F.parts) pairs += part.v_reps.size();
    CHECK(pairs == 5);
}

TEST_CASE("all_subgroups of the quaternion group") {
    auto Q8 = fx::quaternion8();
    auto subs = Q8->all_subgroups();
    // 1, Z, three C4, Q8 itself
    CHECK(subs.size() == 6);
}
