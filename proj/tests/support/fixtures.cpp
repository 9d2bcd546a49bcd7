#include "support/fixtures.hpp"

#include "blockdef/errors.hpp"
#include "blockdef/intutil.hpp"

namespace blockdef::fixtures {

namespace {

Perm cycle_perm(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p = perm_identity(degree);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            p[from] = (uint16_t)to;
        }
    }
    return p;
}

struct Mat2 {
    i64 a, b, c, d;
};

// permutation of the nonzero vectors of F_q^2 induced by v -> M v
Perm vec_action(int q, const Mat2& M) {
    int n = q * q - 1;
    Perm p(n);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            if (x == 0 && y == 0) continue;
            int idx = x * q + y - 1;
            i64 nx = ((M.a * x + M.b * y) % q + q) % q;
            i64 ny = ((M.c * x + M.d * y) % q + q) % q;
            p[idx] = (uint16_t)(nx * q + ny - 1);
        }
    return p;
}

// permutation of P^1(F_q) = {0..q-1, infinity=q} induced by a Moebius map
Perm proj_action(int q, const Mat2& M) {
    Perm p(q + 1);
    auto img = [&](bool inf, i64 x) -> int {
        i64 num_a, num_b;
        if (inf) {
            num_a = ((M.a % q) + q) % q;
            num_b = ((M.c % q) + q) % q;
        } else {
            num_a = ((M.a * x + M.b) % q + q) % q;
            num_b = ((M.c * x + M.d) % q + q) % q;
        }
        if (num_b == 0) return q; // infinity
        i64 inv = (i64)inv_mod((u64)num_b, (u64)q);
        return (int)(((num_a * inv) % q + q) % q);
    };
    for (int x = 0; x < q; ++x) p[x] = (uint16_t)img(false, x);
    p[q] = (uint16_t)img(true, 0);
    return p;
}

} // namespace

std::shared_ptr<Group> cyclic(int n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    return std::make_shared<Group>(Group::from_generators(n, {cycle_perm(n, {full})}));
}

std::shared_ptr<Group> klein_four() {
    return std::make_shared<Group>(Group::from_generators(
        4, {cycle_perm(4, {{1, 2}, {3, 4}}), cycle_perm(4, {{1, 3}, {2, 4}})}));
}

std::shared_ptr<Group> dihedral(int order) {
    int n = order / 2;
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = i + 1;
    // reflection fixing point 1: i+1 <-> n+1-(i-1) ... pair up 2<->n, 3<->n-1, ...
    std::vector<std::vector<int>> cyc;
    for (int i = 2; i <= n; ++i) {
        int j = n + 2 - i;
        if (i < j) cyc.push_back({i, j});
    }
    return std::make_shared<Group>(
        Group::from_generators(n, {cycle_perm(n, {rot}), cycle_perm(n, cyc)}));
}

std::shared_ptr<Group> quaternion8() {
    // points 1..8 are 1,-1,i,-i,j,-j,k,-k; generators act by left multiplication
    return std::make_shared<Group>(Group::from_generators(
        8, {cycle_perm(8, {{1, 3, 2, 4}, {5, 7, 6, 8}}),
            cycle_perm(8, {{1, 5, 2, 6}, {3, 8, 4, 7}})}));
}

std::shared_ptr<Group> sym(int n) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    return std::make_shared<Group>(
        Group::from_generators(n, {cycle_perm(n, {{1, 2}}), cycle_perm(n, {full})}));
}

std::shared_ptr<Group> alt5() {
    return std::make_shared<Group>(Group::from_generators(
        5, {cycle_perm(5, {{1, 2, 3, 4, 5}}), cycle_perm(5, {{1, 2, 3}})}));
}

std::shared_ptr<Group> sl2(int q) {
    Mat2 T{1, 1, 0, 1};
    Mat2 S{0, -1, 1, 0};
    return std::make_shared<Group>(
        Group::from_generators(q * q - 1, {vec_action(q, T), vec_action(q, S)}));
}

std::shared_ptr<Group> gl2(int q) {
    Mat2 T{1, 1, 0, 1};
    Mat2 S{0, -1, 1, 0};
    i64 lam = (i64)smallest_primitive_root((u64)q);
    Mat2 D{lam, 0, 0, 1};
    return std::make_shared<Group>(Group::from_generators(
        q * q - 1, {vec_action(q, T), vec_action(q, S), vec_action(q, D)}));
}

std::shared_ptr<Group> pgl2(int q) {
    Mat2 T{1, 1, 0, 1};
    Mat2 S{0, -1, 1, 0};
    i64 lam = (i64)smallest_primitive_root((u64)q);
    Mat2 D{lam, 0, 0, 1};
    return std::make_shared<Group>(Group::from_generators(
        q + 1, {proj_action(q, T), proj_action(q, S), proj_action(q, D)}));
}

} // namespace blockdef::fixtures
