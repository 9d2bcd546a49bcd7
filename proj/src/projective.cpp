#include "blockdef/projective.hpp"

#include "blockdef/homspace.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"

namespace blockdef {

std::vector<Fq> GroupAlgebra::mul(const std::vector<Fq>& a, const std::vector<Fq>& b) const {
    u64 n = G->order();
    std::vector<Fq> c(n, Fq::zero(F));
    for (u64 i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (u64 j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            c[G->mul((int)i, (int)j)] += a[i] * b[j];
        }
    }
    return c;
}

std::vector<Fq> GroupAlgebra::unit() const {
    std::vector<Fq> e(G->order(), Fq::zero(F));
    e[0] = Fq::one(F);
    return e;
}

Matrix<Fq> GroupAlgebra::act(const GFRep& V, const std::vector<Fq>& a) const {
    Matrix<Fq> M = Matrix<Fq>::zeros(V.dim(), V.dim(), Fq::zero(F));
    for (u64 g = 0; g < G->order(); ++g) {
        if (a[g].is_zero()) continue;
        const Matrix<Fq>& I = V.image((int)g);
        for (size_t k = 0; k < M.a.size(); ++k) M.a[k] += a[g] * I.a[k];
    }
    return M;
}

ProjectiveData projective_data(std::shared_ptr<const Group> G, u64 p, const MeatAxeOptions& opt,
                               u64 order_budget) {
    if (G->order() > order_budget)
        throw budget_error("ProjectiveCoverBudgetExceeded",
                           "group order beyond the projective-cover budget");
    ProjectiveData pd;
    pd.simple_list = simples(G, p, opt);
    const GFTable* F = pd.simple_list.F;
    pd.A = GroupAlgebra{G, F};
    u64 n = G->order();
    size_t r = pd.simple_list.reps.size();

    // radical = kernel of kG -> direct sum of End(S_i)
    int cols = 0;
    for (const auto& S : pd.simple_list.reps) cols += S.dim() * S.dim();
    Matrix<Fq> M = Matrix<Fq>::zeros((int)n, cols, Fq::zero(F));
    for (u64 g = 0; g < n; ++g) {
        int off = 0;
        for (const auto& S : pd.simple_list.reps) {
            const Matrix<Fq>& I = S.image((int)g);
            for (size_t k = 0; k < I.a.size(); ++k) M.at((int)g, off + (int)k) = I.a[k];
            off += S.dim() * S.dim();
        }
    }
    Matrix<Fq> Mk = M; // keep a copy for idempotent preimages
    Matrix<Fq> null = nullspace(transpose(Mk));
    for (int c = 0; c < null.cols; ++c) {
        std::vector<Fq> v(n, Fq::zero(F));
        for (u64 g = 0; g < n; ++g) v[g] = null.at((int)g, c);
        pd.radical.push_back(std::move(v));
    }

    // primitive idempotents: preimages of the (0,0) matrix units, then lifted
    // through the nilpotent radical by e <- 3e^2 - 2e^3
    int off = 0;
    for (size_t i = 0; i < r; ++i) {
        int di = pd.simple_list.reps[i].dim();
        Matrix<Fq> target = Matrix<Fq>::zeros(cols, 1, Fq::zero(F));
        target.at(off + 0, 0) = Fq::one(F); // E_00 inside factor i
        auto pre = try_solve(transpose(M), target);
        BLOCKDEF_CHECK_INTERNAL(pre.has_value(), "InternalInconsistency",
                                "matrix unit has no preimage; field does not split kG");
        std::vector<Fq> e(n, Fq::zero(F));
        for (u64 g = 0; g < n; ++g) e[g] = pre->at((int)g, 0);
        // lifting loop: quadratic convergence along the radical filtration
        for (int it = 0; it < 2 * (int)n + 4; ++it) {
            auto e2 = pd.A.mul(e, e);
            bool idem = e2 == e;
            if (idem) break;
            auto e3 = pd.A.mul(e2, e);
            // 3e^2 - 2e^3
            std::vector<Fq> next(n, Fq::zero(F));
            Fq three = Fq(F, F->from_residue(3));
            Fq two = Fq(F, F->from_residue(2));
            for (u64 g = 0; g < n; ++g) next[g] = three * e2[g] - two * e3[g];
            e = std::move(next);
        }
        BLOCKDEF_CHECK_INTERNAL(pd.A.mul(e, e) == e, "InternalInconsistency",
                                "idempotent lifting did not converge");
        pd.idempotents.push_back(e);
        off += di * di;
    }

    // projective indecomposables: e_i * kG as submodules of the regular module
    GFRep reg = GFRep::regular(G, F);
    for (size_t i = 0; i < r; ++i) {
        Matrix<Fq> seed = Matrix<Fq>::zeros(1, (int)n, Fq::zero(F));
        for (u64 g = 0; g < n; ++g) seed.at(0, (int)g) = pd.idempotents[i][g];
        Matrix<Fq> basis = spin_rows(seed, reg.gen_images());
        pd.pims.push_back(reg.submodule_action(basis));
        pd.pim_bases.push_back(std::move(basis));
    }
    return pd;
}

namespace {

// multiplicities of each simple in the head V / V·J
std::vector<int> top_multiplicities(const GFRep& V, const ProjectiveData& pd,
                                    const MeatAxeOptions& opt, GFRep* top_out,
                                    Matrix<Fq>* rad_rows_out) {
    const GFTable* F = V.field();
    int n = V.dim();
    // rows spanning V * J
    std::vector<std::vector<Fq>> rows;
    Matrix<Fq> stacked = Matrix<Fq>::zeros((int)pd.radical.size() * n, n, Fq::zero(F));
    int rr = 0;
    for (const auto& j : pd.radical) {
        Matrix<Fq> Jm = pd.A.act(V, j);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < n; ++c) stacked.at(rr, c) = Jm.at(i, c);
            ++rr;
        }
    }
    Matrix<Fq> R = stacked;
    auto pivots = rref(R);
    Matrix<Fq> rad_rows = Matrix<Fq>::zeros((int)pivots.size(), n, Fq::zero(F));
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int c = 0; c < n; ++c) rad_rows.at((int)i, c) = R.at((int)i, c);

    GFRep top = V.quotient_action(rad_rows);
    if (top_out) *top_out = top;
    if (rad_rows_out) *rad_rows_out = rad_rows;

    std::vector<int> mult(pd.simple_list.reps.size(), 0);
    if (top.dim() > 0) {
        CompositionSeries cs = chop(top, opt);
        for (size_t i = 0; i < cs.factors.size(); ++i) {
            bool found = false;
            for (size_t j = 0; j < pd.simple_list.brauer.size(); ++j) {
                if (pd.simple_list.brauer[j] == cs.brauer[i]) {
                    mult[j] += cs.multiplicities[i];
                    found = true;
                    break;
                }
            }
            BLOCKDEF_CHECK_INTERNAL(found, "InternalInconsistency",
                                    "top factor matched no known simple");
        }
    }
    return mult;
}

} // namespace

Cover projective_cover(const GFRep& V, const ProjectiveData& pd, const MeatAxeOptions& opt) {
    const GFTable* F = V.field();
    int n = V.dim();
    GFRep top;
    Matrix<Fq> rad_rows;
    std::vector<int> mult = top_multiplicities(V, pd, opt, &top, &rad_rows);

    // coordinates map V -> top: v = x * C, top coords are the trailing block
    Matrix<Fq> C = complete_basis(rad_rows, n, Fq::zero(F));
    Matrix<Fq> Ci = inverse(C);
    int k = rad_rows.rows;
    auto project_top = [&](const Matrix<Fq>& vrow) {
        Matrix<Fq> x = vrow * Ci;
        Matrix<Fq> t = Matrix<Fq>::zeros(1, n - k, Fq::zero(F));
        for (int j = k; j < n; ++j) t.at(0, j - k) = x.at(0, j);
        return t;
    };

    // assemble P = sum of pims and the covering map
    std::optional<GFRep> P;
    std::vector<Matrix<Fq>> pi_rows_blocks;
    for (size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        // image of the idempotent on top: rank = mult[i]
        Matrix<Fq> Etop = pd.A.act(top, pd.idempotents[i]);
        Matrix<Fq> EtopR = Etop;
        auto piv = rref(EtopR);
        BLOCKDEF_CHECK_INTERNAL((int)piv.size() == mult[i], "InternalInconsistency",
                                "idempotent rank disagrees with top multiplicity");
        // also the idempotent action on V, used to adjust the lifts
        Matrix<Fq> Ev = pd.A.act(V, pd.idempotents[i]);
        for (int copy = 0; copy < mult[i]; ++copy) {
            // basis vector of top * e (row `copy` of the echelonized image)
            Matrix<Fq> t = Matrix<Fq>::zeros(1, top.dim(), Fq::zero(F));
            for (int j = 0; j < top.dim(); ++j) t.at(0, j) = EtopR.at(copy, j);
            // lift to v in V with projection t, then force v into V*e
            // solve x * (C-free rows...) : pick any preimage via the top block of C
            Matrix<Fq> x = Matrix<Fq>::zeros(1, n, Fq::zero(F));
            for (int j = 0; j < top.dim(); ++j) x.at(0, k + j) = t.at(0, j);
            Matrix<Fq> v = x * C;
            v = v * Ev; // now v in V*e, projection unchanged (t fixed by e)
            BLOCKDEF_CHECK_INTERNAL(project_top(v) == t, "InternalInconsistency",
                                    "idempotent adjustment moved the top image");
            // map e*kG -> V: basis row b (algebra element) -> v * rho_V(b)
            const Matrix<Fq>& basis = pd.pim_bases[i];
            Matrix<Fq> rows = Matrix<Fq>::zeros(basis.rows, n, Fq::zero(F));
            for (int bi = 0; bi < basis.rows; ++bi) {
                std::vector<Fq> elem(V.group().order(), Fq::zero(F));
                for (u64 g = 0; g < V.group().order(); ++g) elem[g] = basis.at(bi, (int)g);
                Matrix<Fq> img = pd.A.act(V, elem);
                Matrix<Fq> vrow = v * img;
                for (int c = 0; c < n; ++c) rows.at(bi, c) = vrow.at(0, c);
            }
            pi_rows_blocks.push_back(std::move(rows));
            P = P ? P->direct_sum_with(pd.pims[i]) : pd.pims[i];
        }
    }
    BLOCKDEF_CHECK_INTERNAL(P.has_value(), "InternalInconsistency", "module with empty top");

    int pdim = P->dim();
    Matrix<Fq> pi = Matrix<Fq>::zeros(pdim, n, Fq::zero(F));
    int row = 0;
    for (const auto& blk : pi_rows_blocks) {
        for (int i = 0; i < blk.rows; ++i, ++row)
            for (int c = 0; c < n; ++c) pi.at(row, c) = blk.at(i, c);
    }
    BLOCKDEF_CHECK_INTERNAL(rank(pi) == n, "InternalInconsistency", "cover map not surjective");

    Cover cover;
    cover.P = *P;
    cover.pi = pi;
    cover.omega_rows = transpose(nullspace(transpose(pi))); // rows x with x * pi = 0
    // sort kernel rows into echelon for determinism
    {
        Matrix<Fq> R = cover.omega_rows;
        rref(R);
        cover.omega_rows = R;
    }
    if (cover.omega_rows.rows > 0)
        cover.omega = P->submodule_action(cover.omega_rows);
    else
        cover.omega = GFRep::trivial(V.group_ptr(), F, 0);
    return cover;
}

int ext1_dim(const GFRep& V, const GFRep& W, const ProjectiveData& pd, const MeatAxeOptions& opt) {
    Cover cover = projective_cover(V, pd, opt);
    if (cover.omega_rows.rows == 0) return 0;
    auto hom_omega = hom_space(cover.omega, W);
    if (hom_omega.empty()) return 0;
    auto hom_p = hom_space(cover.P, W);
    // restriction: X (P.dim x W.dim) -> omega_rows * X
    const GFTable* F = V.field();
    int wd = W.dim();
    int od = cover.omega.dim();
    Matrix<Fq> span = Matrix<Fq>::zeros((int)hom_p.size(), od * wd, Fq::zero(F));
    for (size_t i = 0; i < hom_p.size(); ++i) {
        Matrix<Fq> restr = cover.omega_rows * hom_p[i];
        for (int a = 0; a < od; ++a)
            for (int b = 0; b < wd; ++b) span.at((int)i, a * wd + b) = restr.at(a, b);
    }
    return (int)hom_omega.size() - rank(std::move(span));
}

int ext2_dim(const GFRep& V, const GFRep& W, const ProjectiveData& pd, const MeatAxeOptions& opt) {
    Cover cover = projective_cover(V, pd, opt);
    if (cover.omega.dim() == 0) return 0;
    return ext1_dim(cover.omega, W, pd, opt);
}

} // namespace blockdef
