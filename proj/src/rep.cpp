#include "blockdef/rep.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"

namespace blockdef {

GFRep::GFRep(std::shared_ptr<const Group> G, const GFTable* F, std::vector<Matrix<Fq>> gen_images)
    : G_(std::move(G)), F_(F), gens_(std::move(gen_images)) {
    BLOCKDEF_CHECK_INTERNAL(gens_.size() == G_->generator_ids().size(), "InternalInconsistency",
                            "one matrix per group generator required");
    n_ = gens_.empty() ? 1 : gens_[0].rows;
    cache_.resize(G_->order());
}

const Matrix<Fq>& GFRep::image(int g) const {
    if (!cache_[g]) {
        if (g == 0) {
            cache_[g] = std::make_shared<Matrix<Fq>>(Matrix<Fq>::identity(n_, Fq::zero(F_)));
        } else {
            const Matrix<Fq>& par = image(G_->bfs_parent(g));
            cache_[g] = std::make_shared<Matrix<Fq>>(par * gens_[G_->bfs_gen(g)]);
        }
    }
    return *cache_[g];
}

void GFRep::verify(Rng& rng, int samples) const {
    u64 n = G_->order();
    auto check_pair = [&](int a, int b) {
        BLOCKDEF_CHECK_INTERNAL(image(a) * image(b) == image(G_->mul(a, b)), "InternalInconsistency",
                                "matrix images violate the multiplication table");
    };
    if (n <= 512) {
        for (u64 a = 0; a < n; ++a)
            for (u64 b = 0; b < n; ++b) check_pair((int)a, (int)b);
    } else {
        for (int i = 0; i < samples; ++i) check_pair((int)rng.below(n), (int)rng.below(n));
    }
}

GFRep GFRep::trivial(std::shared_ptr<const Group> G, const GFTable* F, int dim) {
    std::vector<Matrix<Fq>> gens(G->generator_ids().size(), Matrix<Fq>::identity(dim, Fq::zero(F)));
    return GFRep(std::move(G), F, std::move(gens));
}

GFRep GFRep::permutation(std::shared_ptr<const Group> G, const GFTable* F) {
    int d = G->degree();
    std::vector<Matrix<Fq>> gens;
    for (int gid : G->generator_ids()) {
        const Perm& p = G->perm(gid);
        Matrix<Fq> m = Matrix<Fq>::zeros(d, d, Fq::zero(F));
        for (int i = 0; i < d; ++i) m.at(i, p[i]) = Fq::one(F);
        gens.push_back(std::move(m));
    }
    return GFRep(std::move(G), F, std::move(gens));
}

GFRep GFRep::regular(std::shared_ptr<const Group> G, const GFTable* F) {
    u64 n = G->order();
    std::vector<Matrix<Fq>> gens;
    for (int gid : G->generator_ids()) {
        Matrix<Fq> m = Matrix<Fq>::zeros((int)n, (int)n, Fq::zero(F));
        for (u64 h = 0; h < n; ++h) m.at((int)h, G->mul((int)h, gid)) = Fq::one(F);
        gens.push_back(std::move(m));
    }
    return GFRep(std::move(G), F, std::move(gens));
}

GFRep GFRep::from_matrices(std::shared_ptr<const Group> G, std::vector<Matrix<Fq>> gen_images) {
    BLOCKDEF_CHECK_INTERNAL(!gen_images.empty() || G->generator_ids().empty(),
                            "InternalInconsistency", "matrices required for each generator");
    const GFTable* F = gen_images.empty() ? GFTable::get(2, 1) : gen_images[0].proto().F;
    return GFRep(std::move(G), F, std::move(gen_images));
}

GFRep GFRep::tensor(const GFRep& other) const {
    std::vector<Matrix<Fq>> gens;
    for (size_t i = 0; i < gens_.size(); ++i) gens.push_back(kron(gens_[i], other.gens_[i]));
    return GFRep(G_, F_, std::move(gens));
}

GFRep GFRep::direct_sum_with(const GFRep& other) const {
    std::vector<Matrix<Fq>> gens;
    for (size_t i = 0; i < gens_.size(); ++i) gens.push_back(direct_sum(gens_[i], other.gens_[i]));
    return GFRep(G_, F_, std::move(gens));
}

GFRep GFRep::conjugated(const Matrix<Fq>& T) const {
    Matrix<Fq> Ti = inverse(T);
    std::vector<Matrix<Fq>> gens;
    for (const auto& g : gens_) gens.push_back(T * g * Ti);
    return GFRep(G_, F_, std::move(gens));
}

GFRep GFRep::base_change(const GFTable* bigger) const {
    std::vector<Matrix<Fq>> gens;
    for (const auto& g : gens_) {
        Matrix<Fq> m = Matrix<Fq>::zeros(g.rows, g.cols, Fq::zero(bigger));
        for (size_t i = 0; i < g.a.size(); ++i) m.a[i] = embed(g.a[i], bigger);
        gens.push_back(std::move(m));
    }
    return GFRep(G_, bigger, std::move(gens));
}

GFRep GFRep::restrict_to(std::shared_ptr<const Group> H) const {
    std::vector<Matrix<Fq>> gens;
    for (int gid : H->generator_ids()) {
        int g_in_G = G_->index_of(H->perm(gid));
        BLOCKDEF_CHECK_INTERNAL(g_in_G >= 0, "InternalInconsistency", "not a subgroup");
        gens.push_back(image(g_in_G));
    }
    return GFRep(std::move(H), F_, std::move(gens));
}

GFRep GFRep::submodule_action(const Matrix<Fq>& B) const {
    Matrix<Fq> Bt = transpose(B);
    std::vector<Matrix<Fq>> gens;
    for (const auto& g : gens_) {
        Matrix<Fq> rhs = transpose(B * g);
        auto A = try_solve(Bt, rhs);
        BLOCKDEF_CHECK_INTERNAL(A.has_value(), "InternalInconsistency",
                                "row space is not invariant");
        gens.push_back(transpose(*A));
    }
    return GFRep(G_, F_, std::move(gens));
}

GFRep GFRep::quotient_action(const Matrix<Fq>& B) const {
    int k = B.rows;
    Matrix<Fq> C = complete_basis(B, n_, Fq::zero(F_));
    Matrix<Fq> Ci = inverse(C);
    std::vector<Matrix<Fq>> gens;
    // rows of C are basis vectors: v = x * C, and v g = (x * C g C^-1) C, so
    // coordinates transform by C g C^-1; the invariant block sits top-left and
    // the quotient action is the lower-right block
    for (const auto& g : gens_) {
        Matrix<Fq> T = C * g * Ci;
        Matrix<Fq> Q = Matrix<Fq>::zeros(n_ - k, n_ - k, Fq::zero(F_));
        for (int i = k; i < n_; ++i)
            for (int j = k; j < n_; ++j) Q.at(i - k, j - k) = T.at(i, j);
        gens.push_back(std::move(Q));
    }
    return GFRep(G_, F_, std::move(gens));
}

Matrix<Fq> spin_rows(const Matrix<Fq>& seed_rows, const std::vector<Matrix<Fq>>& gens) {
    int n = seed_rows.cols;
    Fq z = Fq::zero(seed_rows.proto().F);
    std::vector<std::vector<Fq>> rows; // reduced echelon rows
    std::vector<int> pivots;
    auto reduce_insert = [&](std::vector<Fq> v) -> bool {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!v[pivots[r]].is_zero()) {
                Fq f = v[pivots[r]];
                for (int j = 0; j < n; ++j) v[j] -= f * rows[r][j];
            }
        }
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero()) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        Fq iv = Fq::one(z.F) / v[pc];
        for (int j = 0; j < n; ++j) v[j] = v[j] * iv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r][pc].is_zero()) {
                Fq f = rows[r][pc];
                for (int j = 0; j < n; ++j) rows[r][j] -= f * v[j];
            }
        }
        rows.push_back(std::move(v));
        pivots.push_back(pc);
        return true;
    };

    std::vector<std::vector<Fq>> queue;
    for (int i = 0; i < seed_rows.rows; ++i) {
        std::vector<Fq> v(n, z);
        for (int j = 0; j < n; ++j) v[j] = seed_rows.at(i, j);
        if (reduce_insert(v)) queue.push_back(rows.back());
    }
    for (size_t head = 0; head < queue.size() && (int)rows.size() < n; ++head) {
        for (const auto& g : gens) {
            std::vector<Fq> w(n, z);
            const auto& v = queue[head];
            for (int i = 0; i < n; ++i) {
                if (v[i].is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (!g.at(i, j).is_zero()) w[j] += v[i] * g.at(i, j);
                }
            }
            if (reduce_insert(std::move(w))) queue.push_back(rows.back());
        }
    }
    std::vector<int> order(rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots[a] < pivots[b]; });
    Matrix<Fq> out = Matrix<Fq>::zeros((int)rows.size(), n, z);
    for (size_t i = 0; i < order.size(); ++i)
        for (int j = 0; j < n; ++j) out.at((int)i, j) = rows[order[i]][j];
    return out;
}

Matrix<Fq> complete_basis(const Matrix<Fq>& rows, int ambient_dim, Fq proto) {
    Fq z = Fq::zero(proto.F);
    Matrix<Fq> R = rows;
    auto pivots = rref(R);
    BLOCKDEF_CHECK_INTERNAL((int)pivots.size() == rows.rows, "InternalInconsistency",
                            "dependent rows passed to complete_basis");
    std::vector<char> used(ambient_dim, 0);
    for (int p : pivots) used[p] = 1;
    Matrix<Fq> C = Matrix<Fq>::zeros(ambient_dim, ambient_dim, z);
    for (int i = 0; i < R.rows; ++i)
        for (int j = 0; j < ambient_dim; ++j) C.at(i, j) = R.at(i, j);
    int r = R.rows;
    for (int j = 0; j < ambient_dim; ++j) {
        if (used[j]) continue;
        C.at(r, j) = ring_one(z);
        ++r;
    }
    return C;
}

} // namespace blockdef
