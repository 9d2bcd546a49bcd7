#include "blockdef/homspace.hpp"

#include "blockdef/errors.hpp"

namespace blockdef {

std::vector<Matrix<Fq>> hom_space(const GFRep& V, const GFRep& W) {
    BLOCKDEF_CHECK_INTERNAL(V.field() == W.field() && &V.group() == &W.group(),
                            "InternalInconsistency", "hom space needs matching group and field");
    const GFTable* F = V.field();
    int nv = V.dim(), nw = W.dim();
    size_t ngen = V.gen_images().size();
    // unknowns: X flattened row-major, constraints per generator:
    // rho_V(g) X - X rho_W(g) = 0
    Matrix<Fq> sys = Matrix<Fq>::zeros((int)(ngen * nv * nw), nv * nw, Fq::zero(F));
    int row = 0;
    for (size_t t = 0; t < ngen; ++t) {
        const Matrix<Fq>& A = V.gen_images()[t];
        const Matrix<Fq>& B = W.gen_images()[t];
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nw; ++j) {
                // coefficient of X_{kj} is A_{ik}; of X_{il} is -B_{lj}
                for (int k = 0; k < nv; ++k) sys.at(row, k * nw + j) += A.at(i, k);
                for (int l = 0; l < nw; ++l) sys.at(row, i * nw + l) -= B.at(l, j);
                ++row;
            }
    }
    Matrix<Fq> null = nullspace(std::move(sys));
    std::vector<Matrix<Fq>> out;
    for (int c = 0; c < null.cols; ++c) {
        Matrix<Fq> X = Matrix<Fq>::zeros(nv, nw, Fq::zero(F));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nw; ++j) X.at(i, j) = null.at(i * nw + j, c);
        out.push_back(std::move(X));
    }
    return out;
}

int projective_end_dim(const GFRep& V) {
    const GFTable* F = V.field();
    int n = V.dim();
    const Group& G = V.group();
    // vec of X -> sum_g rho(g) X rho(g)^-1 as an n^2 x n^2 operator
    Matrix<Fq> T = Matrix<Fq>::zeros(n * n, n * n, Fq::zero(F));
    for (u64 g = 0; g < G.order(); ++g) {
        const Matrix<Fq>& A = V.image((int)g);
        const Matrix<Fq>& Ai = V.image(G.inv((int)g));
        // (A X Ai)_{il} = sum_{kj} A_{ik} X_{kj} Ai_{jl}
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (A.at(i, k).is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        T.at(i * n + l, k * n + j) += A.at(i, k) * Ai.at(j, l);
            }
    }
    return rank(std::move(T));
}

int stable_end(const GFRep& V) {
    return (int)end_ring(V).size() - projective_end_dim(V);
}

} // namespace blockdef
