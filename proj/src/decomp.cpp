#include "blockdef/decomp.hpp"

#include "blockdef/blocks.hpp"
#include "blockdef/cyc_linalg.hpp"
#include "blockdef/errors.hpp"

namespace blockdef {

std::vector<std::vector<i64>> DecompositionMatrix::cartan() const {
    size_t rows = d.size();
    size_t cols = rows ? d[0].size() : 0;
    std::vector<std::vector<i64>> c(cols, std::vector<i64>(cols, 0));
    for (size_t nu = 0; nu < cols; ++nu)
        for (size_t mu = 0; mu < cols; ++mu)
            for (size_t r = 0; r < rows; ++r) c[nu][mu] += d[r][nu] * d[r][mu];
    return c;
}

DecompositionMatrix decomposition_matrix(const CharTable& table, const Simples& S, u64 p) {
    const Group& G = *table.G;
    auto reg = p_regular_classes(G, p);
    size_t l = reg.size();
    BLOCKDEF_CHECK_INTERNAL(S.reps.size() == l, "InternalInconsistency",
                            "simple count does not match p-regular class count");
    // Brauer character table: rows = p-regular classes, cols = simples
    CycMatrix B = CycMatrix::zeros((int)l, (int)l, Cyc::zero());
    for (size_t j = 0; j < l; ++j)
        for (size_t nu = 0; nu < l; ++nu) B.at((int)j, (int)nu) = S.brauer[nu].values[j];

    DecompositionMatrix D;
    for (const auto& chi : table.chars) {
        CycMatrix rhs = CycMatrix::zeros((int)l, 1, Cyc::zero());
        for (size_t j = 0; j < l; ++j) rhs.at((int)j, 0) = chi.values[reg[j]];
        CycMatrix x = cyc_solve(B, rhs);
        std::vector<i64> row(l);
        for (size_t nu = 0; nu < l; ++nu) {
            const Cyc& v = x.at((int)nu, 0);
            if (!v.is_rational_integer() || v.rational_value() < 0)
                throw internal_error("NonIntegralSolution",
                                     "decomposition entry is not a non-negative integer");
            row[nu] = (i64)v.rational_value().get_num().get_si();
        }
        D.d.push_back(std::move(row));
    }
    return D;
}

GenDecompTable generalized_decomposition(const CharTable& table, u64 p, const MeatAxeOptions& opt) {
    const Group& G = *table.G;
    GenDecompTable T;
    T.p = p;
    T.frame = p_singular_frame(G, p);
    for (const auto& part : T.frame.parts) {
        GenDecompTable::Slice slice;
        slice.cent_simples = simples(part.cent, p, opt);
        size_t l = part.v_reps.size();
        BLOCKDEF_CHECK_INTERNAL(slice.cent_simples.reps.size() == l, "InternalInconsistency",
                                "centralizer simple count mismatch");
        CycMatrix B = CycMatrix::zeros((int)l, (int)l, Cyc::zero());
        for (size_t j = 0; j < l; ++j)
            for (size_t nu = 0; nu < l; ++nu)
                B.at((int)j, (int)nu) = slice.cent_simples.brauer[nu].values[j];
        u64 conductor_bound = pow_u64(p, (u64)part.alpha);
        for (const auto& chi : table.chars) {
            CycMatrix rhs = CycMatrix::zeros((int)l, 1, Cyc::zero());
            for (size_t j = 0; j < l; ++j) rhs.at((int)j, 0) = chi.values[part.pair_class[j]];
            CycMatrix x;
            try {
                x = cyc_solve(B, rhs);
            } catch (const Error&) {
                throw internal_error("SingularSystem",
                                     "centralizer Brauer characters were dependent");
            }
            std::vector<Cyc> row;
            for (size_t nu = 0; nu < l; ++nu) {
                Cyc v = x.at((int)nu, 0);
                if (!v.is_algebraic_integer())
                    throw internal_error("NonIntegralSolution",
                                         "generalized decomposition entry not integral");
                BLOCKDEF_CHECK_INTERNAL(v.lies_in_conductor(conductor_bound),
                                        "NonIntegralSolution",
                                        "entry outside the p-power cyclotomic field");
                row.push_back(std::move(v));
            }
            slice.d.push_back(std::move(row));
        }
        T.slices.push_back(std::move(slice));
    }
    return T;
}

VanishingReport verify_block_vanishing(const GenDecompTable& T, const BlockData& bd,
                                       const MeatAxeOptions& opt) {
    VanishingReport report;
    const CharTable* table = nullptr; // character indices follow bd.block_of_char
    (void)table;
    for (size_t i = 0; i < T.slices.size(); ++i) {
        const auto& part = T.frame.parts[i];
        const auto& slice = T.slices[i];
        // blocks of the centralizer and their correspondents in G
        CharTable cent_table = character_table(part.cent);
        DecompositionMatrix cent_D = decomposition_matrix(cent_table, slice.cent_simples, T.p);
        BlockData cent_blocks = block_data(cent_table, slice.cent_simples, cent_D, T.p);
        std::vector<int> corr(cent_blocks.blocks.size());
        for (size_t b = 0; b < cent_blocks.blocks.size(); ++b)
            corr[b] = brauer_correspondent(bd, *part.cent, cent_table, cent_blocks, (int)b);
        for (size_t mu = 0; mu < slice.d.size(); ++mu) {
            int chi_block = bd.block_of_char[mu];
            for (size_t nu = 0; nu < slice.d[mu].size(); ++nu) {
                int col_block = corr[cent_blocks.block_of_simple[nu]];
                if (col_block == chi_block) continue;
                bool vanish = slice.d[mu][nu].is_zero();
                report.checked.push_back({(int)i, (int)mu, (int)nu, vanish});
                if (!vanish) {
                    ++report.violations;
                    throw internal_error("VanishingViolated",
                                         "nonzero entry across non-corresponding blocks");
                }
            }
        }
    }
    (void)opt;
    return report;
}

void verify_reconstruction(const CharTable& table, const GenDecompTable& T) {
    for (size_t i = 0; i < T.slices.size(); ++i) {
        const auto& part = T.frame.parts[i];
        const auto& slice = T.slices[i];
        for (size_t mu = 0; mu < table.chars.size(); ++mu) {
            for (size_t j = 0; j < part.v_reps.size(); ++j) {
                Cyc sum = Cyc::zero();
                for (size_t nu = 0; nu < slice.d[mu].size(); ++nu)
                    sum += slice.d[mu][nu] * slice.cent_simples.brauer[nu].values[j];
                BLOCKDEF_CHECK_INTERNAL(sum == table.chars[mu].values[part.pair_class[j]],
                                        "InternalInconsistency",
                                        "generalized reconstruction identity failed");
            }
        }
    }
}

} // namespace blockdef
