#include "blockdef/blocks.hpp"

#include <algorithm>
#include <map>

#include "blockdef/errors.hpp"

namespace blockdef {

std::string shape_name(TwoGroupShape s) {
    switch (s) {
        case TwoGroupShape::Cyclic: return "cyclic";
        case TwoGroupShape::KleinFour: return "klein-four";
        case TwoGroupShape::Dihedral: return "dihedral";
        case TwoGroupShape::Semidihedral: return "semidihedral";
        case TwoGroupShape::Quaternion: return "quaternion";
        case TwoGroupShape::Other: return "other";
    }
    return "other";
}

std::string rep_type_name(RepType t) {
    switch (t) {
        case RepType::Finite: return "finite";
        case RepType::Tame: return "tame";
        case RepType::Wild: return "wild";
    }
    return "wild";
}

TwoGroupShape classify_2group(const Group& D) {
    u64 n = D.order();
    if ((n & (n - 1)) != 0)
        throw input_error("NotA2Group", "order is not a power of two");
    if (n <= 2) return TwoGroupShape::Cyclic;
    int max_order = 0;
    int involutions = 0;
    int max_elt = -1;
    for (u64 g = 0; g < n; ++g) {
        int o = D.order_of((int)g);
        if (o > max_order) {
            max_order = o;
            max_elt = (int)g;
        }
        if (o == 2) ++involutions;
    }
    if ((u64)max_order == n) return TwoGroupShape::Cyclic;
    if (n == 4) return TwoGroupShape::KleinFour;
    if (involutions == 1) return TwoGroupShape::Quaternion;
    if ((u64)max_order != n / 2) return TwoGroupShape::Other;
    // cyclic subgroup of index 2: read off the conjugation exponent
    std::vector<int> C;
    {
        int cur = 0;
        for (int k = 0; k < max_order; ++k) {
            C.push_back(cur);
            cur = D.mul(cur, max_elt);
        }
    }
    std::vector<char> in_c(n, 0);
    for (int c : C) in_c[c] = 1;
    int t = -1;
    for (u64 g = 0; g < n; ++g)
        if (!in_c[g]) {
            t = (int)g;
            break;
        }
    int conj = D.conjugate(max_elt, t); // t x t^-1 = x^c
    int c_exp = -1;
    int cur = 0;
    for (int k = 0; k < max_order; ++k) {
        if (cur == conj) {
            c_exp = k;
            break;
        }
        cur = D.mul(cur, max_elt);
    }
    BLOCKDEF_CHECK_INTERNAL(c_exp >= 0, "InternalInconsistency",
                            "index-2 cyclic subgroup was not normal");
    int half = max_order / 2;
    if (c_exp == max_order - 1) return TwoGroupShape::Dihedral; // x -> x^-1, >1 involution
    if (c_exp == half - 1) return TwoGroupShape::Semidihedral;
    return TwoGroupShape::Other;
}

namespace {

RepType representation_type(u64 p, TwoGroupShape shape) {
    if (shape == TwoGroupShape::Cyclic) return RepType::Finite;
    if (p != 2) return RepType::Wild;
    switch (shape) {
        case TwoGroupShape::KleinFour:
        case TwoGroupShape::Dihedral:
        case TwoGroupShape::Semidihedral:
        case TwoGroupShape::Quaternion: return RepType::Tame;
        default: return RepType::Wild;
    }
}

// exact integer class-multiplication coefficients a_{ijk}
std::vector<std::vector<std::vector<i64>>> structure_constants(const Group& G) {
    const auto& cls = G.classes();
    int r = (int)cls.size();
    std::vector<std::vector<std::vector<i64>>> a(
        r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int zk = cls[k].rep;
            for (int x : cls[i].members) {
                int j = G.class_of(G.mul(G.inv(x), zk));
                a[i][j][k] += 1;
            }
        }
    return a;
}

} // namespace

BlockData block_data(const CharTable& table, const Simples& S, const DecompositionMatrix& D,
                     u64 p) {
    const Group& G = *table.G;
    const auto& cls = G.classes();
    int r = (int)cls.size();
    const GFTable* F = S.F;

    BlockData bd;
    bd.G = table.G;
    bd.p = p;
    bd.F = F;
    bd.block_of_char.assign(table.chars.size(), -1);
    bd.block_of_simple.assign(S.reps.size(), -1);

    // central characters mod p: omega_chi(K_i) = |C_i| chi(g_i) / chi(1)
    std::vector<std::vector<Fq>> central(table.chars.size(), std::vector<Fq>(r, Fq::zero(F)));
    for (size_t c = 0; c < table.chars.size(); ++c) {
        for (int i = 0; i < r; ++i) {
            Cyc v = Cyc((long)cls[i].size) * table.chars[c].values[i] *
                    Cyc(mpq_class(1, (long)table.chars[c].degree));
            central[c][i] = reduce_mod_p(v, F);
        }
    }

    // partition characters by equal reduced central characters
    for (size_t c = 0; c < table.chars.size(); ++c) {
        if (bd.block_of_char[c] >= 0) continue;
        int id = (int)bd.blocks.size();
        Block b;
        b.central_char = central[c];
        bd.block_of_char[c] = id;
        b.ordinary.push_back((int)c);
        for (size_t c2 = c + 1; c2 < table.chars.size(); ++c2) {
            if (bd.block_of_char[c2] < 0 && central[c2] == central[c]) {
                bd.block_of_char[c2] = id;
                b.ordinary.push_back((int)c2);
            }
        }
        bd.blocks.push_back(std::move(b));
    }

    // simples join the block of any character with a nonzero decomposition entry
    for (size_t nu = 0; nu < S.reps.size(); ++nu) {
        int found = -1;
        for (size_t mu = 0; mu < table.chars.size(); ++mu) {
            if (D.d[mu][nu] != 0) {
                int blk = bd.block_of_char[mu];
                BLOCKDEF_CHECK_INTERNAL(found < 0 || found == blk, "InternalInconsistency",
                                        "simple module met two blocks");
                found = blk;
            }
        }
        BLOCKDEF_CHECK_INTERNAL(found >= 0, "InternalInconsistency",
                                "simple module met no ordinary character");
        bd.block_of_simple[nu] = found;
        bd.blocks[found].brauer.push_back((int)nu);
    }

    // block idempotents in the class-sum basis:
    // e_B = sum_{chi in B} chi(1)/|G| * sum_i chi(g_i^-1) K_i
    for (auto& b : bd.blocks) {
        b.idempotent_class_coeffs.assign(r, Fq::zero(F));
        for (int i = 0; i < r; ++i) {
            Cyc coeff = Cyc::zero();
            for (int c : b.ordinary) {
                Cyc val = table.chars[c].values[cls[i].inverse_class];
                coeff += Cyc((long)table.chars[c].degree) * val;
            }
            coeff = coeff * Cyc(mpq_class(1, (long)G.order()));
            b.idempotent_class_coeffs[i] = reduce_mod_p(coeff, F);
        }
    }

    // exact idempotent identities in Z(kG)
    {
        auto a = structure_constants(G);
        auto mult = [&](const std::vector<Fq>& x, const std::vector<Fq>& y) {
            std::vector<Fq> z(r, Fq::zero(F));
            for (int i = 0; i < r; ++i) {
                if (x[i].is_zero()) continue;
                for (int j = 0; j < r; ++j) {
                    if (y[j].is_zero()) continue;
                    Fq f = x[i] * y[j];
                    for (int k = 0; k < r; ++k) {
                        if (a[i][j][k] != 0)
                            z[k] += f * Fq(F, F->from_residue((u64)(a[i][j][k] % (i64)p)));
                    }
                }
            }
            return z;
        };
        std::vector<Fq> total(r, Fq::zero(F));
        for (size_t x = 0; x < bd.blocks.size(); ++x) {
            const auto& ex = bd.blocks[x].idempotent_class_coeffs;
            auto sq = mult(ex, ex);
            BLOCKDEF_CHECK_INTERNAL(sq == ex, "InternalInconsistency",
                                    "block idempotent is not idempotent");
            bool nonzero = false;
            for (auto& v : ex)
                if (!v.is_zero()) nonzero = true;
            BLOCKDEF_CHECK_INTERNAL(nonzero, "InternalInconsistency", "block idempotent vanished");
            for (size_t y = x + 1; y < bd.blocks.size(); ++y) {
                auto prod = mult(ex, bd.blocks[y].idempotent_class_coeffs);
                for (auto& v : prod)
                    BLOCKDEF_CHECK_INTERNAL(v.is_zero(), "InternalInconsistency",
                                            "distinct block idempotents do not annihilate");
            }
            for (int i = 0; i < r; ++i) total[i] += ex[i];
        }
        for (int i = 0; i < r; ++i)
            BLOCKDEF_CHECK_INTERNAL(total[i] == (i == 0 ? Fq::one(F) : Fq::zero(F)),
                                    "InternalInconsistency", "block idempotents do not sum to 1");
    }

    // defects from character degrees: d = a - min nu_p(deg)
    int a_exp = valuation(G.order(), p);
    for (auto& b : bd.blocks) {
        int mn = a_exp;
        for (int c : b.ordinary) mn = std::min(mn, valuation((u64)table.chars[c].degree, p));
        b.defect = a_exp - mn;
    }

    // defect groups: maximal subgroups of a fixed Sylow passing the Brauer
    // homomorphism test Br_D(e_B) != 0
    Group P = G.sylow(p);
    auto subgroups = P.all_subgroups(); // ordered by size
    // element-coefficient view of each idempotent: coeff(g) = coeff(class(g))
    for (auto& b : bd.blocks) {
        std::vector<int> best{0};
        for (const auto& sub : subgroups) {
            // G-element indices of this subgroup
            std::vector<int> elems;
            for (int s : sub) elems.push_back(G.index_of(P.perm(s)));
            std::sort(elems.begin(), elems.end());
            // centralizer elements of the subgroup
            bool nonzero = false;
            for (u64 g = 0; g < G.order() && !nonzero; ++g) {
                bool central = true;
                for (int s : elems) {
                    if (G.mul((int)g, s) != G.mul(s, (int)g)) {
                        central = false;
                        break;
                    }
                }
                if (!central) continue;
                if (!b.idempotent_class_coeffs[G.class_of((int)g)].is_zero()) nonzero = true;
            }
            if (nonzero && elems.size() > best.size()) best = elems;
        }
        BLOCKDEF_CHECK_INTERNAL((u64)best.size() == pow_u64(p, (u64)b.defect),
                                "InternalInconsistency",
                                "defect group order disagrees with the character-theoretic defect");
        b.defect_group_elements = best;
        if (p == 2) {
            std::vector<Perm> ps;
            for (int e : best) ps.push_back(G.perm(e));
            Group Dg = Group::from_elements(G.degree(), std::move(ps));
            b.shape = classify_2group(Dg);
        } else {
            // only cyclic matters for the representation type at odd p
            bool cyclic = false;
            for (int e : best)
                if ((u64)G.order_of(e) == (u64)best.size()) cyclic = true;
            b.shape = cyclic || best.size() == 1 ? TwoGroupShape::Cyclic : TwoGroupShape::Other;
        }
        b.rep_type = representation_type(p, b.shape);
    }
    return bd;
}

int character_height(const CharTable& table, const BlockData& bd, int char_index, int block_index) {
    if (bd.block_of_char[char_index] != block_index)
        throw input_error("CharacterNotInBlock", "character does not belong to this block");
    int a_exp = valuation(table.G->order(), bd.p);
    int h = valuation((u64)table.chars[char_index].degree, bd.p) - a_exp +
            bd.blocks[block_index].defect;
    BLOCKDEF_CHECK_INTERNAL(h >= 0, "InternalInconsistency", "negative character height");
    return h;
}

int brauer_correspondent(const BlockData& g_blocks, const Group& H, const CharTable& h_table,
                         const BlockData& h_blocks, int h_block_index) {
    const Group& G = *g_blocks.G;
    const GFTable* F = g_blocks.F;
    const auto& gcls = G.classes();
    const auto& hcls = H.classes();
    // lambda_b on (C_i cap H)+ for each G-class i, evaluated in G's field
    const auto& hb = h_blocks.blocks[h_block_index];
    int chi = hb.ordinary[0];
    std::vector<Fq> lam(gcls.size(), Fq::zero(F));
    for (size_t j = 0; j < hcls.size(); ++j) {
        Cyc v = Cyc((long)hcls[j].size) * h_table.chars[chi].values[j] *
                Cyc(mpq_class(1, (long)h_table.chars[chi].degree));
        int g_elem = G.index_of(H.perm(hcls[j].rep));
        int gi = G.class_of(g_elem);
        lam[gi] += reduce_mod_p(v, F);
    }
    int found = -1;
    for (size_t b = 0; b < g_blocks.blocks.size(); ++b) {
        bool match = true;
        for (size_t i = 0; i < gcls.size(); ++i) {
            if (g_blocks.blocks[b].central_char[i] != lam[i]) {
                match = false;
                break;
            }
        }
        if (match) {
            BLOCKDEF_CHECK_INTERNAL(found < 0, "InternalInconsistency",
                                    "two blocks matched the induced central character");
            found = (int)b;
        }
    }
    if (found < 0)
        throw internal_error("NoCorrespondent", "no block matches the induced central character");
    return found;
}

} // namespace blockdef
