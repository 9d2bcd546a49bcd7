#include "blockdef/chartable.hpp"

#include <algorithm>
#include <cmath>

#include "blockdef/errors.hpp"
#include "blockdef/matrix.hpp"
#include "blockdef/meataxe.hpp"
#include "blockdef/psingular.hpp"

namespace blockdef {

namespace {

// class multiplication matrix M_i with (M_i)_{jk} = #{x in C_i : x^-1 z_k in C_j}
Matrix<Fq> class_matrix(const Group& G, int i, const GFTable* F) {
    const auto& cls = G.classes();
    int r = (int)cls.size();
    Matrix<Fq> M = Matrix<Fq>::zeros(r, r, Fq::zero(F));
    for (int k = 0; k < r; ++k) {
        int zk = cls[k].rep;
        for (int x : cls[i].members) {
            int j = G.class_of(G.mul(G.inv(x), zk));
            M.at(j, k) += Fq::one(F);
        }
    }
    return M;
}

} // namespace

Cyc character_inner(const Group& G, const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    const auto& cls = G.classes();
    Cyc s = Cyc::zero();
    for (size_t i = 0; i < cls.size(); ++i)
        s += Cyc((long)cls[i].size) * a[i] * b[i].conj();
    return s * Cyc(mpq_class(1, (long)G.order()));
}

CharTable character_table(std::shared_ptr<const Group> Gp) {
    const Group& G = *Gp;
    const auto& cls = G.classes();
    int r = (int)cls.size();
    u64 m = G.exponent();
    u64 n = G.order();

    // working prime: 1 mod exp(G), and large enough that degrees and
    // eigenvalue multiplicities are determined by their residues
    u64 ell = m + 1;
    double bound = 2.0 * std::sqrt((double)n) + 1;
    while (ell <= (u64)bound || !is_prime(ell) || (ell - 1) % m != 0) ++ell;
    const GFTable* F = GFTable::get(ell, 1);

    // split the common eigenvector space of the class matrices
    std::vector<Matrix<Fq>> spaces{Matrix<Fq>::identity(r, Fq::zero(F))}; // columns
    for (int i = 1; i < r; ++i) {
        bool all_one = true;
        for (const auto& S : spaces)
            if (S.cols > 1) all_one = false;
        if (all_one) break;
        Matrix<Fq> Mi = class_matrix(G, i, F);
        std::vector<Matrix<Fq>> next;
        for (const auto& B : spaces) {
            if (B.cols == 1) {
                next.push_back(B);
                continue;
            }
            Matrix<Fq> MiB = Mi * B;
            auto A = try_solve(B, MiB);
            BLOCKDEF_CHECK_INTERNAL(A.has_value(), "InternalInconsistency",
                                    "class matrix left an eigenspace");
            GFPoly mp = matrix_min_poly(*A);
            Rng rng(1);
            std::vector<Fq> lams = roots(mp, rng);
            int covered = 0;
            for (Fq lam : lams) {
                Matrix<Fq> Alam = *A;
                for (int d = 0; d < Alam.rows; ++d) Alam.at(d, d) -= lam;
                Matrix<Fq> K = nullspace(Alam);
                if (K.cols == 0) continue;
                next.push_back(B * K);
                covered += K.cols;
            }
            BLOCKDEF_CHECK_INTERNAL(covered == B.cols, "InternalInconsistency",
                                    "class matrix restriction was not diagonalizable");
        }
        spaces = std::move(next);
    }
    BLOCKDEF_CHECK_INTERNAL((int)spaces.size() == r, "InternalInconsistency",
                            "eigenvector separation incomplete");

    // fixed primitive m-th root of unity mod ell
    Fq w = Fq::generator(F).pow((ell - 1) / m);

    CharTable table;
    table.G = Gp;
    for (const auto& S : spaces) {
        // normalized central character: omega(identity class) = 1
        std::vector<Fq> omega(r);
        Fq lead = S.at(0, 0);
        BLOCKDEF_CHECK_INTERNAL(!lead.is_zero(), "InternalInconsistency",
                                "eigenvector vanishes at the identity class");
        Fq il = Fq::one(F) / lead;
        for (int i = 0; i < r; ++i) omega[i] = S.at(i, 0) * il;

        // degree from the first orthogonality relation
        Fq s = Fq::zero(F);
        for (int i = 0; i < r; ++i) {
            Fq inv_ci = Fq::one(F) / Fq(F, F->from_residue(cls[i].size % ell));
            s += omega[i] * omega[cls[i].inverse_class] * inv_ci;
        }
        Fq d2 = Fq(F, F->from_residue(n % ell)) / s;
        i64 degree = -1;
        for (i64 d = 1; (u64)(d * d) <= n; ++d) {
            if (Fq(F, F->from_residue((u64)((d * d) % (i64)ell))) == d2) {
                degree = d;
                break;
            }
        }
        BLOCKDEF_CHECK_INTERNAL(degree > 0, "InternalInconsistency",
                                "no admissible degree for an eigenvector");

        // residues of the character values
        std::vector<Fq> theta(r);
        Fq deg_f = Fq(F, F->from_residue((u64)degree % ell));
        for (int i = 0; i < r; ++i) {
            Fq inv_ci = Fq::one(F) / Fq(F, F->from_residue(cls[i].size % ell));
            theta[i] = omega[i] * deg_f * inv_ci;
        }

        // exact values by inverse discrete Fourier transform over power maps
        Character chi;
        chi.degree = degree;
        for (int i = 0; i < r; ++i) {
            u64 d = (u64)cls[i].element_order;
            Fq z = w.pow(m / d);
            Fq invd = Fq::one(F) / Fq(F, F->from_residue(d % ell));
            Cyc value = Cyc::zero();
            i64 total = 0;
            for (u64 sdx = 0; sdx < d; ++sdx) {
                Fq c = Fq::zero(F);
                for (u64 t = 0; t < d; ++t) {
                    Fq zp = z.pow(((d - sdx) * t) % d); // z^(-s t)
                    c += theta[G.class_of_power(i, (i64)t)] * zp;
                }
                c *= invd;
                // c is a genuine multiplicity in [0, degree]
                u64 cval = c.is_zero() ? 0 : 0;
                if (!c.is_zero()) {
                    // recover the integer residue from the prime-field element
                    cval = c.coeffs()[0];
                }
                BLOCKDEF_CHECK_INTERNAL(cval <= (u64)degree, "InternalInconsistency",
                                        "eigenvalue multiplicity out of range");
                total += (i64)cval;
                if (cval) value += Cyc((long)cval) * Cyc::root_of_unity(d, sdx);
            }
            BLOCKDEF_CHECK_INTERNAL(total == degree, "InternalInconsistency",
                                    "eigenvalue multiplicities do not sum to the degree");
            chi.values.push_back(value);
        }
        table.chars.push_back(std::move(chi));
    }

    // canonical row order
    std::sort(table.chars.begin(), table.chars.end(), [](const Character& a, const Character& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t i = 0; i < a.values.size(); ++i) {
            int c = Cyc::compare(a.values[i], b.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    // exact verification: degrees, row and column orthogonality
    mpz_class degsum = 0;
    for (const auto& chi : table.chars) degsum += mpz_class((long)chi.degree) * (long)chi.degree;
    BLOCKDEF_CHECK_INTERNAL(degsum == mpz_class((unsigned long)n), "InternalInconsistency",
                            "degree squares do not sum to the group order");
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            Cyc ip = character_inner(G, table.chars[a].values, table.chars[b].values);
            BLOCKDEF_CHECK_INTERNAL(ip == (a == b ? Cyc::one() : Cyc::zero()),
                                    "InternalInconsistency", "row orthogonality failed");
        }
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Cyc s2 = Cyc::zero();
            for (const auto& chi : table.chars) s2 += chi.values[i] * chi.values[j].conj();
            Cyc expect = i == j ? Cyc((long)cls[i].centralizer_order) : Cyc::zero();
            BLOCKDEF_CHECK_INTERNAL(s2 == expect, "InternalInconsistency",
                                    "column orthogonality failed");
        }
    return table;
}

std::vector<int> galois_orbits_padic(const CharTable& table, u64 p) {
    const Group& G = *table.G;
    u64 N = G.exponent();
    u64 pa = p_part(N, p);
    u64 mprime = N / pa;
    size_t k = table.chars.size();
    std::vector<int> orbit(k, -1);
    int next_orbit = 0;
    for (size_t i = 0; i < k; ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = next_orbit;
        if (pa > 1) {
            for (u64 c = 1; c < pa; ++c) {
                if (gcd_u64(c, p) != 1) continue;
                // e = c mod p^a, e = 1 mod m'
                u64 e;
                if (mprime == 1) {
                    e = c;
                } else {
                    u64 q1 = inv_mod(mprime % pa, pa);
                    u64 q2 = inv_mod(pa % mprime, mprime);
                    e = (c * (mprime * q1 % N) % N + 1 * (pa * q2 % N) % N) % N;
                }
                std::vector<Cyc> img;
                for (const auto& v : table.chars[i].values) img.push_back(v.galois(e));
                for (size_t j = 0; j < k; ++j) {
                    if (orbit[j] < 0 && table.chars[j].values == img) orbit[j] = orbit[i];
                }
            }
        }
        ++next_orbit;
    }
    return orbit;
}

std::vector<Cyc> restrict_p_regular(const Group& G, const std::vector<Cyc>& values, u64 p) {
    std::vector<Cyc> out;
    for (int i : p_regular_classes(G, p)) out.push_back(values[i]);
    return out;
}

} // namespace blockdef
