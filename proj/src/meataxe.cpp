#include "blockdef/meataxe.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"
#include "blockdef/gfpoly.hpp"

namespace blockdef {

namespace {

// Order polynomial of a single vector under A: the monic generator of the
// relations satisfied by v, vA, vA^2, ...
GFPoly order_poly(const Matrix<Fq>& A, std::vector<Fq> v) {
    const GFTable* F = A.proto().F;
    int n = A.rows;
    std::vector<std::vector<Fq>> rows; // reduced echelon of the Krylov chain
    std::vector<int> pivots;
    std::vector<std::vector<Fq>> combos; // rows[r] as polynomial coefficients in v

    auto matvec = [&](const std::vector<Fq>& x) {
        std::vector<Fq> nx(n, Fq::zero(F));
        for (int i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!A.at(i, j).is_zero()) nx[j] += x[i] * A.at(i, j);
        }
        return nx;
    };

    for (int power = 0;; ++power) {
        std::vector<Fq> w = v;
        std::vector<Fq> wc(power + 1, Fq::zero(F));
        wc[power] = Fq::one(F);
        for (size_t r = 0; r < rows.size(); ++r) {
            Fq f = w[pivots[r]];
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) w[j] -= f * rows[r][j];
            for (size_t s = 0; s < combos[r].size(); ++s) wc[s] -= f * combos[r][s];
        }
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (!w[j].is_zero()) {
                pc = j;
                break;
            }
        if (pc < 0) {
            GFPoly g(F, wc);
            g.make_monic();
            return g;
        }
        Fq iv = Fq::one(F) / w[pc];
        for (int j = 0; j < n; ++j) w[j] = w[j] * iv;
        for (auto& c : wc) c = c * iv;
        // full reduction keeps single-pass elimination valid
        for (size_t r = 0; r < rows.size(); ++r) {
            Fq f = rows[r][pc];
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) rows[r][j] -= f * w[j];
            if (combos[r].size() < wc.size()) combos[r].resize(wc.size(), Fq::zero(F));
            for (size_t s = 0; s < wc.size(); ++s) combos[r][s] -= f * wc[s];
        }
        rows.push_back(std::move(w));
        pivots.push_back(pc);
        combos.push_back(std::move(wc));
        v = matvec(v);
    }
}

// lcm of vector order polynomials: exact over a spanning seed set for small
// matrices; for large ones a few seeds give a divisor of the minimal
// polynomial whose irreducible factors are genuine min-poly factors, which is
// all the splitting search needs
GFPoly min_poly_impl(const Matrix<Fq>& A) {
    const GFTable* F = A.proto().F;
    int n = A.rows;
    GFPoly m = GFPoly::constant(F, Fq::one(F));
    int seeds = n <= 16 ? n : 4;
    for (int s = 0; s < seeds; ++s) {
        std::vector<Fq> v(n, Fq::zero(F));
        v[s] = Fq::one(F);
        if (s == seeds - 1 && n > 4) {
            // one spread-out seed in addition to the leading basis vectors
            for (int j = 0; j < n; ++j) v[j] = Fq::one(F);
        }
        GFPoly g = order_poly(A, std::move(v));
        GFPoly gg = gcd(m, g);
        m = divmod(m * g, gg).first;
        if (m.degree() == n) break;
    }
    return m;
}

Matrix<Fq> eval_poly_impl(const GFPoly& f, const Matrix<Fq>& A) {
    const GFTable* F = A.proto().F;
    Matrix<Fq> R = Matrix<Fq>::zeros(A.rows, A.rows, Fq::zero(F));
    for (int i = f.degree(); i >= 0; --i) {
        R = R * A;
        if (!f.c[i].is_zero()) {
            for (int d = 0; d < A.rows; ++d) R.at(d, d) += f.c[i];
        }
    }
    return R;
}

// left nullspace as rows (vectors v with v * M = 0)
Matrix<Fq> left_nullspace(const Matrix<Fq>& M) {
    return transpose(nullspace(transpose(M)));
}

struct SplitResult {
    bool split = false;
    Matrix<Fq> submodule; // echelon rows
};

// random algebra element generator: words in the generator images
struct AlgebraSampler {
    std::vector<Matrix<Fq>> pool;
    Rng rng;
    const GFTable* F;

    AlgebraSampler(const GFRep& V, u64 seed) : rng(seed), F(V.field()) {
        if (V.gen_images().empty())
            pool.push_back(Matrix<Fq>::identity(V.dim(), Fq::zero(V.field())));
        for (const auto& g : V.gen_images()) pool.push_back(g);
    }

    Matrix<Fq> next() {
        // extend the pool with a random product, then return a random
        // two-term linear combination; covers the group algebra generically
        const Matrix<Fq>& a = pool[rng.below(pool.size())];
        const Matrix<Fq>& b = pool[rng.below(pool.size())];
        Matrix<Fq> prod = a * b;
        if (pool.size() < 24) pool.push_back(prod);
        const Matrix<Fq>& c = pool[rng.below(pool.size())];
        auto rand_scalar = [&]() {
            u64 k = rng.below(F->q());
            return k == 0 ? Fq::zero(F) : Fq(F, (int32_t)(k - 1));
        };
        Fq alpha = rand_scalar(), beta = rand_scalar();
        Matrix<Fq> out = prod;
        for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = alpha * prod.a[i] + beta * c.a[i];
        return out;
    }
};

// one meataxe attempt: either finds a proper submodule or certifies
// irreducibility; returns nullopt when the sampled element was unhelpful
std::optional<SplitResult> try_element(const GFRep& V, const Matrix<Fq>& theta) {
    const GFTable* F = V.field();
    Rng poly_rng(1); // factorization-internal randomness, fixed
    GFPoly mp = min_poly_impl(theta);
    auto factors = factor(mp, poly_rng);
    // prefer low-degree factors; the nullspace of f(theta) is cheap to spin
    for (auto& [f, mult] : factors) {
        (void)mult;
        Matrix<Fq> ft = eval_poly_impl(f, theta);
        Matrix<Fq> null_rows = left_nullspace(ft);
        if (null_rows.rows == 0) continue;
        for (int i = 0; i < null_rows.rows; ++i) {
            Matrix<Fq> seed = Matrix<Fq>::zeros(1, V.dim(), Fq::zero(F));
            for (int j = 0; j < V.dim(); ++j) seed.at(0, j) = null_rows.at(i, j);
            Matrix<Fq> span = spin_rows(seed, V.gen_images());
            if (span.rows < V.dim()) return SplitResult{true, span};
        }
        if (null_rows.rows == f.degree()) {
            // Norton: every null vector spins to the whole space; check the
            // transposed module
            std::vector<Matrix<Fq>> tgens;
            for (const auto& g : V.gen_images()) tgens.push_back(transpose(g));
            Matrix<Fq> ftt = transpose(ft);
            Matrix<Fq> tnull = left_nullspace(ftt);
            BLOCKDEF_CHECK_INTERNAL(tnull.rows > 0, "InternalInconsistency",
                                    "transpose nullspace vanished");
            Matrix<Fq> seed = Matrix<Fq>::zeros(1, V.dim(), Fq::zero(F));
            for (int j = 0; j < V.dim(); ++j) seed.at(0, j) = tnull.at(0, j);
            Matrix<Fq> tspan = spin_rows(seed, tgens);
            if (tspan.rows == V.dim()) return SplitResult{false, {}}; // irreducible
            // perp of the transpose-submodule is a proper submodule
            Matrix<Fq> perp = left_nullspace(transpose(tspan));
            Matrix<Fq> span = spin_rows(perp, V.gen_images());
            BLOCKDEF_CHECK_INTERNAL(span.rows < V.dim(), "InternalInconsistency",
                                    "perp of dual submodule was not proper");
            return SplitResult{true, span};
        }
    }
    return std::nullopt;
}

SplitResult split_or_irreducible(const GFRep& V, const MeatAxeOptions& opt, u64 salt) {
    if (V.dim() == 1) return SplitResult{false, {}};
    AlgebraSampler sampler(V, opt.seed * 0x9e3779b97f4a7c15ULL + salt);
    for (int it = 0; it < opt.element_budget; ++it) {
        Matrix<Fq> theta = sampler.next();
        auto res = try_element(V, theta);
        if (res) return *res;
    }
    throw budget_error("ChopBudgetExceeded",
                       "randomized search exhausted its budget; enlarge budget or field");
}

void chop_rec(const GFRep& V, const MeatAxeOptions& opt, u64 salt, std::vector<GFRep>& out) {
    if (V.dim() == 0) return;
    SplitResult r = split_or_irreducible(V, opt, salt);
    if (!r.split) {
        out.push_back(V);
        return;
    }
    chop_rec(V.submodule_action(r.submodule), opt, salt * 2 + 1, out);
    chop_rec(V.quotient_action(r.submodule), opt, salt * 2 + 2, out);
}

} // namespace

GFPoly matrix_min_poly(const Matrix<Fq>& A) { return min_poly_impl(A); }

Matrix<Fq> matrix_poly_eval(const GFPoly& f, const Matrix<Fq>& A) { return eval_poly_impl(f, A); }

BrauerCharacter brauer_character(const GFRep& V) {
    const Group& G = V.group();
    const GFTable* F = V.field();
    u64 p = F->p();
    BrauerCharacter bc;
    bc.p = p;
    bc.reg_classes = p_regular_classes(G, p);
    bc.degree = V.dim();
    for (int ci : bc.reg_classes) {
        const auto& cls = G.classes()[ci];
        int d = cls.element_order;
        BLOCKDEF_CHECK_INTERNAL(d == 1 || (F->q() - 1) % (u64)d == 0, "InternalInconsistency",
                                "field does not split this element's eigenvalues");
        const Matrix<Fq>& A = V.image(cls.rep);
        Cyc value = Cyc::zero();
        int total = 0;
        for (int j = 0; j < d; ++j) {
            // eigenvalue omega^(j(q-1)/d); multiplicity = nullity(A - lambda)
            Fq lambda = d == 1 ? Fq::one(F) : Fq(F, (int32_t)((u64)j * ((F->q() - 1) / (u64)d)));
            Matrix<Fq> B = A;
            for (int i = 0; i < B.rows; ++i) B.at(i, i) -= lambda;
            int nullity = B.rows - rank(std::move(B));
            if (nullity > 0) {
                total += nullity;
                value += Cyc((long)nullity) * teichmueller_lift(lambda);
            }
        }
        BLOCKDEF_CHECK_INTERNAL(total == V.dim(), "InternalInconsistency",
                                "p-regular element was not diagonalizable");
        bc.values.push_back(value);
    }
    return bc;
}

bool is_irreducible(const GFRep& V, const MeatAxeOptions& opt) {
    return !split_or_irreducible(V, opt, 0).split;
}

CompositionSeries chop(const GFRep& V, const MeatAxeOptions& opt) {
    std::vector<GFRep> factors;
    chop_rec(V, opt, 0, factors);
    CompositionSeries out;
    for (auto& f : factors) {
        BrauerCharacter bc = brauer_character(f);
        bool merged = false;
        for (size_t i = 0; i < out.factors.size(); ++i) {
            if (out.brauer[i] == bc) {
                ++out.multiplicities[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.factors.push_back(std::move(f));
            out.multiplicities.push_back(1);
            out.brauer.push_back(std::move(bc));
        }
    }
    // deterministic order: dimension, then Brauer values
    std::vector<int> order(out.factors.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (out.factors[a].dim() != out.factors[b].dim())
            return out.factors[a].dim() < out.factors[b].dim();
        for (size_t k = 0; k < out.brauer[a].values.size(); ++k) {
            int c = Cyc::compare(out.brauer[a].values[k], out.brauer[b].values[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    CompositionSeries sorted;
    for (int i : order) {
        sorted.factors.push_back(std::move(out.factors[i]));
        sorted.multiplicities.push_back(out.multiplicities[i]);
        sorted.brauer.push_back(std::move(out.brauer[i]));
    }
    return sorted;
}

u64 splitting_field_degree(const Group& G, u64 p) {
    u64 m = 1;
    for (const auto& c : G.classes()) {
        if (c.element_order % p != 0) m = lcm_u64(m, (u64)c.element_order);
        else {
            // p-regular part of the order still contributes
            u64 o = (u64)c.element_order;
            while (o % p == 0) o /= p;
            m = lcm_u64(m, o);
        }
    }
    if (m == 1) return 1;
    return multiplicative_order(p % m, m);
}

Simples simples(std::shared_ptr<const Group> G, u64 p, const MeatAxeOptions& opt) {
    u64 e = splitting_field_degree(*G, p);
    const GFTable* F = GFTable::get(p, e);
    size_t target = p_regular_classes(*G, p).size();

    Simples out;
    out.F = F;
    auto absorb = [&](const CompositionSeries& cs) {
        for (size_t i = 0; i < cs.factors.size() && out.reps.size() < target; ++i) {
            bool known = false;
            for (const auto& bc : out.brauer)
                if (bc == cs.brauer[i]) {
                    known = true;
                    break;
                }
            if (!known) {
                out.reps.push_back(cs.factors[i]);
                out.brauer.push_back(cs.brauer[i]);
            }
        }
    };

    if (G->order() <= 400) {
        absorb(chop(GFRep::regular(G, F), opt));
    } else {
        // chop tensor powers of the faithful permutation module until the
        // p-regular class count is reached
        GFRep perm = GFRep::permutation(G, F);
        GFRep power = perm;
        for (int round = 0; round < 8 && out.reps.size() < target; ++round) {
            absorb(chop(power, opt));
            if (out.reps.size() < target) power = power.tensor(perm);
            if (power.dim() > 4096)
                throw budget_error("ChopBudgetExceeded", "tensor power search grew too large");
        }
    }
    BLOCKDEF_CHECK_INTERNAL(out.reps.size() == target, "InternalInconsistency",
                            "simple count must equal the p-regular class count");
    // canonical order: dimension, then Brauer values
    std::vector<int> order(out.reps.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (out.reps[a].dim() != out.reps[b].dim()) return out.reps[a].dim() < out.reps[b].dim();
        for (size_t k = 0; k < out.brauer[a].values.size(); ++k) {
            int c = Cyc::compare(out.brauer[a].values[k], out.brauer[b].values[k]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    Simples sorted;
    sorted.F = F;
    for (int i : order) {
        sorted.reps.push_back(std::move(out.reps[i]));
        sorted.brauer.push_back(std::move(out.brauer[i]));
    }
    return sorted;
}

} // namespace blockdef
