#include "blockdef/gfpoly.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"

namespace blockdef {

void GFPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void GFPoly::make_monic() {
    if (c.empty()) return;
    Fq il = Fq::one(F) / c.back();
    for (auto& a : c) a *= il;
}

GFPoly GFPoly::x(const GFTable* F) { return GFPoly(F, {Fq::zero(F), Fq::one(F)}); }

GFPoly GFPoly::constant(const GFTable* F, Fq a) { return GFPoly(F, {a}); }

Fq GFPoly::eval(Fq a) const {
    Fq r = Fq::zero(F);
    for (size_t i = c.size(); i-- > 0;) r = r * a + c[i];
    return r;
}

GFPoly operator+(const GFPoly& a, const GFPoly& b) {
    GFPoly r(a.F);
    r.c.resize(std::max(a.c.size(), b.c.size()), Fq::zero(a.F));
    for (size_t i = 0; i < r.c.size(); ++i) {
        Fq x = i < a.c.size() ? a.c[i] : Fq::zero(a.F);
        Fq y = i < b.c.size() ? b.c[i] : Fq::zero(a.F);
        r.c[i] = x + y;
    }
    r.trim();
    return r;
}

GFPoly operator-(const GFPoly& a, const GFPoly& b) {
    GFPoly r(a.F);
    r.c.resize(std::max(a.c.size(), b.c.size()), Fq::zero(a.F));
    for (size_t i = 0; i < r.c.size(); ++i) {
        Fq x = i < a.c.size() ? a.c[i] : Fq::zero(a.F);
        Fq y = i < b.c.size() ? b.c[i] : Fq::zero(a.F);
        r.c[i] = x - y;
    }
    r.trim();
    return r;
}

GFPoly operator*(const GFPoly& a, const GFPoly& b) {
    if (a.is_zero() || b.is_zero()) return GFPoly(a.F);
    GFPoly r(a.F);
    r.c.assign(a.c.size() + b.c.size() - 1, Fq::zero(a.F));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

bool operator==(const GFPoly& a, const GFPoly& b) { return a.c == b.c; }

std::pair<GFPoly, GFPoly> divmod(const GFPoly& a, const GFPoly& b) {
    BLOCKDEF_CHECK_INTERNAL(!b.is_zero(), "SingularSystem", "polynomial division by zero");
    GFPoly q(a.F), r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign(r.c.size() - b.c.size() + 1, Fq::zero(a.F));
    Fq il = Fq::one(a.F) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Fq coef = r.lead() * il;
        size_t shift = r.c.size() - b.c.size();
        q.c[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= coef * b.c[i];
        r.trim();
    }
    q.trim();
    return q.is_zero() ? std::make_pair(GFPoly(a.F), r) : std::make_pair(q, r);
}

GFPoly gcd(GFPoly a, GFPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    a.make_monic();
    return a;
}

GFPoly powmod(GFPoly base, u64 exp, const GFPoly& mod) {
    GFPoly r = GFPoly::constant(base.F, Fq::one(base.F));
    base = divmod(base, mod).second;
    while (exp) {
        if (exp & 1) r = divmod(r * base, mod).second;
        base = divmod(base * base, mod).second;
        exp >>= 1;
    }
    return r;
}

GFPoly derivative(const GFPoly& f) {
    GFPoly d(f.F);
    if (f.c.size() < 2) return d;
    d.c.resize(f.c.size() - 1, Fq::zero(f.F));
    for (size_t i = 1; i < f.c.size(); ++i) {
        u64 m = i % f.F->p();
        Fq coef = Fq(f.F, f.F->from_residue(m));
        d.c[i - 1] = coef * f.c[i];
    }
    d.trim();
    return d;
}

namespace {

bool is_one(const GFPoly& f) { return f.degree() == 0 && f.c[0] == Fq::one(f.F); }

// p-th root of g(x) = h(x^p); coefficient p-th root is a -> a^(q/p)
GFPoly pth_root(const GFPoly& g) {
    const GFTable* F = g.F;
    u64 p = F->p();
    u64 q = F->q();
    GFPoly h(F);
    h.c.resize((g.c.size() + p - 1) / p, Fq::zero(F));
    for (size_t i = 0; i * p < g.c.size(); ++i) h.c[i] = g.c[i * p].pow(q / p);
    h.trim();
    return h;
}

// squarefree decomposition of monic f in char p: list of (squarefree part, multiplicity)
void squarefree_decompose(const GFPoly& f, int outer_mult,
                          std::vector<std::pair<GFPoly, int>>& out) {
    if (f.degree() < 1) return;
    GFPoly d = derivative(f);
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * (int)f.F->p(), out);
        return;
    }
    GFPoly c = gcd(f, d);
    GFPoly w = divmod(f, c).first;
    int i = 1;
    while (!is_one(w)) {
        GFPoly y = gcd(w, c);
        GFPoly z = divmod(w, y).first; // multiplicity exactly i (p does not divide i)
        if (z.degree() >= 1) out.emplace_back(z, outer_mult * i);
        c = divmod(c, y).first;
        w = std::move(y);
        ++i;
    }
    if (!is_one(c)) squarefree_decompose(c, outer_mult, out); // c = h(x^p)
}

// Berlekamp split of a squarefree monic f into monic irreducibles
void berlekamp(const GFPoly& f, std::vector<GFPoly>& out, Rng& rng) {
    const GFTable* F = f.F;
    int n = f.degree();
    if (n <= 0) return;
    if (n == 1) {
        out.push_back(f);
        return;
    }
    u64 q = F->q();
    // Q matrix: column j holds x^(jq) mod f
    std::vector<std::vector<Fq>> M(n, std::vector<Fq>(n, Fq::zero(F)));
    GFPoly xq = powmod(GFPoly::x(F), q, f);
    GFPoly cur = GFPoly::constant(F, Fq::one(F));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= cur.degree(); ++i) M[i][j] = cur.c[i];
        cur = divmod(cur * xq, f).second;
    }
    for (int i = 0; i < n; ++i) M[i][i] -= Fq::one(F);
    // nullspace of M
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (!M[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[sel], M[row]);
        Fq il = Fq::one(F) / M[row][col];
        for (int cc = 0; cc < n; ++cc) M[row][cc] *= il;
        for (int r = 0; r < n; ++r) {
            if (r != row && !M[r][col].is_zero()) {
                Fq fac = M[r][col];
                for (int cc = 0; cc < n; ++cc) M[r][cc] -= fac * M[row][cc];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<GFPoly> basis;
    std::vector<char> is_pivot(n, 0);
    for (int pc : pivot_col) is_pivot[pc] = 1;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        GFPoly v(F);
        v.c.assign(n, Fq::zero(F));
        v.c[col] = Fq::one(F);
        for (size_t r = 0; r < pivot_col.size(); ++r) v.c[pivot_col[r]] = -M[r][col];
        v.trim();
        basis.push_back(v);
    }
    size_t nfactors = basis.size();
    if (nfactors == 1) {
        out.push_back(f);
        return;
    }
    std::vector<GFPoly> work{f};
    size_t attempts = 0;
    while (work.size() < nfactors) {
        GFPoly v(F);
        if (attempts < basis.size()) {
            v = basis[attempts];
        } else {
            v.c.assign(n, Fq::zero(F));
            for (auto& b : basis) {
                int32_t lg = (int32_t)rng.below(q) - 1; // -1 encodes zero coefficient
                if (lg < 0) continue;
                Fq coef(F, lg);
                for (int i = 0; i <= b.degree(); ++i) v.c[i] += b.c[i] * coef;
            }
            v.trim();
        }
        ++attempts;
        BLOCKDEF_CHECK_INTERNAL(attempts < 64 * nfactors + 256, "InternalInconsistency",
                                "factor splitting did not converge");
        if (v.degree() < 1) continue;
        std::vector<GFPoly> next;
        for (auto& g : work) {
            if (g.degree() <= 1) {
                next.push_back(g);
                continue;
            }
            GFPoly vr = divmod(v, g).second;
            if (vr.degree() < 1) {
                next.push_back(g);
                continue;
            }
            GFPoly rem = g;
            std::vector<GFPoly> parts;
            for (u64 cc = 0; cc < q && rem.degree() > 0; ++cc) {
                Fq val = cc == 0 ? Fq::zero(F) : Fq(F, (int32_t)(cc - 1));
                GFPoly d = gcd(rem, vr - GFPoly::constant(F, val));
                if (d.degree() >= 1 && d.degree() < rem.degree()) {
                    parts.push_back(d);
                    rem = divmod(rem, d).first;
                }
            }
            if (rem.degree() >= 1) parts.push_back(rem);
            for (auto& pt : parts) next.push_back(pt);
        }
        work = std::move(next);
    }
    for (auto& g : work) {
        g.make_monic();
        out.push_back(g);
    }
}

} // namespace

std::vector<std::pair<GFPoly, int>> factor(const GFPoly& f0, Rng& rng) {
    std::vector<std::pair<GFPoly, int>> result;
    if (f0.degree() < 1) return result;
    GFPoly f = f0;
    f.make_monic();

    std::vector<std::pair<GFPoly, int>> squarefree_parts;
    squarefree_decompose(f, 1, squarefree_parts);

    std::vector<std::pair<GFPoly, int>> found;
    for (auto& [sf, mult] : squarefree_parts) {
        std::vector<GFPoly> irr;
        berlekamp(sf, irr, rng);
        for (auto& g : irr) found.emplace_back(g, mult);
    }
    for (auto& [g, m] : found) {
        bool merged = false;
        for (auto& [h, hm] : result) {
            if (g == h) {
                hm += m;
                merged = true;
                break;
            }
        }
        if (!merged) result.emplace_back(g, m);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            if (a.first.c[i].v != b.first.c[i].v) return a.first.c[i].v < b.first.c[i].v;
        }
        return false;
    });
    return result;
}

std::vector<Fq> roots(const GFPoly& f, Rng& rng) {
    std::vector<Fq> out;
    for (auto& [g, m] : factor(f, rng)) {
        (void)m;
        if (g.degree() == 1) out.push_back(-g.c[0]);
    }
    std::sort(out.begin(), out.end(), [](Fq a, Fq b) { return a.v < b.v; });
    return out;
}

} // namespace blockdef
