#include "support/local_cyc.hpp"

#include "blockdef/errors.hpp"

namespace blockdef::oracle {

LocalCycRing::LocalCycRing(u64 p, int prec, u64 f, int t)
    : p_(p), f_(f), prec_(prec), t_(t) {
    ram_ = t == 0 ? 1 : (int)((p - 1) * pow_u64(p, (u64)(t - 1)));
    gr_ = GRContext::get(p, prec, f);
    k_ = gr_->residue_field();
    u64 q = pow_u64(p, f);
    tau_ = GRElem::x(gr_).teichmuller();
    BLOCKDEF_CHECK_INTERNAL(tau_.pow(q - 1) == GRElem::one(gr_), "InternalInconsistency",
                            "teichmuller generator has wrong order");

    // matrix of multiplication by the uniformizer in Z/p^prec coordinates
    int D = ram_;
    int w = D * (int)f_;
    pi_matrix_rows_.assign(w, std::vector<u64>(w, 0));
    Elem pi = uniformizer();
    for (int i = 0; i < D; ++i)
        for (u64 j = 0; j < f_; ++j) {
            Elem e = zero();
            std::vector<u64> coeffs(f_, 0);
            coeffs[j] = 1;
            e.c[i] = GRElem(gr_, coeffs);
            Elem prod = mul(pi, e);
            pi_matrix_rows_[i * (int)f_ + (int)j] = flatten(prod);
        }

    // p as unit * pi^ram
    if (t_ == 0) {
        p_unit_ = one();
    } else {
        Elem pk = pi_pow(ram_);
        // solve pk * U = p exactly: U = p / pi^ram is a unit
        // do it coordinatewise via the row solver on the multiplication matrix
        std::vector<std::vector<u64>> gens;
        int w2 = D * (int)f_;
        for (int i = 0; i < w2; ++i) {
            Elem e = unflatten([&] {
                std::vector<u64> v(w2, 0);
                v[i] = 1;
                return v;
            }());
            gens.push_back(flatten(mul(pk, e)));
        }
        auto sol = zpm_solve_row(gens, flatten(from_integer((i64)p_)), p_, prec_);
        BLOCKDEF_CHECK_INTERNAL(sol.has_value(), "InternalInconsistency",
                                "p is not divisible by pi^ram");
        p_unit_ = unflatten(*sol);
        BLOCKDEF_CHECK_INTERNAL(is_unit(p_unit_), "InternalInconsistency",
                                "p / pi^ram is not a unit");
    }
}

LocalCycRing::Elem LocalCycRing::zero() const {
    Elem e;
    e.c.assign(ram_, GRElem::zero(gr_));
    return e;
}

LocalCycRing::Elem LocalCycRing::one() const {
    Elem e = zero();
    e.c[0] = GRElem::one(gr_);
    return e;
}

LocalCycRing::Elem LocalCycRing::from_integer(i64 n) const {
    Elem e = zero();
    u64 pm = gr_->modulus();
    u64 v = (u64)(((n % (i64)pm) + (i64)pm) % (i64)pm);
    e.c[0] = GRElem::from_integer(gr_, v);
    return e;
}

bool LocalCycRing::is_zero(const Elem& a) const {
    for (const auto& x : a.c)
        if (!x.is_zero()) return false;
    return true;
}

LocalCycRing::Elem LocalCycRing::add(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < ram_; ++i) e.c[i] = a.c[i] + b.c[i];
    return e;
}

LocalCycRing::Elem LocalCycRing::sub(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < ram_; ++i) e.c[i] = a.c[i] - b.c[i];
    return e;
}

LocalCycRing::Elem LocalCycRing::neg(const Elem& a) const {
    Elem e = zero();
    for (int i = 0; i < ram_; ++i) e.c[i] = -a.c[i];
    return e;
}

LocalCycRing::Elem LocalCycRing::mul(const Elem& a, const Elem& b) const {
    int D = ram_;
    std::vector<GRElem> prod(2 * D - 1, GRElem::zero(gr_));
    for (int i = 0; i < D; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; j < D; ++j) {
            if (b.c[j].is_zero()) continue;
            prod[i + j] = prod[i + j] + a.c[i] * b.c[j];
        }
    }
    if (t_ >= 1) {
        // reduce by Phi_{p^t}(z) = sum_{s=0}^{p-1} z^{s p^{t-1}}:
        // z^D = -(sum_{s<p-1} z^{s p^{t-1}})
        u64 step = pow_u64(p_, (u64)(t_ - 1));
        for (int d = 2 * D - 2; d >= D; --d) {
            GRElem lead = prod[d];
            if (lead.is_zero()) continue;
            prod[d] = GRElem::zero(gr_);
            for (u64 s = 0; s + 1 < p_; ++s)
                prod[d - D + (int)(s * step)] = prod[d - D + (int)(s * step)] - lead;
        }
    }
    Elem e = zero();
    for (int i = 0; i < D; ++i) e.c[i] = prod[i];
    return e;
}

Fq LocalCycRing::residue(const Elem& a) const {
    GRElem s = GRElem::zero(gr_);
    for (const auto& x : a.c) s = s + x; // z -> 1
    return s.residue();
}

LocalCycRing::Elem LocalCycRing::inverse(const Elem& a) const {
    BLOCKDEF_CHECK_INTERNAL(is_unit(a), "SingularSystem", "inverting a non-unit");
    // Newton iteration y <- y(2 - a y) from the residue inverse
    Elem y = zero();
    Fq r = Fq::one(k_) / residue(a);
    y.c[0] = GRElem::lift_residue(gr_, r);
    Elem two = from_integer(2);
    int steps = 1;
    int need = total_precision();
    while ((1 << steps) < need + 1) ++steps;
    for (int i = 0; i <= steps; ++i) y = mul(y, sub(two, mul(a, y)));
    BLOCKDEF_CHECK_INTERNAL(is_zero(sub(mul(a, y), one())), "InternalInconsistency",
                            "inverse iteration failed");
    return y;
}

LocalCycRing::Elem LocalCycRing::uniformizer() const {
    if (t_ == 0) return from_integer((i64)p_);
    Elem e = zero();
    e.c[0] = GRElem::one(gr_);
    e.c[1] = -GRElem::one(gr_); // 1 - z
    return e;
}

LocalCycRing::Elem LocalCycRing::pi_pow(int k) const {
    Elem e = one();
    Elem pi = uniformizer();
    for (int i = 0; i < k; ++i) e = mul(e, pi);
    return e;
}

std::vector<u64> LocalCycRing::flatten(const Elem& a) const {
    std::vector<u64> v;
    v.reserve(ram_ * f_);
    for (const auto& x : a.c)
        for (u64 j = 0; j < f_; ++j) v.push_back(x.c[j]);
    return v;
}

LocalCycRing::Elem LocalCycRing::unflatten(const std::vector<u64>& v) const {
    Elem e = zero();
    for (int i = 0; i < ram_; ++i) {
        std::vector<u64> coeffs(f_);
        for (u64 j = 0; j < f_; ++j) coeffs[j] = v[i * (int)f_ + (int)j];
        e.c[i] = GRElem(gr_, coeffs);
    }
    return e;
}

LocalCycRing::Elem LocalCycRing::divide_by_pi(const Elem& a) const {
    auto sol = zpm_solve_row(pi_matrix_rows_, flatten(a), p_, prec_);
    BLOCKDEF_CHECK_INTERNAL(sol.has_value(), "InternalInconsistency",
                            "element not divisible by the uniformizer");
    return unflatten(*sol);
}

int LocalCycRing::valuation(const Elem& a) const {
    if (is_zero(a)) return total_precision();
    Elem cur = a;
    int v = 0;
    while (residue(cur).is_zero()) {
        cur = divide_by_pi(cur);
        ++v;
        BLOCKDEF_CHECK_INTERNAL(v <= total_precision(), "InternalInconsistency",
                                "valuation overflow");
        if (is_zero(cur)) return total_precision();
    }
    return v;
}

LocalCycRing::Shifted LocalCycRing::embed(const Cyc& x) const {
    // conductor constraints
    u64 M = x.conductor();
    int tt = blockdef::valuation(M, p_);
    u64 m1 = M / pow_u64(p_, (u64)tt);
    u64 q = pow_u64(p_, f_);
    BLOCKDEF_CHECK_INTERNAL(tt <= t_, "InternalInconsistency", "conductor p-part too large");
    BLOCKDEF_CHECK_INTERNAL(m1 == 1 || (q - 1) % m1 == 0, "InternalInconsistency",
                            "conductor prime-to-p part too large");

    // image of zeta_M = zeta_{p^t'}^alpha * zeta_{m1}^beta
    // zeta_{p^tt} = z^{p^{t-tt}}, zeta_{m1} = tau^{(q-1)/m1}
    Elem zroot = zero();
    if (tt == 0) {
        zroot = one();
    } else {
        int pw = (int)pow_u64(p_, (u64)(t_ - tt));
        // z^pw as an element
        Elem zr = zero();
        zr.c[0] = GRElem::one(gr_);
        Elem zelt = zero();
        if (ram_ > 1) {
            zelt.c[1] = GRElem::one(gr_);
        } else {
            // t = 1, p = 2: phi(2) = 1, z = -1
            zelt.c[0] = -GRElem::one(gr_);
        }
        Elem acc = one();
        for (int i = 0; i < pw; ++i) acc = mul(acc, zelt);
        zroot = acc;
    }
    GRElem m1root = m1 == 1 ? GRElem::one(gr_) : tau_.pow((q - 1) / m1);

    u64 pt = pow_u64(p_, (u64)tt);
    u64 alpha = 1, beta = 1;
    if (pt > 1 && m1 > 1) {
        alpha = inv_mod(m1 % pt, pt);
        beta = inv_mod(pt % m1, m1);
    } else if (pt > 1) {
        alpha = 1;
        beta = 0;
    } else {
        alpha = 0;
        beta = 1;
    }
    // image of zeta_M^k
    auto zeta_pow = [&](u64 k) {
        Elem zr = one();
        if (pt > 1) {
            u64 ez = (alpha * k) % pt;
            for (u64 i = 0; i < ez; ++i) zr = mul(zr, zroot);
        }
        if (m1 > 1) {
            u64 em = (beta * k) % m1;
            Elem tpow = zero();
            tpow.c[0] = m1root.pow(em);
            zr = mul(zr, tpow);
        }
        return zr;
    };

    // accumulate with denominator tracking
    int shift = 0;
    Elem acc = zero();
    const auto& coeffs = x.coeffs();
    // common denominator p-part
    int max_pden = 0;
    for (const auto& qv : coeffs) {
        if (qv == 0) continue;
        mpz_class den = qv.get_den();
        int v = 0;
        while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p_)) {
            den /= (long)p_;
            ++v;
        }
        max_pden = std::max(max_pden, v);
    }
    shift = max_pden * ram_;
    Elem punit_inv = t_ == 0 ? one() : inverse(p_unit_);
    for (u64 i = 0; i < coeffs.size(); ++i) {
        const mpq_class& qv = coeffs[i];
        if (qv == 0) continue;
        mpz_class num = qv.get_num(), den = qv.get_den();
        int v = 0;
        while (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p_)) {
            den /= (long)p_;
            ++v;
        }
        // scale numerator by p^{max_pden - v}
        for (int s = v; s < max_pden; ++s) num *= (long)p_;
        u64 pm = gr_->modulus();
        mpz_class nm = num % (long)pm;
        if (nm < 0) nm += (long)pm;
        mpz_class dm = den % (long)pm;
        u64 nv = nm.get_ui();
        u64 dv = dm.get_ui();
        Elem term = from_integer((i64)nv);
        Elem dinv = inverse(from_integer((i64)dv));
        term = mul(term, dinv);
        // fold in the unit part of each removed p: p^{-1} = U^{-1} pi^{-ram}
        term = mul(term, zeta_pow(i));
        for (int s = 0; s < max_pden; ++s) term = mul(term, punit_inv);
        acc = add(acc, term);
    }
    return Shifted{acc, shift};
}

} // namespace blockdef::oracle
