#pragma once

#include "blockdef/cyclotomic.hpp"
#include "blockdef/galois_ring.hpp"
#include "blockdef/zpm.hpp"

namespace blockdef::oracle {

// Finite model of the completion of Q(zeta_{p^t m1}) at the prime singled out
// by the multiplicative-section reduction: GR(p^prec, f)[z] / Phi_{p^t}(z),
// a chain ring with uniformizer 1 - z (or p when t = 0). Supports enough
// arithmetic to stabilize lattices: valuation, exact division by the
// uniformizer, and reduction to the residue field GF(p^f).
class LocalCycRing {
public:
    LocalCycRing(u64 p, int prec, u64 f, int t);

    u64 p() const { return p_; }
    int prec() const { return prec_; }
    u64 f() const { return f_; }
    int t() const { return t_; }
    int ram() const { return ram_; } // phi(p^t), 1 when t = 0
    const GFTable* residue_field() const { return k_; }

    struct Elem {
        std::vector<GRElem> c; // length phi(p^t) over GR(p^prec, f)
    };

    Elem zero() const;
    Elem one() const;
    Elem from_integer(i64 n) const;
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;

    Fq residue(const Elem& a) const; // z -> 1, then GR -> GF(p^f)
    bool is_unit(const Elem& a) const { return !residue(a).is_zero(); }
    Elem inverse(const Elem& a) const;

    Elem uniformizer() const;
    // largest k with pi^k | a (capped at the precision); exact division record
    int valuation(const Elem& a) const;
    Elem divide_by_pi(const Elem& a) const; // requires pi | a
    Elem pi_pow(int k) const;

    // image of an exact cyclotomic number whose conductor divides p^t * m1
    // with m1 | p^f - 1 and whose denominator has p-valuation <= max_shift;
    // returns the element scaled by pi^{shift}: value = pi^{-shift} * elem
    struct Shifted {
        Elem u;
        int shift; // value = pi^(-shift) * u
    };
    Shifted embed(const Cyc& x) const;

    int total_precision() const { return prec_ * ram_; }

private:
    u64 p_, f_;
    int prec_, t_, ram_;
    const GRContext* gr_;
    const GFTable* k_;
    Elem p_unit_; // unit U with p = U * pi^ram
    ZpmSpan pi_solver_unused_;
    std::vector<std::vector<u64>> pi_matrix_rows_; // row-convention matrix of x -> pi*x
    GRElem tau_; // multiplicative generator of the prime-to-p roots in GR

    std::vector<u64> flatten(const Elem& a) const;
    Elem unflatten(const std::vector<u64>& v) const;
};

} // namespace blockdef::oracle
