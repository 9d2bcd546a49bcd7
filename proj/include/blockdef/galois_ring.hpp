#pragma once

#include <vector>

#include "blockdef/gf.hpp"
#include "blockdef/intutil.hpp"

namespace blockdef {

// GR(p^m, e) = (Z/p^m)[x] / (f), where f is the canonical GF(p^e) defining
// polynomial lifted coefficientwise (entries 0..p-1 read in Z/p^m). Reducing
// coefficients mod p^j therefore gives ring maps GR(p^m,e) -> GR(p^j,e) all
// the way down to GF(p^e).
class GRContext {
public:
    static const GRContext* get(u64 p, int m, u64 e);

    u64 p() const { return p_; }
    int m() const { return m_; }
    u64 e() const { return e_; }
    u64 modulus() const { return pm_; } // p^m
    const GFTable* residue_field() const { return k_; }
    const std::vector<u64>& defining_poly() const { return defining_; }

private:
    GRContext(u64 p, int m, u64 e);
    u64 p_;
    int m_;
    u64 e_;
    u64 pm_;
    const GFTable* k_;
    std::vector<u64> defining_;
};

struct GRElem {
    const GRContext* R = nullptr;
    std::vector<u64> c; // length e, entries mod p^m

    GRElem() = default;
    GRElem(const GRContext* ctx, std::vector<u64> coeffs);

    static GRElem zero(const GRContext* R);
    static GRElem one(const GRContext* R);
    static GRElem from_integer(const GRContext* R, u64 n);
    static GRElem x(const GRContext* R); // class of the variable

    bool is_zero() const;
    bool is_unit() const; // residue nonzero

    Fq residue() const;                         // reduction mod p into GF(p^e)
    GRElem reduce_precision(int new_m) const;   // GR(p^m,e) -> GR(p^new_m,e)
    static GRElem lift_residue(const GRContext* R, Fq a); // naive coefficient lift

    GRElem inverse() const; // unit required
    GRElem pow(u64 k) const;
    GRElem teichmuller() const; // the multiplicative representative with same residue

    friend GRElem operator+(const GRElem& a, const GRElem& b);
    friend GRElem operator-(const GRElem& a, const GRElem& b);
    friend GRElem operator*(const GRElem& a, const GRElem& b);
    GRElem operator-() const;
    friend bool operator==(const GRElem& a, const GRElem& b) { return a.c == b.c; }
    friend bool operator!=(const GRElem& a, const GRElem& b) { return a.c != b.c; }
};

} // namespace blockdef
