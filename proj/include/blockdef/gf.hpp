#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockdef/intutil.hpp"

namespace blockdef {

// Immutable arithmetic tables for GF(p^e). Elements are stored as discrete
// logs of a fixed generator; addition goes through a Zech logarithm table.
//
// The defining polynomial is the lexicographically least primitive monic
// polynomial of degree e over GF(p) (coefficient tuple (a_{e-1},...,a_0) read
// as a base-p number, smallest first). Its root x is therefore a generator of
// the multiplicative group, and every serialized element is portable given
// (p, e) alone. For e = 1 the polynomial is x - g with g the least primitive
// root mod p, so "x" is a generator in every case.
class GFTable {
public:
    static const GFTable* get(u64 p, u64 e);

    u64 p() const { return p_; }
    u64 e() const { return e_; }
    u64 q() const { return q_; }

    // defining polynomial, ascending coefficients, length e+1, monic
    const std::vector<u64>& defining_poly() const { return defining_; }

    // arithmetic on log representation: -1 encodes zero, otherwise 0..q-2
    int32_t add(int32_t a, int32_t b) const;
    int32_t neg(int32_t a) const;
    int32_t mul(int32_t a, int32_t b) const {
        if (a < 0 || b < 0) return -1;
        return (int32_t)(((i64)a + b) % (i64)(q_ - 1));
    }
    int32_t inv(int32_t a) const { return a <= 0 ? a : (int32_t)(q_ - 1 - a); }

    // coefficient-vector interface (length e, entries 0..p-1, ascending powers of x)
    int32_t from_coeffs(const std::vector<u64>& c) const;
    std::vector<u64> to_coeffs(int32_t a) const;
    int32_t from_residue(u64 r) const; // image of the integer r (prime-subfield element)

private:
    GFTable(u64 p, u64 e);

    u64 p_, e_, q_;
    std::vector<u64> defining_;
    std::vector<int32_t> zech_;    // zech_[k] = log(1 + x^k), -1 when 1 + x^k = 0
    std::vector<u64> pow_packed_;  // log -> packed coefficient vector (base p)
    std::vector<int32_t> log_of_;  // packed coefficient vector -> log (-1 for 0)
};

// Value type for GF(p^e) elements; carries its table.
struct Fq {
    const GFTable* F = nullptr;
    int32_t v = -1; // -1 = zero, else discrete log

    Fq() = default;
    Fq(const GFTable* table, int32_t log) : F(table), v(log) {}

    static Fq zero(const GFTable* F) { return Fq(F, -1); }
    static Fq one(const GFTable* F) { return Fq(F, 0); }
    static Fq generator(const GFTable* F) { return Fq(F, F->q() > 2 ? 1 : 0); }

    bool is_zero() const { return v < 0; }

    friend Fq operator+(Fq a, Fq b) { return Fq(a.F, a.F->add(a.v, b.v)); }
    friend Fq operator-(Fq a, Fq b) { return Fq(a.F, a.F->add(a.v, a.F->neg(b.v))); }
    friend Fq operator*(Fq a, Fq b) { return Fq(a.F, a.F->mul(a.v, b.v)); }
    friend Fq operator/(Fq a, Fq b) { return Fq(a.F, a.F->mul(a.v, a.F->inv(b.v))); }
    Fq operator-() const { return Fq(F, F->neg(v)); }
    Fq& operator+=(Fq b) { v = F->add(v, b.v); return *this; }
    Fq& operator-=(Fq b) { v = F->add(v, F->neg(b.v)); return *this; }
    Fq& operator*=(Fq b) { v = F->mul(v, b.v); return *this; }

    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }

    Fq pow(u64 k) const {
        if (v < 0) return *this;
        return Fq(F, (int32_t)(( (__uint128_t)(u64)v * k) % (F->q() - 1)));
    }

    std::vector<u64> coeffs() const { return F->to_coeffs(v); }
    std::string str() const;
};

// field embedding GF(p^f) -> GF(p^e) for f | e; deterministic (smallest-log
// root of the small defining polynomial)
Fq embed(Fq a, const GFTable* big);

} // namespace blockdef
