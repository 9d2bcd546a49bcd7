#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "blockdef/gf.hpp"
#include "blockdef/intutil.hpp"

namespace blockdef {

// Shared data for Q(zeta_M): the M-th cyclotomic polynomial and reduction
// rows expressing zeta^k in the power basis 1, zeta, ..., zeta^(phi(M)-1).
class CycContext {
public:
    static const CycContext* get(u64 M);

    u64 M() const { return M_; }
    u64 phi() const { return phi_; }
    // zeta^k in the power basis, valid for 0 <= k < max_power()
    const std::vector<mpz_class>& power_row(u64 k) const { return rows_[k]; }
    u64 max_power() const { return rows_.size(); }

private:
    explicit CycContext(u64 M);
    u64 M_, phi_;
    std::vector<std::vector<mpz_class>> rows_;
};

// Exact element of a cyclotomic field. Values are kept normalized: the stored
// conductor is the smallest M with the value in Q(zeta_M) (so never 2 mod 4),
// and coefficients are canonical rationals. Equality is plain representation
// equality as a consequence.
class Cyc {
public:
    Cyc() : M_(1), c_{mpq_class(0)} {}
    explicit Cyc(const mpq_class& r) : M_(1), c_{r} {}
    explicit Cyc(long n) : M_(1), c_{mpq_class(n)} {}

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(1); }
    static Cyc rational(const mpq_class& r) { return Cyc(r); }
    // zeta_M^k
    static Cyc root_of_unity(u64 M, u64 k);

    u64 conductor() const { return M_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return M_ == 1; }
    const mpq_class& rational_value() const; // requires is_rational()

    // all power-basis coefficients are rational integers (the power basis is
    // an integral basis of Z[zeta_M])
    bool is_algebraic_integer() const;
    bool is_rational_integer() const;
    // value lies in Q(zeta_Mprime)
    bool lies_in_conductor(u64 Mprime) const;

    Cyc galois(u64 a) const; // zeta_M -> zeta_M^a, gcd(a, M) = 1
    Cyc conj() const;        // complex conjugation
    Cyc inverse() const;     // exact; value must be nonzero

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    Cyc operator-() const;
    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.M_ == b.M_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    std::string str() const; // human-readable, z = zeta_conductor

    // deterministic total order (conductor, then coefficients); used for
    // stable sorting of rows/labels
    static int compare(const Cyc& a, const Cyc& b);

private:
    Cyc(u64 M, std::vector<mpq_class> c) : M_(M), c_(std::move(c)) {}
    // raw value in conductor M (coeffs length phi(M)), not yet normalized
    static Cyc make_normalized(u64 M, std::vector<mpq_class> c);
    std::vector<mpq_class> embedded_coeffs(u64 N) const; // coefficients in Q(zeta_N), M_ | N

    u64 M_;
    std::vector<mpq_class> c_;
};

// multiplicative lift: 0 -> 0, generator^j -> zeta_(q-1)^j
Cyc teichmueller_lift(Fq a);

// reduction Z[zeta_M] -> GF(p^e): p-power roots of unity to 1, prime-to-p
// roots through the inverse of the multiplicative lift. Denominators must be
// prime to p; the prime-to-p part of M must divide p^e - 1.
Fq reduce_mod_p(const Cyc& x, const GFTable* F);

} // namespace blockdef
