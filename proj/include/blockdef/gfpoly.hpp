#pragma once

#include <vector>

#include "blockdef/gf.hpp"
#include "blockdef/rng.hpp"

namespace blockdef {

// dense univariate polynomials over GF(q), ascending coefficients
struct GFPoly {
    const GFTable* F = nullptr;
    std::vector<Fq> c;

    GFPoly() = default;
    explicit GFPoly(const GFTable* field) : F(field) {}
    GFPoly(const GFTable* field, std::vector<Fq> coeffs) : F(field), c(std::move(coeffs)) { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for zero
    Fq lead() const { return c.back(); }
    void make_monic();

    static GFPoly x(const GFTable* F);
    static GFPoly constant(const GFTable* F, Fq a);

    Fq eval(Fq a) const;
};

GFPoly operator+(const GFPoly& a, const GFPoly& b);
GFPoly operator-(const GFPoly& a, const GFPoly& b);
GFPoly operator*(const GFPoly& a, const GFPoly& b);
bool operator==(const GFPoly& a, const GFPoly& b);

// division with remainder; b nonzero
std::pair<GFPoly, GFPoly> divmod(const GFPoly& a, const GFPoly& b);
GFPoly gcd(GFPoly a, GFPoly b); // monic
GFPoly powmod(GFPoly base, u64 exp, const GFPoly& mod);
GFPoly derivative(const GFPoly& f);

// distinct monic irreducible factors with multiplicities
std::vector<std::pair<GFPoly, int>> factor(const GFPoly& f, Rng& rng);

// all roots in GF(q) (with multiplicity stripped), sorted by log
std::vector<Fq> roots(const GFPoly& f, Rng& rng);

} // namespace blockdef
