#pragma once

#include <vector>

#include "blockdef/cyclotomic.hpp"
#include "blockdef/gfpoly.hpp"
#include "blockdef/psingular.hpp"
#include "blockdef/rep.hpp"

namespace blockdef {

// Brauer character: class function on p-regular classes, values in a
// cyclotomic field of order prime to p
struct BrauerCharacter {
    u64 p = 0;
    std::vector<int> reg_classes;  // p-regular class indices of the ambient group
    std::vector<Cyc> values;       // aligned with reg_classes
    i64 degree = 0;                // value at the identity class

    bool operator==(const BrauerCharacter& o) const { return values == o.values; }
};

struct MeatAxeOptions {
    u64 seed = 1;
    int element_budget = 400; // random algebra elements per level before giving up
};

// composition factors grouped up to isomorphism (over a splitting field,
// isomorphism is detected by Brauer character equality)
struct CompositionSeries {
    std::vector<GFRep> factors;
    std::vector<int> multiplicities;
    std::vector<BrauerCharacter> brauer;
};

// Brauer character of a representation: on each p-regular class the eigenvalue
// multiset of the representing matrix lifts multiplicatively to roots of unity.
// Requires all eigenvalues to lie in the coefficient field (true over the
// splitting field chosen by splitting_field_degree).
BrauerCharacter brauer_character(const GFRep& V);

// irreducibility test (Norton criterion); randomized but seed-deterministic
bool is_irreducible(const GFRep& V, const MeatAxeOptions& opt);

// full chop into composition factors with multiplicities
CompositionSeries chop(const GFRep& V, const MeatAxeOptions& opt);

// smallest e with p^e = 1 mod the p'-part of the exponent of G; over GF(p^e)
// every irreducible kG-module is absolutely irreducible
u64 splitting_field_degree(const Group& G, u64 p);

// minimal polynomial (exact for matrices up to 16x16, a genuine-factor
// divisor above that) and polynomial evaluation
GFPoly matrix_min_poly(const Matrix<Fq>& A);
Matrix<Fq> matrix_poly_eval(const GFPoly& f, const Matrix<Fq>& A);

struct Simples {
    const GFTable* F;
    std::vector<GFRep> reps;
    std::vector<BrauerCharacter> brauer;
};

// all simple modules over the splitting field; count equals the number of
// p-regular classes
Simples simples(std::shared_ptr<const Group> G, u64 p, const MeatAxeOptions& opt);

} // namespace blockdef
