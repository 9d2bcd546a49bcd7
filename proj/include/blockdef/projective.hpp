#pragma once

#include "blockdef/meataxe.hpp"
#include "blockdef/rep.hpp"

namespace blockdef {

// Group-algebra machinery at the scale where the regular module is choppable.
// Algebra elements are coefficient vectors indexed by group elements; modules
// are right modules (row convention), so projective indecomposables are right
// ideals e * kG for primitive idempotents e.

struct GroupAlgebra {
    std::shared_ptr<const Group> G;
    const GFTable* F;

    std::vector<Fq> mul(const std::vector<Fq>& a, const std::vector<Fq>& b) const;
    std::vector<Fq> unit() const;
    // image of an algebra element under a representation
    Matrix<Fq> act(const GFRep& V, const std::vector<Fq>& a) const;
};

struct ProjectiveData {
    GroupAlgebra A;
    Simples simple_list;
    std::vector<std::vector<Fq>> radical;     // basis of J(kG)
    std::vector<std::vector<Fq>> idempotents; // primitive, one per simple
    std::vector<GFRep> pims;                  // e_i kG with its action
    std::vector<Matrix<Fq>> pim_bases;        // rows in kG coordinates
};

// radical + primitive idempotents + projective indecomposables; budget-guarded
ProjectiveData projective_data(std::shared_ptr<const Group> G, u64 p, const MeatAxeOptions& opt,
                               u64 order_budget = 128);

struct Cover {
    GFRep P;               // projective cover
    Matrix<Fq> pi;         // rows: images of P's basis in V (P.dim x V.dim)
    GFRep omega;           // kernel module
    Matrix<Fq> omega_rows; // kernel basis inside P
};

// projective cover P(V) -> V and its kernel
Cover projective_cover(const GFRep& V, const ProjectiveData& pd, const MeatAxeOptions& opt);

// dim Ext^1(V, W) via the cover: cokernel of Hom(P, W) -> Hom(Omega V, W)
int ext1_dim(const GFRep& V, const GFRep& W, const ProjectiveData& pd, const MeatAxeOptions& opt);
// dim Ext^2(V, W) = dim Ext^1(Omega V, W)
int ext2_dim(const GFRep& V, const GFRep& W, const ProjectiveData& pd, const MeatAxeOptions& opt);

} // namespace blockdef
