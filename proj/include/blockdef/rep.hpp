#pragma once

#include <memory>
#include <vector>

#include "blockdef/group.hpp"
#include "blockdef/matrix.hpp"
#include "blockdef/rng.hpp"

namespace blockdef {

// Matrix representation of a finite group over GF(p^e). Only generator images
// are stored; images of arbitrary elements are filled on demand along the
// group's BFS forest, so constructing a representation stays cheap even when
// the group is large. The module convention is row vectors with right action
// v -> v * rho(g).
class GFRep {
public:
    GFRep() = default;
    GFRep(std::shared_ptr<const Group> G, const GFTable* F, std::vector<Matrix<Fq>> gen_images);

    const Group& group() const { return *G_; }
    std::shared_ptr<const Group> group_ptr() const { return G_; }
    const GFTable* field() const { return F_; }
    int dim() const { return n_; }
    const std::vector<Matrix<Fq>>& gen_images() const { return gens_; }

    const Matrix<Fq>& image(int g) const; // cached

    // spot-check the defining relations: exhaustive for small groups,
    // randomized sampling above
    void verify(Rng& rng, int samples = 64) const;

    static GFRep trivial(std::shared_ptr<const Group> G, const GFTable* F, int dim = 1);
    static GFRep permutation(std::shared_ptr<const Group> G, const GFTable* F);
    static GFRep regular(std::shared_ptr<const Group> G, const GFTable* F);
    static GFRep from_matrices(std::shared_ptr<const Group> G, std::vector<Matrix<Fq>> gen_images);

    GFRep tensor(const GFRep& other) const;
    GFRep direct_sum_with(const GFRep& other) const;
    GFRep conjugated(const Matrix<Fq>& T) const; // T^-1 rho T in the row convention
    GFRep base_change(const GFTable* bigger) const;
    // restriction to a subgroup H (its own Group on the same permutation domain)
    GFRep restrict_to(std::shared_ptr<const Group> H) const;

    // restricted action on an invariant row space
    GFRep submodule_action(const Matrix<Fq>& basis_rows) const;
    // induced action on the quotient by an invariant row space
    GFRep quotient_action(const Matrix<Fq>& basis_rows) const;

private:
    std::shared_ptr<const Group> G_;
    const GFTable* F_ = nullptr;
    int n_ = 0;
    std::vector<Matrix<Fq>> gens_;
    mutable std::vector<std::shared_ptr<Matrix<Fq>>> cache_;
};

// rows spanning the smallest invariant subspace containing the seed rows
Matrix<Fq> spin_rows(const Matrix<Fq>& seed_rows, const std::vector<Matrix<Fq>>& gens);

// completes an independent row set (in reduced echelon form) to a basis
Matrix<Fq> complete_basis(const Matrix<Fq>& rows, int ambient_dim, Fq proto);

} // namespace blockdef
