#pragma once

#include "blockdef/rep.hpp"

namespace blockdef {

// basis of the space of module maps V -> W, i.e. matrices X (dim V x dim W)
// with rho_V(g) X = X rho_W(g) for every generator
std::vector<Matrix<Fq>> hom_space(const GFRep& V, const GFRep& W);

inline std::vector<Matrix<Fq>> end_ring(const GFRep& V) { return hom_space(V, V); }

// rank of the averaged conjugation operator X -> sum_g rho(g) X rho(g)^-1,
// i.e. the dimension of the ideal of endomorphisms factoring through a
// projective module
int projective_end_dim(const GFRep& V);

// dim End(V) minus the dimension of its projective ideal
int stable_end(const GFRep& V);

} // namespace blockdef
