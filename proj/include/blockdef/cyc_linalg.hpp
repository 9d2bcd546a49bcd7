#pragma once

#include "blockdef/matrix.hpp"

namespace blockdef {

using CycMatrix = Matrix<Cyc>;

// exact solve of A x = b over the common cyclotomic field; A square invertible
inline CycMatrix cyc_solve(const CycMatrix& A, const CycMatrix& b) {
    return solve_right(A, b);
}

} // namespace blockdef
