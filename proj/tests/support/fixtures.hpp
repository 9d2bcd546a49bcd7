#pragma once

#include <memory>

#include "blockdef/group.hpp"

namespace blockdef::fixtures {

std::shared_ptr<Group> cyclic(int n);
std::shared_ptr<Group> klein_four();
std::shared_ptr<Group> dihedral(int order); // order = 2n, acting on n points
std::shared_ptr<Group> quaternion8();
std::shared_ptr<Group> sym(int n);
std::shared_ptr<Group> alt5();
std::shared_ptr<Group> sl2(int q);  // on the q^2-1 nonzero column vectors
std::shared_ptr<Group> gl2(int q);
std::shared_ptr<Group> pgl2(int q); // on the projective line, q+1 points

} // namespace blockdef::fixtures
