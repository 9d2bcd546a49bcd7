#pragma once

#include <memory>
#include <vector>

#include "blockdef/group.hpp"

namespace blockdef {

// Class frame indexed by p-power-order representatives: u_0 = 1, u_1, ..., u_h
// inside a fixed Sylow p-subgroup, each with its centralizer and the p-regular
// class representatives v_{i,1} = 1, ..., v_{i,l_i} of that centralizer. The
// products u_i v_{i,j} hit every conjugacy class of the ambient group exactly
// once.
struct PSingularFrame {
    struct Part {
        int u;                         // element index in G
        int alpha;                     // order of u is p^alpha
        std::shared_ptr<Group> cent;   // C_G(u)
        std::vector<int> v_reps;       // indices in cent, one per p-regular class of cent
        std::vector<int> v_class_in_cent; // class index (cent numbering) of each v
        std::vector<int> pair_class;   // G-class index of u * v_{i,j}
    };

    u64 p;
    std::shared_ptr<Group> sylow;
    std::vector<Part> parts;
};

PSingularFrame p_singular_frame(const Group& G, u64 p);

// p-regular class indices of G (order coprime to p), in class order
std::vector<int> p_regular_classes(const Group& G, u64 p);

} // namespace blockdef
