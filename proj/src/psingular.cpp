#include "blockdef/psingular.hpp"

#include <algorithm>

#include "blockdef/errors.hpp"

namespace blockdef {

std::vector<int> p_regular_classes(const Group& G, u64 p) {
    std::vector<int> out;
    const auto& cls = G.classes();
    for (size_t i = 0; i < cls.size(); ++i)
        if (cls[i].element_order % p != 0) out.push_back((int)i);
    return out;
}

PSingularFrame p_singular_frame(const Group& G, u64 p) {
    PSingularFrame F;
    F.p = p;
    F.sylow = std::make_shared<Group>(G.sylow(p));

    const auto& cls = G.classes();

    // representatives of p-power-order classes, chosen inside the fixed Sylow
    // subgroup and ordered by (element order, element index); u_0 = 1 first
    struct URep {
        int u;
        int order;
    };
    std::vector<URep> ureps;
    std::vector<char> class_done(cls.size(), 0);
    // enumerate Sylow elements by G-index so the chosen representative is the
    // least Sylow element of its class
    std::vector<int> syl_idx;
    for (const auto& pm : F.sylow->elements()) {
        int gi = G.index_of(pm);
        BLOCKDEF_CHECK_INTERNAL(gi >= 0, "InternalInconsistency", "sylow element outside group");
        syl_idx.push_back(gi);
    }
    std::sort(syl_idx.begin(), syl_idx.end());
    for (int gi : syl_idx) {
        int c = G.class_of(gi);
        if (class_done[c]) continue;
        class_done[c] = 1;
        ureps.push_back({gi, G.order_of(gi)});
    }
    // every p-power-order class meets the Sylow subgroup
    for (size_t i = 0; i < cls.size(); ++i) {
        u64 o = (u64)cls[i].element_order;
        if (p_part(o, p) == o)
            BLOCKDEF_CHECK_INTERNAL(class_done[i], "InternalInconsistency",
                                    "p-power class missed the Sylow subgroup");
    }
    std::sort(ureps.begin(), ureps.end(), [](const URep& a, const URep& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.u < b.u;
    });
    BLOCKDEF_CHECK_INTERNAL(!ureps.empty() && ureps[0].u == 0, "InternalInconsistency",
                            "identity must head the frame");

    std::vector<char> class_hit(cls.size(), 0);
    for (const auto& ur : ureps) {
        PSingularFrame::Part part;
        part.u = ur.u;
        part.alpha = valuation((u64)ur.order, p);
        part.cent = std::make_shared<Group>(G.centralizer(ur.u));
        const Group& C = *part.cent;
        const auto& ccls = C.classes();
        for (size_t j = 0; j < ccls.size(); ++j) {
            if (ccls[j].element_order % p == 0) continue;
            part.v_reps.push_back(ccls[j].rep);
            part.v_class_in_cent.push_back((int)j);
            // G-class of u * v
            int v_in_G = G.index_of(C.perm(ccls[j].rep));
            int prod = G.mul(part.u, v_in_G);
            int gc = G.class_of(prod);
            BLOCKDEF_CHECK_INTERNAL(!class_hit[gc], "InternalInconsistency",
                                    "class frame hit a class twice");
            class_hit[gc] = 1;
            part.pair_class.push_back(gc);
        }
        BLOCKDEF_CHECK_INTERNAL(!part.v_reps.empty() && part.v_reps[0] == 0,
                                "InternalInconsistency", "v_{i,1} must be the identity");
        F.parts.push_back(std::move(part));
    }
    for (char h : class_hit)
        BLOCKDEF_CHECK_INTERNAL(h, "InternalInconsistency", "class frame missed a class");
    return F;
}

} // namespace blockdef
