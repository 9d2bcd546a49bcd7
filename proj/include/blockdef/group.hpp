#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockdef/intutil.hpp"
#include "blockdef/perm.hpp"

namespace blockdef {

// A fully materialized finite permutation group. Elements are indexed
// 0..N-1 with index 0 the identity; the ordering is breadth-first from the
// generator list, so identical inputs give identical layouts everywhere
// downstream (class numbering, matrix rows, serialized tables).
class Group {
public:
    static constexpr u64 kDefaultOrderCap = 100000;

    static Group from_generators(int degree, std::vector<Perm> gens,
                                 u64 order_cap = kDefaultOrderCap);
    // subgroup of the same permutation domain given by its element set;
    // a small generating set is rediscovered greedily for the BFS layout
    static Group from_elements(int degree, std::vector<Perm> elements);

    int degree() const { return degree_; }
    u64 order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& perm(int i) const { return elems_[i]; }
    const std::vector<int>& generator_ids() const { return gen_ids_; }

    int index_of(const Perm& p) const; // -1 if not an element
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int conjugate(int g, int h) const { return mul(mul(h, g), inv(h)); } // h g h^-1
    int pow(int g, i64 k) const;
    int order_of(int g) const;

    // BFS forest: element i (> 0) equals mul(parent, generator via_gen)
    int bfs_parent(int i) const { return parent_[i]; }
    int bfs_gen(int i) const { return via_gen_[i]; }

    // conjugacy classes, ordered by (element order, class size, min element index)
    struct ConjClass {
        int rep;
        std::vector<int> members;
        u64 size;
        u64 centralizer_order;
        int element_order;
        int inverse_class;
    };
    const std::vector<ConjClass>& classes() const;
    int class_of(int g) const;
    int class_of_power(int cls, i64 k) const; // class of rep^k

    // exponent of the group (lcm of element orders)
    u64 exponent() const;

    std::vector<int> centralizer_elements(int g) const;
    Group centralizer(int g) const;
    std::vector<int> normalizer_elements(const std::vector<int>& subgroup) const;

    // Sylow p-subgroup by greedy normalizer growth; deterministic
    Group sylow(u64 p) const;

    // p-part decomposition g = u*v = v*u with u of p-power order, v p-regular;
    // both are powers of g
    std::pair<int, int> p_part_decomposition(int g, u64 p) const;

    // all subgroups of this group (intended for small p-groups), each as a
    // sorted element-index list; deduplicated, ordered by (order, elements)
    std::vector<std::vector<int>> all_subgroups() const;

    // subgroup closure of a set of element indices
    std::vector<int> closure(std::vector<int> seed) const;

private:
    Group() = default;
    void build_index();
    void find_inverses();

    int degree_ = 1;
    std::vector<Perm> elems_;
    std::vector<int> gen_ids_;
    std::vector<int> parent_, via_gen_;
    std::vector<int> inv_;
    std::unordered_map<Perm, int, PermHash> index_;
    std::optional<std::vector<int32_t>> mult_table_; // when order <= 4096

    mutable std::optional<std::vector<ConjClass>> classes_;
    mutable std::vector<int> class_of_;
};

} // namespace blockdef
