#pragma once

#include <memory>
#include <vector>

#include "blockdef/cyclotomic.hpp"
#include "blockdef/group.hpp"

namespace blockdef {

struct Character {
    std::vector<Cyc> values; // indexed by conjugacy class
    i64 degree = 0;          // value at the identity class
};

struct CharTable {
    std::shared_ptr<const Group> G;
    std::vector<Character> chars; // sorted by (degree, values)
};

// ordinary character table via class-matrix eigenvector separation over a
// prime field GF(l), l = 1 mod exp(G), followed by exact cyclotomic lifting
// through the power maps; verifies both orthogonality relations before
// returning
CharTable character_table(std::shared_ptr<const Group> G);

// exact inner product (1/|G|) sum |C_i| a(i) conj(b(i))
Cyc character_inner(const Group& G, const std::vector<Cyc>& a, const std::vector<Cyc>& b);

// partition of characters under the automorphisms moving only p-power-order
// roots of unity: zeta_{p^a} -> zeta_{p^a}^c with all prime-to-p roots fixed.
// returns orbit index per character
std::vector<int> galois_orbits_padic(const CharTable& table, u64 p);

// class function restricted to the p-regular classes (identity always kept)
std::vector<Cyc> restrict_p_regular(const Group& G, const std::vector<Cyc>& values, u64 p);

} // namespace blockdef
