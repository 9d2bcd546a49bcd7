#pragma once

#include "blockdef/chartable.hpp"
#include "blockdef/meataxe.hpp"
#include "blockdef/psingular.hpp"

namespace blockdef {

struct BlockData; // defined in blocks.hpp

// ordinary decomposition matrix: rows follow the character table, columns the
// simples; entries are the non-negative integers expressing each restricted
// ordinary character in the irreducible Brauer characters
struct DecompositionMatrix {
    std::vector<std::vector<i64>> d;
    std::vector<std::vector<i64>> cartan() const; // D^T D
};

DecompositionMatrix decomposition_matrix(const CharTable& table, const Simples& S, u64 p);

// generalized decomposition table: one square solve per p-power class
// representative u_i against the Brauer characters of its centralizer
struct GenDecompTable {
    u64 p;
    PSingularFrame frame;
    struct Slice {
        Simples cent_simples;            // over the centralizer's splitting field
        std::vector<std::vector<Cyc>> d; // [character][nu], conductor divides p^alpha_i
    };
    std::vector<Slice> slices;
};

GenDecompTable generalized_decomposition(const CharTable& table, u64 p, const MeatAxeOptions& opt);

struct VanishingReport {
    struct Entry {
        int part;      // frame index i
        int character; // mu
        int column;    // nu
        bool vanishes;
    };
    std::vector<Entry> checked; // all (mu,i,nu) with mismatched blocks
    int violations = 0;
};

// checks d^i = 0 whenever the column's centralizer block has a different
// correspondent than the character's block; throws VanishingViolated on any
// nonzero entry
VanishingReport verify_block_vanishing(const GenDecompTable& T, const BlockData& blocks,
                                       const MeatAxeOptions& opt);

// reconstruction identity at every class: chi(u_i v_{i,j}) equals the d-row
// paired against the centralizer Brauer values; throws on failure
void verify_reconstruction(const CharTable& table, const GenDecompTable& T);

} // namespace blockdef
