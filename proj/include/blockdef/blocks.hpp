#pragma once

#include <string>

#include "blockdef/decomp.hpp"

namespace blockdef {

// classification tags for finite 2-groups by presentation-free invariants
enum class TwoGroupShape { Cyclic, KleinFour, Dihedral, Semidihedral, Quaternion, Other };
std::string shape_name(TwoGroupShape s);
TwoGroupShape classify_2group(const Group& D); // throws NotA2Group

enum class RepType { Finite, Tame, Wild };
std::string rep_type_name(RepType t);

struct Block {
    std::vector<Fq> idempotent_class_coeffs; // over GF(p^e), indexed by class
    std::vector<int> ordinary;               // character indices
    std::vector<int> brauer;                 // simple indices
    std::vector<Fq> central_char;            // lambda_B on class sums, indexed by class
    int defect = 0;
    std::vector<int> defect_group_elements;  // element indices in G, sorted
    TwoGroupShape shape = TwoGroupShape::Other; // defect-group tag (p = 2; Cyclic/Other else)
    RepType rep_type = RepType::Wild;
};

struct BlockData {
    std::shared_ptr<const Group> G;
    u64 p = 0;
    const GFTable* F = nullptr;
    std::vector<Block> blocks;
    std::vector<int> block_of_char;
    std::vector<int> block_of_simple;
};

// block decomposition from central characters mod p; verifies the idempotent
// identities exactly and computes defect groups through the Brauer
// homomorphism test inside a fixed Sylow subgroup
BlockData block_data(const CharTable& table, const Simples& S, const DecompositionMatrix& D,
                     u64 p);

// height of a character inside its block; throws CharacterNotInBlock
int character_height(const CharTable& table, const BlockData& bd, int char_index, int block_index);

// index of the block of G corresponding to block b of the centralizer H
// (H = C_G(u) for a p-element u); throws NoCorrespondent if none matches.
// the induced central character is evaluated in G's splitting field
int brauer_correspondent(const BlockData& g_blocks, const Group& H, const CharTable& h_table,
                         const BlockData& h_blocks, int h_block_index);

} // namespace blockdef
