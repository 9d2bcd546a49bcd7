#pragma once

#include <cstdint>

namespace blockdef {

// splitmix64: tiny deterministic generator. Byte-identical sequences on every
// platform, which the result-document determinism contract relies on.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish draw in [0, n); modulo bias is irrelevant for randomized
    // search loops and keeps the sequence platform-stable
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

} // namespace blockdef
