#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blockdef {

// permutation of {0, ..., degree-1} as an image vector
using Perm = std::vector<uint16_t>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);

// cycle notation with 1-based points, e.g. "(1 2)(3 4)"; identity prints "()"
std::string perm_to_cycles(const Perm& a);

struct PermHash {
    size_t operator()(const Perm& a) const {
        size_t h = 1469598103934665603ull;
        for (uint16_t x : a) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace blockdef
