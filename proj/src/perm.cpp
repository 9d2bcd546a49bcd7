#include "blockdef/perm.hpp"

#include <sstream>

namespace blockdef {

Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = (uint16_t)i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = (uint16_t)i;
    return c;
}

bool perm_is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

std::string perm_to_cycles(const Perm& a) {
    std::ostringstream os;
    std::vector<char> seen(a.size(), 0);
    bool any = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || a[i] == i) continue;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << " ";
            first = false;
            os << (j + 1);
            j = a[j];
        }
        os << ")";
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

} // namespace blockdef
