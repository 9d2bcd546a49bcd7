#include "blockdef/group.hpp"

#include <algorithm>
#include <set>

#include "blockdef/errors.hpp"

namespace blockdef {

Group Group::from_generators(int degree, std::vector<Perm> gens, u64 order_cap) {
    Group G;
    G.degree_ = degree;
    for (auto& g : gens)
        BLOCKDEF_CHECK_INTERNAL((int)g.size() == degree, "InternalInconsistency",
                                "generator degree mismatch");
    G.elems_.push_back(perm_identity(degree));
    G.parent_.push_back(-1);
    G.via_gen_.push_back(-1);
    G.index_[G.elems_[0]] = 0;

    // register generators as elements first so generator ids are stable
    std::vector<int> gen_ids;
    for (auto& g : gens) {
        auto it = G.index_.find(g);
        if (it != G.index_.end()) {
            gen_ids.push_back(it->second);
            continue;
        }
        int id = (int)G.elems_.size();
        G.elems_.push_back(g);
        G.parent_.push_back(0);
        G.via_gen_.push_back((int)gen_ids.size());
        G.index_[g] = id;
        gen_ids.push_back(id);
    }
    G.gen_ids_ = gen_ids;

    // breadth-first closure: new = old * generator
    for (size_t head = 0; head < G.elems_.size(); ++head) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Perm w = perm_compose(G.elems_[head], gens[gi]);
            if (G.index_.count(w)) continue;
            if (G.elems_.size() >= order_cap)
                throw budget_error("GroupTooLarge", "group order exceeds the configured cap");
            int id = (int)G.elems_.size();
            G.elems_.push_back(std::move(w));
            G.parent_.push_back((int)head);
            G.via_gen_.push_back((int)gi);
            G.index_[G.elems_.back()] = id;
        }
    }
    G.build_index();
    return G;
}

Group Group::from_elements(int degree, std::vector<Perm> elements) {
    // greedy small generating set, then BFS from it for the standard layout
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::set<Perm> closed;
    std::vector<Perm> gens;
    closed.insert(perm_identity(degree));
    for (const auto& e : elements) {
        if (closed.count(e)) continue;
        gens.push_back(e);
        closed.clear();
        closed.insert(perm_identity(degree));
        std::vector<Perm> stack{perm_identity(degree)};
        while (!stack.empty()) {
            Perm cur = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                Perm w = perm_compose(cur, g);
                if (closed.insert(w).second) stack.push_back(w);
            }
        }
        if (closed.size() == elements.size()) break;
    }
    Group G = from_generators(degree, gens, elements.size() + 1);
    BLOCKDEF_CHECK_INTERNAL(G.order() == elements.size(), "InternalInconsistency",
                            "element set is not closed under multiplication");
    return G;
}

void Group::build_index() {
    u64 n = order();
    if (n <= 4096) {
        mult_table_.emplace();
        mult_table_->assign(n * n, 0);
        for (u64 a = 0; a < n; ++a)
            for (u64 b = 0; b < n; ++b) {
                Perm w = perm_compose(elems_[a], elems_[b]);
                auto it = index_.find(w);
                BLOCKDEF_CHECK_INTERNAL(it != index_.end(), "InternalInconsistency",
                                        "closure violated");
                (*mult_table_)[a * n + b] = it->second;
            }
    }
    find_inverses();
}

void Group::find_inverses() {
    inv_.assign(order(), -1);
    for (u64 a = 0; a < order(); ++a) {
        Perm p = perm_inverse(elems_[a]);
        auto it = index_.find(p);
        BLOCKDEF_CHECK_INTERNAL(it != index_.end(), "InternalInconsistency", "inverse missing");
        inv_[a] = it->second;
    }
}

int Group::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int Group::mul(int a, int b) const {
    if (mult_table_) return (*mult_table_)[(size_t)a * order() + b];
    Perm w = perm_compose(elems_[a], elems_[b]);
    auto it = index_.find(w);
    return it->second;
}

int Group::pow(int g, i64 k) const {
    u64 n = order_of(g);
    i64 r = k % (i64)n;
    if (r < 0) r += (i64)n;
    int acc = 0;
    int base = g;
    u64 e = (u64)r;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int Group::order_of(int g) const {
    int n = 1;
    int cur = g;
    while (cur != 0) {
        cur = mul(cur, g);
        ++n;
    }
    return n;
}

const std::vector<Group::ConjClass>& Group::classes() const {
    if (classes_) return *classes_;
    u64 n = order();
    class_of_.assign(n, -1);
    std::vector<ConjClass> cls;
    for (u64 start = 0; start < n; ++start) {
        if (class_of_[start] >= 0) continue;
        // orbit under conjugation
        int id = (int)cls.size();
        std::vector<int> members{(int)start};
        class_of_[start] = id;
        for (size_t head = 0; head < members.size(); ++head) {
            for (int gi : gen_ids_) {
                int c = conjugate(members[head], gi);
                if (class_of_[c] < 0) {
                    class_of_[c] = id;
                    members.push_back(c);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ConjClass cc;
        cc.rep = members[0];
        cc.size = members.size();
        cc.centralizer_order = n / cc.size;
        cc.element_order = order_of(members[0]);
        cc.members = std::move(members);
        cc.inverse_class = -1;
        cls.push_back(std::move(cc));
    }
    // canonical class order: (element order, class size, min element index)
    std::vector<int> ord(cls.size());
    for (size_t i = 0; i < ord.size(); ++i) ord[i] = (int)i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        if (cls[a].element_order != cls[b].element_order)
            return cls[a].element_order < cls[b].element_order;
        if (cls[a].size != cls[b].size) return cls[a].size < cls[b].size;
        return cls[a].rep < cls[b].rep;
    });
    std::vector<ConjClass> sorted;
    std::vector<int> relabel(cls.size());
    for (size_t i = 0; i < ord.size(); ++i) {
        relabel[ord[i]] = (int)i;
        sorted.push_back(std::move(cls[ord[i]]));
    }
    for (u64 g = 0; g < n; ++g) class_of_[g] = relabel[class_of_[g]];
    for (size_t i = 0; i < sorted.size(); ++i)
        sorted[i].inverse_class = class_of_[inv(sorted[i].rep)];
    classes_ = std::move(sorted);
    return *classes_;
}

int Group::class_of(int g) const {
    classes();
    return class_of_[g];
}

int Group::class_of_power(int cls, i64 k) const {
    const auto& c = classes()[cls];
    return class_of(pow(c.rep, k));
}

u64 Group::exponent() const {
    u64 e = 1;
    for (const auto& c : classes()) e = lcm_u64(e, (u64)c.element_order);
    return e;
}

std::vector<int> Group::centralizer_elements(int g) const {
    std::vector<int> out;
    for (u64 h = 0; h < order(); ++h)
        if (mul((int)h, g) == mul(g, (int)h)) out.push_back((int)h);
    return out;
}

Group Group::centralizer(int g) const {
    std::vector<Perm> ps;
    for (int h : centralizer_elements(g)) ps.push_back(elems_[h]);
    return from_elements(degree_, std::move(ps));
}

std::vector<int> Group::normalizer_elements(const std::vector<int>& subgroup) const {
    std::vector<char> in_sub(order(), 0);
    for (int s : subgroup) in_sub[s] = 1;
    std::vector<int> out;
    for (u64 h = 0; h < order(); ++h) {
        bool ok = true;
        for (int s : subgroup) {
            if (!in_sub[conjugate(s, (int)h)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back((int)h);
    }
    return out;
}

std::vector<int> Group::closure(std::vector<int> seed) const {
    std::vector<char> in(order(), 0);
    std::vector<int> out{0};
    in[0] = 1;
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            out.push_back(s);
        }
    for (size_t head = 0; head < out.size(); ++head) {
        for (size_t j = 0; j < out.size(); ++j) {
            int w = mul(out[head], out[j]);
            if (!in[w]) {
                in[w] = 1;
                out.push_back(w);
            }
            w = mul(out[j], out[head]);
            if (!in[w]) {
                in[w] = 1;
                out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Group Group::sylow(u64 p) const {
    u64 target = p_part(order(), p);
    std::vector<int> P{0};
    while ((u64)P.size() < target) {
        std::vector<int> N = normalizer_elements(P);
        std::vector<char> in_p(order(), 0);
        for (int s : P) in_p[s] = 1;
        int extend = -1;
        for (int h : N) {
            if (in_p[h]) continue;
            u64 o = (u64)order_of(h);
            if (p_part(o, p) == o) { // p-power order
                extend = h;
                break;
            }
        }
        BLOCKDEF_CHECK_INTERNAL(extend >= 0, "InternalInconsistency",
                                "sylow growth found no extension");
        std::vector<int> seed = P;
        seed.push_back(extend);
        P = closure(std::move(seed));
        BLOCKDEF_CHECK_INTERNAL(p_part(P.size(), p) == (u64)P.size(), "InternalInconsistency",
                                "sylow growth left the p-world");
    }
    std::vector<Perm> ps;
    for (int s : P) ps.push_back(elems_[s]);
    return from_elements(degree_, std::move(ps));
}

std::pair<int, int> Group::p_part_decomposition(int g, u64 p) const {
    u64 n = (u64)order_of(g);
    u64 pk = p_part(n, p);
    u64 m = n / pk;
    if (pk == 1) return {0, g};
    if (m == 1) return {g, 0};
    // 1 = s*pk + t*m: u = g^(t*m), v = g^(s*pk)
    u64 t = inv_mod(m % pk, pk);
    i64 u_exp = (i64)(t * m % n);
    int u = pow(g, u_exp);
    int v = mul(g, inv(u)); // g = u v with u,v commuting powers of g
    return {u, v};
}

std::vector<std::vector<int>> Group::all_subgroups() const {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> frontier{{0}};
    seen.insert({0});
    out.push_back({0});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& H : frontier) {
            for (u64 x = 1; x < order(); ++x) {
                if (std::binary_search(H.begin(), H.end(), (int)x)) continue;
                std::vector<int> seed = H;
                seed.push_back((int)x);
                auto K = closure(std::move(seed));
                if (seen.insert(K).second) {
                    out.push_back(K);
                    next.push_back(K);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace blockdef
