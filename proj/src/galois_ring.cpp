#include "blockdef/galois_ring.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "blockdef/errors.hpp"

namespace blockdef {

GRContext::GRContext(u64 p, int m, u64 e) : p_(p), m_(m), e_(e) {
    pm_ = pow_u64(p, (u64)m);
    BLOCKDEF_CHECK_INTERNAL(pm_ < (1ull << 31), "CapExceeded", "p^m too large for GR arithmetic");
    k_ = GFTable::get(p, e);
    defining_ = k_->defining_poly(); // entries 0..p-1, reused verbatim in Z/p^m
}

const GRContext* GRContext::get(u64 p, int m, u64 e) {
    static std::mutex mu;
    static std::map<std::tuple<u64, int, u64>, std::unique_ptr<GRContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (m < 1) throw input_error("BadPrecision", "Galois ring precision must be >= 1");
        it = cache.emplace(key, std::unique_ptr<GRContext>(new GRContext(p, m, e))).first;
    }
    return it->second.get();
}

GRElem::GRElem(const GRContext* ctx, std::vector<u64> coeffs) : R(ctx), c(std::move(coeffs)) {
    c.resize(R->e(), 0);
    for (auto& a : c) a %= R->modulus();
}

GRElem GRElem::zero(const GRContext* R) { return GRElem(R, {}); }

GRElem GRElem::one(const GRContext* R) { return GRElem(R, {1}); }

GRElem GRElem::from_integer(const GRContext* R, u64 n) { return GRElem(R, {n % R->modulus()}); }

GRElem GRElem::x(const GRContext* R) {
    std::vector<u64> v(R->e(), 0);
    if (R->e() == 1) {
        // degree-1 defining polynomial x - g: the class of x is g
        v[0] = (R->p() - R->defining_poly()[0] % R->p()) % R->p();
    } else {
        v[1] = 1;
    }
    return GRElem(R, v);
}

bool GRElem::is_zero() const {
    for (u64 a : c)
        if (a) return false;
    return true;
}

bool GRElem::is_unit() const { return !residue().is_zero(); }

Fq GRElem::residue() const {
    std::vector<u64> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] % R->p();
    return Fq(R->residue_field(), R->residue_field()->from_coeffs(r));
}

GRElem GRElem::reduce_precision(int new_m) const {
    const GRContext* S = GRContext::get(R->p(), new_m, R->e());
    std::vector<u64> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] % S->modulus();
    return GRElem(S, r);
}

GRElem GRElem::lift_residue(const GRContext* R, Fq a) {
    return GRElem(R, R->residue_field()->to_coeffs(a.v));
}

GRElem operator+(const GRElem& a, const GRElem& b) {
    std::vector<u64> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (a.c[i] + b.c[i]) % a.R->modulus();
    return GRElem(a.R, r);
}

GRElem operator-(const GRElem& a, const GRElem& b) {
    std::vector<u64> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (a.c[i] + a.R->modulus() - b.c[i]) % a.R->modulus();
    return GRElem(a.R, r);
}

GRElem GRElem::operator-() const {
    std::vector<u64> r(c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (R->modulus() - c[i]) % R->modulus();
    return GRElem(R, r);
}

GRElem operator*(const GRElem& a, const GRElem& b) {
    const GRContext* R = a.R;
    u64 mod = R->modulus();
    size_t e = R->e();
    std::vector<u64> prod(2 * e - 1, 0);
    for (size_t i = 0; i < e; ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % mod;
    }
    // reduce by the monic defining polynomial
    const auto& f = R->defining_poly();
    for (size_t d = prod.size(); d-- > e;) {
        u64 lead = prod[d];
        if (!lead) continue;
        prod[d] = 0;
        for (size_t i = 0; i < e; ++i) {
            u64 sub = (f[i] * lead) % mod;
            prod[d - e + i] = (prod[d - e + i] + mod - sub) % mod;
        }
    }
    prod.resize(e);
    return GRElem(R, prod);
}

GRElem GRElem::pow(u64 k) const {
    GRElem r = GRElem::one(R);
    GRElem b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

GRElem GRElem::inverse() const {
    BLOCKDEF_CHECK_INTERNAL(is_unit(), "SingularSystem", "inverting a non-unit in GR(p^m,e)");
    // Newton lift of the residue inverse: y <- y(2 - xy) doubles p-adic accuracy
    Fq r = residue();
    GRElem y = lift_residue(R, Fq::one(R->residue_field()) / r);
    GRElem two = GRElem::from_integer(R, 2);
    for (int i = 0; i < R->m() + 1; ++i) y = y * (two - *this * y);
    return y;
}

GRElem GRElem::teichmuller() const {
    // iterate z -> z^(p^e); the limit is the unique root-of-unity (or zero)
    // representative congruent to this element's residue
    GRElem z = lift_residue(R, residue());
    u64 q = pow_u64(R->p(), R->e());
    for (int i = 0; i < R->m(); ++i) z = z.pow(q);
    return z;
}

} // namespace blockdef
