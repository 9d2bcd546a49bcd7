#include "blockdef/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "blockdef/errors.hpp"

namespace blockdef {

namespace {

// dense polynomials over GF(p) as coefficient vectors of u64, used only while
// building tables (hot arithmetic afterwards is pure table lookup)
using ZpPoly = std::vector<u64>;

void trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly poly_mul(const ZpPoly& a, const ZpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& m, u64 p) {
    // m monic
    while (a.size() >= m.size()) {
        u64 lead = a.back();
        size_t shift = a.size() - m.size();
        if (lead != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                u64 sub = (m[i] * lead) % p;
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

ZpPoly poly_powmod(ZpPoly base, u64 exp, const ZpPoly& m, u64 p) {
    ZpPoly r{1};
    base = poly_mod(std::move(base), m, p);
    while (exp) {
        if (exp & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        exp >>= 1;
    }
    return r;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for reduction
        u64 il = inv_mod(b.back(), p);
        ZpPoly bm = b;
        for (auto& c : bm) c = (c * il) % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const ZpPoly& f, u64 p) {
    u64 e = f.size() - 1;
    // x^(p^e) == x mod f, and x^(p^(e/r)) - x coprime to f for prime r | e
    ZpPoly x{0, 1};
    ZpPoly xq = poly_powmod(x, pow_u64(p, e), f, p);
    if (xq != poly_mod(x, f, p)) return false;
    for (auto [r, mult] : factorize(e)) {
        (void)mult;
        ZpPoly xs = poly_powmod(x, pow_u64(p, e / r), f, p);
        // xs - x
        ZpPoly d = xs;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        ZpPoly g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool is_primitive(const ZpPoly& f, u64 p) {
    if (!is_irreducible(f, p)) return false;
    u64 e = f.size() - 1;
    u64 q1 = pow_u64(p, e) - 1;
    ZpPoly x{0, 1};
    for (auto [r, mult] : factorize(q1)) {
        (void)mult;
        ZpPoly t = poly_powmod(x, q1 / r, f, p);
        if (t.size() == 1 && t[0] == 1) return false;
    }
    return true;
}

} // namespace

GFTable::GFTable(u64 p, u64 e) : p_(p), e_(e), q_(pow_u64(p, e)) {
    if (q_ > (1ull << 22))
        throw budget_error("FieldTooLarge", "GF(p^e) tables capped at 2^22 elements");

    if (e == 1) {
        u64 g = smallest_primitive_root(p);
        defining_ = {p - g, 1}; // x - g
    } else {
        // lexicographically least primitive monic polynomial: enumerate the
        // coefficient tuple (a_{e-1},...,a_0) as an ascending base-p counter
        u64 count = pow_u64(p, e);
        defining_.clear();
        for (u64 code = 0; code < count; ++code) {
            ZpPoly f(e + 1, 0);
            f[e] = 1;
            u64 c = code;
            for (size_t i = 0; i < e; ++i) { // i = 0 is a_0 (least significant digit)
                f[i] = c % p;
                c /= p;
            }
            if (is_primitive(f, p)) {
                defining_ = f;
                break;
            }
        }
        BLOCKDEF_CHECK_INTERNAL(!defining_.empty(), "InternalInconsistency",
                                "no primitive polynomial found");
    }

    // powers of the generator as packed coefficient vectors
    pow_packed_.assign(q_ - 1, 0);
    log_of_.assign(q_, -1);
    std::vector<u64> cur(e_, 0);
    if (e_ == 1) {
        u64 g = (p_ - defining_[0]) % p_;
        u64 x = 1;
        for (u64 k = 0; k < q_ - 1; ++k) {
            pow_packed_[k] = x;
            log_of_[x] = (int32_t)k;
            x = (x * g) % p_;
        }
    } else {
        cur[0] = 1; // x^0
        for (u64 k = 0; k < q_ - 1; ++k) {
            u64 packed = 0;
            for (size_t i = e_; i-- > 0;) packed = packed * p_ + cur[i];
            pow_packed_[k] = packed;
            log_of_[packed] = (int32_t)k;
            // multiply by x with reduction by the monic defining polynomial
            u64 carry = cur[e_ - 1];
            for (size_t i = e_ - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (carry) {
                for (size_t i = 0; i < e_; ++i) {
                    u64 sub = (defining_[i] * carry) % p_;
                    cur[i] = (cur[i] + p_ - sub) % p_;
                }
            }
        }
    }

    // zech_[k] = log(1 + x^k)
    zech_.assign(q_ - 1, -1);
    for (u64 k = 0; k < q_ - 1; ++k) {
        if (e_ == 1) {
            u64 val = (pow_packed_[k] + 1) % p_;
            zech_[k] = val == 0 ? -1 : log_of_[val];
        } else {
            u64 packed = pow_packed_[k];
            u64 low = packed % p_;
            u64 val = packed - low + (low + 1) % p_;
            zech_[k] = val == 0 ? -1 : log_of_[val];
        }
    }
}

const GFTable* GFTable::get(u64 p, u64 e) {
    static std::mutex mu;
    static std::map<std::pair<u64, u64>, std::unique_ptr<GFTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (!is_prime(p)) throw input_error("NotPrime", "field characteristic must be prime");
        if (e < 1) throw input_error("BadDegree", "extension degree must be >= 1");
        it = cache.emplace(key, std::unique_ptr<GFTable>(new GFTable(p, e))).first;
    }
    return it->second.get();
}

int32_t GFTable::add(int32_t a, int32_t b) const {
    if (a < 0) return b;
    if (b < 0) return a;
    // x^a + x^b = x^a (1 + x^(b-a))
    int64_t d = ((int64_t)b - a) % (int64_t)(q_ - 1);
    if (d < 0) d += (int64_t)(q_ - 1);
    int32_t z = zech_[(size_t)d];
    if (z < 0) return -1;
    return (int32_t)(((int64_t)a + z) % (int64_t)(q_ - 1));
}

int32_t GFTable::neg(int32_t a) const {
    if (a < 0 || p_ == 2) return a;
    // -1 = x^((q-1)/2)
    return (int32_t)(((int64_t)a + (q_ - 1) / 2) % (int64_t)(q_ - 1));
}

int32_t GFTable::from_coeffs(const std::vector<u64>& c) const {
    u64 packed = 0;
    for (size_t i = e_; i-- > 0;) packed = packed * p_ + (i < c.size() ? c[i] % p_ : 0);
    if (packed == 0) return -1;
    return log_of_[packed];
}

std::vector<u64> GFTable::to_coeffs(int32_t a) const {
    std::vector<u64> c(e_, 0);
    if (a < 0) return c;
    u64 packed = pow_packed_[(size_t)a];
    for (size_t i = 0; i < e_; ++i) {
        c[i] = packed % p_;
        packed /= p_;
    }
    return c;
}

int32_t GFTable::from_residue(u64 r) const {
    return from_coeffs({r % p_});
}

std::string Fq::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    auto c = coeffs();
    os << c[0];
    for (size_t i = 1; i < c.size(); ++i) os << "," << c[i];
    return os.str();
}

Fq embed(Fq a, const GFTable* big) {
    const GFTable* small = a.F;
    if (small == big) return a;
    BLOCKDEF_CHECK_INTERNAL(small->p() == big->p() && big->e() % small->e() == 0,
                            "InternalInconsistency", "no embedding between these fields");
    if (a.is_zero()) return Fq::zero(big);
    // image of the small generator: smallest-log root of the small defining
    // polynomial inside the big field; roots live in the order-(q_f - 1) subgroup
    u64 qf = small->q(), qe = big->q();
    u64 step = (qe - 1) / (qf - 1);
    const auto& def = small->defining_poly();
    for (u64 j = 0; j < qf - 1; ++j) {
        Fq cand(big, (int32_t)((j * step) % (qe - 1)));
        Fq acc = Fq::zero(big);
        Fq pw = Fq::one(big);
        for (size_t i = 0; i < def.size(); ++i) {
            Fq coef = Fq(big, big->from_residue(def[i]));
            acc += coef * pw;
            pw = pw * cand;
        }
        if (acc.is_zero()) {
            return cand.pow((u64)a.v);
        }
    }
    throw internal_error("InternalInconsistency", "embedding root not found");
}

} // namespace blockdef
