#include "blockdef/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "blockdef/errors.hpp"

namespace blockdef {

namespace {

using ZPoly = std::vector<mpz_class>; // ascending, trimmed

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// exact division of polynomials over Z (monic divisor)
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size()) {
        mpz_class lead = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        ztrim(a);
        if (a.size() < b.size()) break;
    }
    BLOCKDEF_CHECK_INTERNAL(a.empty(), "InternalInconsistency", "inexact cyclotomic division");
    return q;
}

const ZPoly& cyclotomic_poly(u64 M) {
    static std::mutex mu;
    static std::map<u64, ZPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    // compute iteratively over divisors so recursion shares cached entries
    for (u64 d : divisors_sorted(M)) {
        if (cache.count(d)) continue;
        if (d == 1) {
            cache[1] = ZPoly{mpz_class(-1), mpz_class(1)};
            continue;
        }
        ZPoly xn(d + 1, mpz_class(0));
        xn[0] = -1;
        xn[d] = 1;
        ZPoly q = xn;
        for (u64 dd : divisors_sorted(d)) {
            if (dd == d) continue;
            q = zdiv_exact(std::move(q), cache[dd]);
        }
        cache[d] = std::move(q);
    }
    return cache[M];
}

} // namespace

CycContext::CycContext(u64 M) : M_(M) {
    if (M > 200000) throw budget_error("CapExceeded", "cyclotomic conductor too large");
    phi_ = euler_phi(M);
    const ZPoly& f = cyclotomic_poly(M);
    BLOCKDEF_CHECK_INTERNAL(f.size() == phi_ + 1, "InternalInconsistency", "cyclotomic degree");

    u64 maxpow = std::max<u64>(M, 2 * phi_ - 1) + 1;
    rows_.resize(maxpow);
    // row 0 .. phi-1: standard basis
    for (u64 k = 0; k < phi_ && k < maxpow; ++k) {
        rows_[k].assign(phi_, mpz_class(0));
        rows_[k][k] = 1;
    }
    // zeta^phi = -(f_0 + f_1 zeta + ... + f_{phi-1} zeta^{phi-1}); iterate upward
    for (u64 k = phi_; k < maxpow; ++k) {
        const auto& prev = rows_[k - 1];
        std::vector<mpz_class> row(phi_, mpz_class(0));
        // multiply prev by zeta
        mpz_class carry = prev[phi_ - 1];
        for (u64 i = phi_ - 1; i > 0; --i) row[i] = prev[i - 1];
        row[0] = 0;
        if (carry != 0) {
            for (u64 i = 0; i < phi_; ++i) row[i] -= carry * f[i];
        }
        rows_[k] = std::move(row);
    }
}

const CycContext* CycContext::get(u64 M) {
    static std::mutex mu;
    static std::map<u64, std::unique_ptr<CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end()) {
        if (M == 0) throw input_error("BadConductor", "conductor must be positive");
        it = cache.emplace(M, std::unique_ptr<CycContext>(new CycContext(M))).first;
    }
    return it->second.get();
}

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

const mpq_class& Cyc::rational_value() const {
    BLOCKDEF_CHECK_INTERNAL(M_ == 1, "InternalInconsistency", "value is not rational");
    return c_[0];
}

bool Cyc::is_algebraic_integer() const {
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

bool Cyc::is_rational_integer() const { return M_ == 1 && c_[0].get_den() == 1; }

bool Cyc::lies_in_conductor(u64 Mprime) const {
    if (M_ == 1) return true;
    if (Mprime % M_ == 0) return true;
    // Q(zeta_m) = Q(zeta_2m) for odd m
    if (M_ % 2 == 1 && Mprime % (2 * M_) == 0) return true;
    if (M_ % 4 == 2 && Mprime % (M_ / 2) == 0) return true; // defensive; normalized values never hit this
    return false;
}

Cyc Cyc::root_of_unity(u64 M, u64 k) {
    k %= M;
    const CycContext* ctx = CycContext::get(M);
    const auto& row = ctx->power_row(k);
    std::vector<mpq_class> c(ctx->phi());
    for (u64 i = 0; i < ctx->phi(); ++i) c[i] = mpq_class(row[i]);
    return make_normalized(M, std::move(c));
}

std::vector<mpq_class> Cyc::embedded_coeffs(u64 N) const {
    // coefficients of this value inside Q(zeta_N), with M_ | N
    const CycContext* ctx = CycContext::get(N);
    std::vector<mpq_class> out(ctx->phi(), mpq_class(0));
    u64 step = N / M_;
    for (u64 i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = ctx->power_row(i * step);
        for (u64 j = 0; j < ctx->phi(); ++j) {
            if (row[j] != 0) out[j] += c_[i] * mpq_class(row[j]);
        }
    }
    return out;
}

Cyc Cyc::make_normalized(u64 M, std::vector<mpq_class> c) {
    // zero fast path
    bool zero = true;
    for (const auto& q : c)
        if (q != 0) {
            zero = false;
            break;
        }
    if (zero) return Cyc();
    if (M == 1) return Cyc(M, std::move(c));

    const CycContext* ctx = CycContext::get(M);

    // find the minimal divisor d of M whose pointwise Galois stabilizer
    // contains everything congruent to 1 mod d
    auto galois_raw = [&](const std::vector<mpq_class>& v, u64 a) {
        std::vector<mpq_class> out(ctx->phi(), mpq_class(0));
        for (u64 i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            const auto& row = ctx->power_row((i * a) % M);
            for (u64 j = 0; j < ctx->phi(); ++j)
                if (row[j] != 0) out[j] += v[i] * mpq_class(row[j]);
        }
        return out;
    };

    for (u64 d : divisors_sorted(M)) {
        if (d == M) break;
        bool fixed = true;
        for (u64 a = 1; a < M && fixed; ++a) {
            if (a % d != 1 % d) continue;
            if (gcd_u64(a, M) != 1) continue;
            if (a == 1) continue;
            if (galois_raw(c, a) != c) fixed = false;
        }
        if (!fixed) continue;
        // convert to the power basis of zeta_d: solve E y = c where column j
        // of E is zeta_d^j = zeta_M^(j M/d) expressed in the big basis
        u64 phid = euler_phi(d);
        u64 phiM = ctx->phi();
        u64 step = M / d;
        std::vector<std::vector<mpq_class>> aug(phiM, std::vector<mpq_class>(phid + 1, mpq_class(0)));
        for (u64 j = 0; j < phid; ++j) {
            const auto& row = ctx->power_row(j * step);
            for (u64 i = 0; i < phiM; ++i) aug[i][j] = mpq_class(row[i]);
        }
        for (u64 i = 0; i < phiM; ++i) aug[i][phid] = c[i];
        // gaussian elimination
        u64 r = 0;
        std::vector<u64> pivot_rows;
        std::vector<u64> pivot_cols;
        for (u64 col = 0; col < phid && r < phiM; ++col) {
            u64 sel = phiM;
            for (u64 i = r; i < phiM; ++i)
                if (aug[i][col] != 0) {
                    sel = i;
                    break;
                }
            if (sel == phiM) continue;
            std::swap(aug[sel], aug[r]);
            mpq_class iv = 1 / aug[r][col];
            for (u64 j = col; j <= phid; ++j) aug[r][j] *= iv;
            for (u64 i = 0; i < phiM; ++i) {
                if (i != r && aug[i][col] != 0) {
                    mpq_class f = aug[i][col];
                    for (u64 j = col; j <= phid; ++j) aug[i][j] -= f * aug[r][j];
                }
            }
            pivot_cols.push_back(col);
            ++r;
        }
        bool consistent = true;
        for (u64 i = r; i < phiM; ++i)
            if (aug[i][phid] != 0) {
                consistent = false;
                break;
            }
        BLOCKDEF_CHECK_INTERNAL(consistent && r == phid, "InternalInconsistency",
                                "conductor descent solve failed");
        std::vector<mpq_class> y(phid, mpq_class(0));
        for (u64 idx = 0; idx < pivot_cols.size(); ++idx) y[pivot_cols[idx]] = aug[idx][phid];
        if (d == 1) return Cyc(1, std::move(y));
        return Cyc(d, std::move(y));
    }
    return Cyc(M, std::move(c));
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    u64 N = lcm_u64(a.M_, b.M_);
    auto ca = a.embedded_coeffs(N);
    auto cb = b.embedded_coeffs(N);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return Cyc::make_normalized(N, std::move(ca));
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    u64 N = lcm_u64(a.M_, b.M_);
    auto ca = a.embedded_coeffs(N);
    auto cb = b.embedded_coeffs(N);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return Cyc::make_normalized(N, std::move(ca));
}

Cyc Cyc::operator-() const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q = -q;
    return Cyc(M_, std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.is_zero() || b.is_zero()) return Cyc();
    // rational scalar fast paths
    if (a.M_ == 1) {
        std::vector<mpq_class> c(b.c_);
        for (auto& q : c) q *= a.c_[0];
        return Cyc::make_normalized(b.M_, std::move(c));
    }
    if (b.M_ == 1) return b * a;
    u64 N = lcm_u64(a.M_, b.M_);
    const CycContext* ctx = CycContext::get(N);
    auto ca = a.embedded_coeffs(N);
    auto cb = b.embedded_coeffs(N);
    u64 phi = ctx->phi();
    std::vector<mpq_class> prod(2 * phi - 1, mpq_class(0));
    for (u64 i = 0; i < phi; ++i) {
        if (ca[i] == 0) continue;
        for (u64 j = 0; j < phi; ++j) {
            if (cb[j] == 0) continue;
            prod[i + j] += ca[i] * cb[j];
        }
    }
    std::vector<mpq_class> out(phi, mpq_class(0));
    for (u64 k = 0; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = ctx->power_row(k);
        for (u64 j = 0; j < phi; ++j)
            if (row[j] != 0) out[j] += prod[k] * mpq_class(row[j]);
    }
    return Cyc::make_normalized(N, std::move(out));
}

Cyc Cyc::galois(u64 a) const {
    if (M_ == 1) return *this;
    a %= M_;
    BLOCKDEF_CHECK_INTERNAL(gcd_u64(a, M_) == 1, "InternalInconsistency",
                            "galois exponent not coprime to conductor");
    const CycContext* ctx = CycContext::get(M_);
    std::vector<mpq_class> out(ctx->phi(), mpq_class(0));
    for (u64 i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = ctx->power_row((i * a) % M_);
        for (u64 j = 0; j < ctx->phi(); ++j)
            if (row[j] != 0) out[j] += c_[i] * mpq_class(row[j]);
    }
    return make_normalized(M_, std::move(out));
}

Cyc Cyc::conj() const { return M_ == 1 ? *this : galois(M_ - 1); }

Cyc Cyc::inverse() const {
    BLOCKDEF_CHECK_INTERNAL(!is_zero(), "SingularSystem", "inverting zero");
    if (M_ == 1) return Cyc(mpq_class(1) / c_[0]);
    // solve (this) * y = 1 via the multiplication matrix in the power basis
    const CycContext* ctx = CycContext::get(M_);
    u64 phi = ctx->phi();
    // column j: this * zeta^j
    std::vector<std::vector<mpq_class>> aug(phi, std::vector<mpq_class>(phi + 1, mpq_class(0)));
    for (u64 j = 0; j < phi; ++j) {
        for (u64 i = 0; i < phi; ++i) {
            if (c_[i] == 0) continue;
            const auto& row = ctx->power_row(i + j);
            for (u64 t = 0; t < phi; ++t)
                if (row[t] != 0) aug[t][j] += c_[i] * mpq_class(row[t]);
        }
    }
    aug[0][phi] = 1;
    u64 r = 0;
    std::vector<u64> pivots;
    for (u64 col = 0; col < phi && r < phi; ++col) {
        u64 sel = phi;
        for (u64 i = r; i < phi; ++i)
            if (aug[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == phi) continue;
        std::swap(aug[sel], aug[r]);
        mpq_class iv = 1 / aug[r][col];
        for (u64 j = 0; j <= phi; ++j) aug[r][j] *= iv;
        for (u64 i = 0; i < phi; ++i) {
            if (i != r && aug[i][col] != 0) {
                mpq_class f = aug[i][col];
                for (u64 j = 0; j <= phi; ++j) aug[i][j] -= f * aug[r][j];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    BLOCKDEF_CHECK_INTERNAL(r == phi, "SingularSystem", "non-invertible cyclotomic element");
    std::vector<mpq_class> y(phi);
    for (u64 idx = 0; idx < phi; ++idx) y[pivots[idx]] = aug[idx][phi];
    return make_normalized(M_, std::move(y));
}

std::string Cyc::str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (u64 i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i >= 1) os << "*z" << M_ << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

int Cyc::compare(const Cyc& a, const Cyc& b) {
    if (a.M_ != b.M_) return a.M_ < b.M_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Cyc teichmueller_lift(Fq a) {
    if (a.is_zero()) return Cyc::zero();
    u64 q = a.F->q();
    if (q == 2) return Cyc::one();
    return Cyc::root_of_unity(q - 1, (u64)a.v);
}

Fq reduce_mod_p(const Cyc& x, const GFTable* F) {
    u64 p = F->p();
    u64 M = x.conductor();
    int t = valuation(M, p);
    u64 m1 = M / pow_u64(p, (u64)t);
    BLOCKDEF_CHECK_INTERNAL(m1 == 1 || (F->q() - 1) % m1 == 0, "InternalInconsistency",
                            "residue field too small for this conductor");
    // image of zeta_M: p-power part to 1, prime-to-p part through the
    // multiplicative section. zeta_M = zeta_{p^t}^alpha * zeta_{m1}^beta.
    Fq img = Fq::one(F);
    if (m1 > 1) {
        u64 pt = pow_u64(p, (u64)t);
        u64 beta = (pt % m1 == 0) ? 0 : inv_mod(pt % m1, m1); // beta with p^t*beta = 1 mod m1
        if (t == 0) beta = 1;
        img = Fq(F, (int32_t)((beta * ((F->q() - 1) / m1)) % (F->q() - 1)));
    }
    Fq acc = Fq::zero(F);
    Fq pw = Fq::one(F);
    for (const auto& q : x.coeffs()) {
        if (q != 0) {
            mpz_class num = q.get_num(), den = q.get_den();
            mpz_class pz(static_cast<unsigned long>(p));
            mpz_class nm = num % pz, dm = den % pz;
            if (nm < 0) nm += pz;
            BLOCKDEF_CHECK_INTERNAL(dm != 0, "InternalInconsistency",
                                    "denominator divisible by p in mod-p reduction");
            u64 nv = nm.get_ui(), dv = dm.get_ui();
            Fq coef = Fq(F, F->from_residue(nv)) / Fq(F, F->from_residue(dv));
            acc += coef * pw;
        }
        pw = pw * img;
    }
    return acc;
}

} // namespace blockdef
