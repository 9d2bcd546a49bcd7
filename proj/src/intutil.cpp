#include "blockdef/intutil.hpp"

#include <algorithm>

namespace blockdef {

u64 pow_u64(u64 base, u64 exp) {
    u64 r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

u64 mul_mod(u64 a, u64 b, u64 mod) {
    return static_cast<u64>((__uint128_t)a * b % mod);
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 mod) {
    // extended euclid
    i64 t = 0, newt = 1;
    i64 r = (i64)mod, newr = (i64)(a % mod);
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (t < 0) t += (i64)mod;
    return (u64)t;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime_geq(u64 n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors_sorted(u64 n) {
    std::vector<u64> divs{1};
    for (auto [p, e] : factorize(n)) {
        size_t k = divs.size();
        u64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < k; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int valuation(u64 n, u64 p) {
    int v = 0;
    while (n % p == 0) n /= p, ++v;
    return v;
}

u64 p_part(u64 n, u64 p) { return pow_u64(p, (u64)valuation(n, p)); }

u64 multiplicative_order(u64 a, u64 n) {
    u64 ord = euler_phi(n);
    for (auto [q, e] : factorize(ord)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a, ord / q, n) == 1)
                ord /= q;
            else
                break;
        }
    }
    return ord;
}

u64 smallest_primitive_root(u64 p) {
    if (p == 2) return 1;
    u64 target = p - 1;
    auto fac = factorize(target);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : fac) {
            if (pow_mod(g, target / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 0; // unreachable for prime p
}

} // namespace blockdef
