#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace blockdef {

using i64 = int64_t;
using u64 = uint64_t;

u64 pow_u64(u64 base, u64 exp);
u64 mul_mod(u64 a, u64 b, u64 mod);
u64 pow_mod(u64 base, u64 exp, u64 mod);
u64 inv_mod(u64 a, u64 mod); // requires gcd(a, mod) = 1

bool is_prime(u64 n);
u64 next_prime_geq(u64 n);

// (prime, exponent) pairs, primes ascending
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> divisors_sorted(u64 n);
u64 euler_phi(u64 n);
int valuation(u64 n, u64 p);       // largest k with p^k | n (n > 0)
u64 p_part(u64 n, u64 p);          // p^valuation(n,p)
u64 multiplicative_order(u64 a, u64 n); // order of a in (Z/n)*, gcd(a,n)=1
u64 smallest_primitive_root(u64 p);     // p prime

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }
inline u64 lcm_u64(u64 a, u64 b) { return std::lcm(a, b); }

} // namespace blockdef
