#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Machine-word integer helpers shared by the field and polynomial layers.
namespace cyclo::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);

/// 2-adic valuation; v2(0) is defined as 64.
int v2(u64 x);

/// v2(q^k - 1) computed with wrapping arithmetic, exact while the result is below 64.
int v2_pow_minus_one(u64 q, u64 k);

bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);
u64 gcd(u64 a, u64 b);

/// Least d >= 1 with q^d = 1 (mod n); requires gcd(q, n) = 1.
u64 mult_order_mod(u64 q, u64 n);

/// Checked q^k; throws Error(Unsupported) on overflow.
u64 checked_pow(u64 q, u64 k);

}  // namespace cyclo::nt
