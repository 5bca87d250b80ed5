#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "cyclo/error.hpp"

namespace cyclo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::CharacteristicUnsupported: return "CharacteristicUnsupported";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NonResidue: return "NonResidue";
    case ErrorCode::CharacteristicFive: return "CharacteristicFive";
    case ErrorCode::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EvenR: return "EvenR";
    case ErrorCode::CharacteristicDividesR: return "CharacteristicDividesR";
    case ErrorCode::WitnessUnsolvable: return "WitnessUnsolvable";
    case ErrorCode::FamilyResidueMismatch: return "FamilyResidueMismatch";
    case ErrorCode::FamilyUnavailable: return "FamilyUnavailable";
    case ErrorCode::NBelowValidity: return "NBelowValidity";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

namespace nt {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

int v2(u64 x) { return x == 0 ? 64 : __builtin_ctzll(x); }

int v2_pow_minus_one(u64 q, u64 k) {
  u64 r = 1;
  for (u64 b = q; k; k >>= 1, b *= b)
    if (k & 1) r *= b;
  return v2(r - 1);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().first == p)
      ++result.back().second;
    else
      result.emplace_back(p, 1);
  }
  return result;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(u64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

u64 mult_order_mod(u64 q, u64 n) {
  if (n == 1) return 1;
  u64 order = euler_phi(n);
  for (u64 p : prime_divisors(order)) {
    while (order % p == 0 && powmod(q, order / p, n) == 1) order /= p;
  }
  return order;
}

u64 checked_pow(u64 q, u64 k) {
  u64 r = 1;
  for (u64 i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, q, &r))
      throw Error(ErrorCode::Unsupported, "integer power exceeds 64 bits");
  }
  return r;
}

}  // namespace nt
}  // namespace cyclo
