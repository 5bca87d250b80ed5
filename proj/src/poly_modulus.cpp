#include "cyclo/poly_modulus.hpp"

#include <algorithm>
#include <optional>

namespace cyclo {

namespace kernel {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;

void schoolbook(const FieldContext& F, const Coeff* a, std::size_t na, const Coeff* b, std::size_t nb,
                Coeff* out) {
  if (F.is_prime_field() && F.p() < (1ULL << 20)) {
    // p^2 * min(na, nb) stays far below 2^64, so reduce once per output slot.
    std::vector<std::uint64_t> acc(na + nb - 1, 0);
    std::vector<std::uint32_t> bb(b, b + nb);
    for (std::size_t i = 0; i < na; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* dst = acc.data() + i;
      for (std::size_t j = 0; j < nb; ++j) dst[j] += ai * bb[j];
    }
    const std::uint64_t p = F.p();
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k] % p;
    return;
  }
  std::fill(out, out + na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

void add_into(const FieldContext& F, Coeff* dst, const Coeff* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = F.add(dst[i], src[i]);
}

void sub_into(const FieldContext& F, Coeff* dst, const Coeff* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = F.sub(dst[i], src[i]);
}

// out has room for 2n - 1 coefficients; a and b both have n.
void karatsuba(const FieldContext& F, const Coeff* a, const Coeff* b, std::size_t n, Coeff* out) {
  if (n <= kKaratsubaThreshold) {
    schoolbook(F, a, n, b, n, out);
    return;
  }
  const std::size_t m = (n + 1) / 2;  // low half size
  const std::size_t h = n - m;        // high half size, h <= m
  std::fill(out, out + 2 * n - 1, 0);

  std::vector<Coeff> z0(2 * m - 1), z2(2 * h - 1), z1(2 * m - 1);
  karatsuba(F, a, b, m, z0.data());
  if (h == m) {
    karatsuba(F, a + m, b + m, h, z2.data());
  } else {
    std::vector<Coeff> ah(a + m, a + n), bh(b + m, b + n);
    ah.push_back(0);
    bh.push_back(0);
    std::vector<Coeff> t(2 * m - 1);
    karatsuba(F, ah.data(), bh.data(), m, t.data());
    std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(z2.size()), z2.begin());
  }
  std::vector<Coeff> sa(a, a + m), sb(b, b + m);
  add_into(F, sa.data(), a + m, h);
  add_into(F, sb.data(), b + m, h);
  karatsuba(F, sa.data(), sb.data(), m, z1.data());
  sub_into(F, z1.data(), z0.data(), z0.size());
  sub_into(F, z1.data(), z2.data(), z2.size());

  add_into(F, out, z0.data(), z0.size());
  add_into(F, out + m, z1.data(), z1.size());
  add_into(F, out + 2 * m, z2.data(), z2.size());
}

// Exact integer convolution modulo an NTT-friendly prime. Used for prime
// fields whenever every product coefficient n (p - 1)^2 stays below kNttPrime.
constexpr std::uint64_t kNttPrime = 4179340454199820289ULL;  // 29 * 2^57 + 1
constexpr std::uint64_t kNttRoot = 3;
constexpr std::size_t kNttThreshold = 96;

constexpr std::uint64_t ntt_prime_inverse() {
  std::uint64_t inv = kNttPrime;  // Newton iteration for P^-1 mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - kNttPrime * inv;
  return inv;
}

constexpr std::uint64_t ntt_r2() {
  const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % kNttPrime;
  return static_cast<std::uint64_t>(r * r % kNttPrime);
}

class Montgomery {
 public:
  static constexpr std::uint64_t P = kNttPrime;

  static constexpr std::uint64_t kNegInv = ~ntt_prime_inverse() + 1;
  static constexpr std::uint64_t kR2 = ntt_r2();

  static std::uint64_t reduce(unsigned __int128 t) {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * kNegInv;
    const std::uint64_t u = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * P) >> 64);
    return u >= P ? u - P : u;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  static std::uint64_t to(std::uint64_t a) { return mul(a, kR2); }
  static std::uint64_t from(std::uint64_t a) { return reduce(a); }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
  static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = to(1);
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
};

// In-place transform of Montgomery-form values; size is a power of two.
void ntt(std::vector<std::uint64_t>& a, bool inverse) {
  using M = Montgomery;
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint64_t> w;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t step = M::pow(M::to(kNttRoot), (M::P - 1) / len);
    if (inverse) step = M::pow(step, M::P - 2);
    const std::size_t half = len / 2;
    w.assign(half, 0);
    w[0] = M::to(1);
    for (std::size_t k = 1; k < half; ++k) w[k] = M::mul(w[k - 1], step);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint64_t u = a[i + k];
        const std::uint64_t v = M::mul(a[i + k + half], w[k]);
        a[i + k] = M::add(u, v);
        a[i + k + half] = M::sub(u, v);
      }
    }
  }
  if (inverse) {
    const std::uint64_t n_inv = M::pow(M::to(n % M::P), M::P - 2);
    for (auto& x : a) x = M::mul(x, n_inv);
  }
}

bool ntt_applicable(const FieldContext& F, std::size_t shorter) {
  if (!F.is_prime_field() || shorter < kNttThreshold) return false;
  const unsigned __int128 pm1 = F.p() - 1;
  return static_cast<unsigned __int128>(shorter) * pm1 * pm1 < kNttPrime;
}

void ntt_mul(const FieldContext& F, const std::vector<Coeff>& a, const std::vector<Coeff>& b, std::vector<Coeff>& out) {
  using M = Montgomery;
  std::size_t size = 1;
  while (size < a.size() + b.size() - 1) size <<= 1;
  std::vector<std::uint64_t> fa(size, 0), fb(size, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = M::to(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = M::to(b[i]);
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t i = 0; i < size; ++i) fa[i] = M::mul(fa[i], fb[i]);
  ntt(fa, true);
  const std::uint64_t p = F.p();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = M::from(fa[i]) % p;
}

}  // namespace

void trim(std::vector<Coeff>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Coeff> mul(const FieldContext& F, const std::vector<Coeff>& a, const std::vector<Coeff>& b) {
  if (a.empty() || b.empty()) return {};
  const std::vector<Coeff>& lo = a.size() <= b.size() ? a : b;
  const std::vector<Coeff>& hi = a.size() <= b.size() ? b : a;
  const std::size_t n = lo.size();
  std::vector<Coeff> out(a.size() + b.size() - 1, 0);
  if (ntt_applicable(F, n)) {
    ntt_mul(F, a, b, out);
    return out;
  }
  if (n <= kKaratsubaThreshold) {
    schoolbook(F, hi.data(), hi.size(), lo.data(), n, out.data());
    return out;
  }
  // Cut the longer operand into chunks of the shorter length.
  std::vector<Coeff> chunk(n), prod(2 * n - 1);
  for (std::size_t off = 0; off < hi.size(); off += n) {
    const std::size_t len = std::min(n, hi.size() - off);
    std::fill(chunk.begin(), chunk.end(), 0);
    std::copy(hi.begin() + static_cast<std::ptrdiff_t>(off),
              hi.begin() + static_cast<std::ptrdiff_t>(off + len), chunk.begin());
    karatsuba(F, chunk.data(), lo.data(), n, prod.data());
    const std::size_t span = std::min(prod.size(), out.size() - off);
    add_into(F, out.data() + off, prod.data(), span);
  }
  return out;
}

}  // namespace kernel

namespace {

constexpr std::size_t kSparseTerms = 24;
constexpr int kBarrettMinDegree = 64;

std::vector<Coeff> series_inverse(const FieldContext& F, const std::vector<Coeff>& f, std::size_t len) {
  // Newton iteration g <- g (2 - f g) mod x^k.
  std::vector<Coeff> g{F.inv(f.at(0))};
  std::size_t k = 1;
  while (k < len) {
    k = std::min(2 * k, len);
    std::vector<Coeff> fk(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(std::min(k, f.size())));
    auto fg = kernel::mul(F, fk, g);
    fg.resize(k, 0);
    for (auto& c : fg) c = F.neg(c);
    fg[0] = F.add(fg[0], 2 % F.p());
    g = kernel::mul(F, g, fg);
    g.resize(k, 0);
  }
  g.resize(len, 0);
  return g;
}

}  // namespace

PolyModulus::PolyModulus(Poly f) : f_(std::move(f)) {
  if (f_.degree() < 1) throw Error(ErrorCode::ZeroDegree, "modulus must have positive degree");
  if (!f_.is_monic()) f_ = f_.monic();
  const auto& F = f_.field();
  const auto& c = f_.coeffs();
  const std::size_t n = c.size() - 1;
  for (std::size_t j = 0; j < n; ++j)
    if (c[j] != 0) tail_.emplace_back(j, F.neg(c[j]));
  sparse_ = tail_.size() <= kSparseTerms || f_.degree() < kBarrettMinDegree;
  if (!sparse_) {
    std::vector<Coeff> rev(c.rbegin(), c.rend());
    rev_inv_ = series_inverse(F, rev, n - 1);
  }
}

void PolyModulus::reduce_in_place(std::vector<Coeff>& a) const {
  const auto& F = f_.field();
  const std::size_t n = static_cast<std::size_t>(f_.degree());
  kernel::trim(a);
  if (a.size() <= n) return;
  if (sparse_ || a.size() > 2 * n - 1) {
    for (std::size_t k = a.size() - 1; k >= n; --k) {
      const Coeff top = a[k];
      if (top == 0) continue;
      a[k] = 0;
      const std::size_t base = k - n;
      for (const auto& [j, negc] : tail_) a[base + j] = F.add(a[base + j], F.mul(top, negc));
    }
    a.resize(n);
    kernel::trim(a);
    return;
  }
  // Barrett: quotient from the reversed high part times the precomputed inverse.
  const std::size_t k = a.size() - n;  // number of quotient coefficients
  std::vector<Coeff> rev_hi(a.rbegin(), a.rbegin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Coeff> inv(rev_inv_.begin(), rev_inv_.begin() + static_cast<std::ptrdiff_t>(k));
  auto rq = kernel::mul(F, rev_hi, inv);
  rq.resize(k, 0);
  std::vector<Coeff> quot(rq.rbegin(), rq.rend());
  kernel::trim(quot);
  auto qf = kernel::mul(F, quot, f_.coeffs());
  a.resize(n);
  for (std::size_t i = 0; i < n && i < qf.size(); ++i) a[i] = F.sub(a[i], qf[i]);
  kernel::trim(a);
}

Poly PolyModulus::reduce(const Poly& a) const {
  f_.check_same(a);
  auto c = a.coeffs();
  reduce_in_place(c);
  return Poly(f_.ctx(), std::move(c));
}

Poly PolyModulus::mul(const Poly& a, const Poly& b) const {
  auto c = kernel::mul(f_.field(), a.coeffs(), b.coeffs());
  reduce_in_place(c);
  return Poly(f_.ctx(), std::move(c));
}

Poly PolyModulus::pow(const Poly& base, std::uint64_t exponent) const {
  Poly result = Poly::constant(f_.ctx(), 1);
  if (f_.degree() == 0) return Poly(f_.ctx());
  Poly b = reduce(base);
  if (exponent == 0) return result;
  int top = 63 - __builtin_clzll(exponent);
  result = b;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = sqr(result);
    if ((exponent >> bit) & 1) result = mul(result, b);
  }
  return result;
}

Poly PolyModulus::compose(const Poly& g, const Poly& h) const {
  f_.check_same(g);
  f_.check_same(h);
  const auto& F = f_.field();
  const auto n = static_cast<std::size_t>(f_.degree());
  if (g.is_zero() || n == 0) return Poly(f_.ctx());
  const Poly hr = reduce(h);
  const auto len = g.coeffs().size();
  std::size_t m = 1;
  while (m * m < len) ++m;

  // Baby steps h^0 .. h^m.
  std::vector<std::vector<Coeff>> H(m + 1);
  Poly acc = Poly::constant(f_.ctx(), 1);
  for (std::size_t i = 0; i <= m; ++i) {
    H[i] = acc.coeffs();
    H[i].resize(n, 0);
    if (i < m) acc = mul(acc, hr);
  }

  // Block j of g combined with the baby steps; lazy sums for small primes.
  const bool lazy = F.is_prime_field() && F.p() < (std::uint64_t{1} << 40);
  const std::size_t blocks = (len + m - 1) / m;
  std::vector<Poly> B;
  B.reserve(blocks);
  std::vector<unsigned __int128> wide(lazy ? n : 0);
  for (std::size_t j = 0; j < blocks; ++j) {
    std::vector<Coeff> out(n, 0);
    if (lazy) std::fill(wide.begin(), wide.end(), 0);
    for (std::size_t i = 0; i < m && j * m + i < len; ++i) {
      const Coeff c = g[j * m + i];
      if (c == 0) continue;
      const auto& row = H[i];
      if (lazy) {
        for (std::size_t k = 0; k < n; ++k) wide[k] += static_cast<unsigned __int128>(c) * row[k];
      } else {
        for (std::size_t k = 0; k < n; ++k) out[k] = F.add(out[k], F.mul(c, row[k]));
      }
    }
    if (lazy)
      for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Coeff>(wide[k] % F.p());
    B.emplace_back(f_.ctx(), std::move(out));
  }

  // Giant steps: Horner in h^m.
  const Poly giant(f_.ctx(), H[m]);
  Poly result = B.back();
  for (std::size_t j = blocks - 1; j-- > 0;) result = mul(result, giant) + B[j];
  return result;
}

std::vector<Poly> PolyModulus::frobenius_doublings(int count) const {
  std::vector<Poly> out;
  if (count <= 0) return out;
  out.push_back(frobenius(reduce(Poly::x(f_.ctx()))));
  for (int i = 1; i < count; ++i) out.push_back(compose(out.back(), out.back()));
  return out;
}

Poly PolyModulus::frobenius_power(const std::vector<Poly>& doublings, std::uint64_t k) const {
  std::optional<Poly> result;
  for (std::size_t i = 0; k != 0; ++i, k >>= 1) {
    if (!(k & 1)) continue;
    if (i >= doublings.size()) throw Error(ErrorCode::Unsupported, "not enough Frobenius doublings");
    result = result ? compose(doublings[i], *result) : doublings[i];
  }
  return result ? *result : reduce(Poly::x(f_.ctx()));
}

}  // namespace cyclo
