#include "cyclo/fpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly_modulus.hpp"

namespace cyclo {

Poly::Poly(FieldPtr ctx, std::vector<Coeff> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= ctx_->q()) throw Error(ErrorCode::Unsupported, "coefficient encoding out of range");
  trim();
}

Poly Poly::x(FieldPtr ctx) { return monomial(std::move(ctx), 1, 1); }

Poly Poly::constant(FieldPtr ctx, Coeff c) { return Poly(std::move(ctx), std::vector<Coeff>{c}); }

Poly Poly::monomial(FieldPtr ctx, Coeff c, std::size_t k) {
  std::vector<Coeff> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(ctx), std::move(v));
}

Poly Poly::from_ints(FieldPtr ctx, const std::vector<std::int64_t>& coeffs) {
  std::vector<Coeff> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(ctx->from_int_raw(c));
  return Poly(std::move(ctx), std::move(v));
}

void Poly::trim() { kernel::trim(c_); }

std::size_t Poly::weight() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Coeff c) { return c != 0; }));
}

bool Poly::same_field(const Poly& other) const {
  return ctx_ == other.ctx_ || (ctx_ && other.ctx_ && ctx_->same_as(*other.ctx_));
}

void Poly::check_same(const Poly& other) const {
  if (!same_field(other)) throw Error(ErrorCode::ContextMismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(ctx_->inv(c_.back()));
}

Poly Poly::scaled(Coeff s) const {
  std::vector<Coeff> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->mul(c_[i], s);
  return Poly(ctx_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ctx_);
  std::vector<Coeff> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = ctx_->mul(c_[i], ctx_->from_int_raw(static_cast<std::int64_t>(i % ctx_->p())));
  return Poly(ctx_, std::move(v));
}

FieldElement Poly::eval(const FieldElement& at) const {
  Coeff acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ctx_->add(ctx_->mul(acc, at.value()), *it);
  return FieldElement(*ctx_, acc);
}

Poly Poly::operator-() const {
  std::vector<Coeff> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->neg(c_[i]);
  return Poly(ctx_, std::move(v));
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = ctx_->add(c_[i], rhs.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = ctx_->sub(c_[i], rhs.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  check_same(rhs);
  c_ = kernel::mul(*ctx_, c_, rhs.c_);
  trim();
  return *this;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i > 0) os << (c_[i] != 1 ? "*x" : "x");
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

DivRem divrem(const Poly& f, const Poly& g) {
  f.check_same(g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& F = f.field();
  std::vector<Coeff> r = f.coeffs();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  if (r.size() <= n) return {Poly(f.ctx()), f};
  const Coeff lead_inv = F.inv(g.lead());
  std::vector<std::pair<std::size_t, Coeff>> tail;
  for (std::size_t j = 0; j < n; ++j)
    if (g[j] != 0) tail.emplace_back(j, g[j]);
  std::vector<Coeff> quot(r.size() - n, 0);
  for (std::size_t k = r.size(); k-- > n;) {
    if (r[k] == 0) continue;
    const Coeff c = F.mul(r[k], lead_inv);
    quot[k - n] = c;
    r[k] = 0;
    for (const auto& [j, gj] : tail) r[k - n + j] = F.sub(r[k - n + j], F.mul(c, gj));
  }
  r.resize(n);
  return {Poly(f.ctx(), std::move(quot)), Poly(f.ctx(), std::move(r))};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).remainder; }

Poly gcd(const Poly& f, const Poly& g) {
  f.check_same(g);
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  base.check_same(modulus);
  if (modulus.is_zero()) throw Error(ErrorCode::DivisionByZero, "powmod with zero modulus");
  if (modulus.degree() == 0) return Poly(base.ctx());
  return PolyModulus(modulus).pow(base, exponent);
}

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

Poly product(std::span<const Poly> factors, const FieldPtr& ctx) {
  if (factors.empty()) return Poly::constant(ctx, 1);
  std::vector<Poly> level(factors.begin(), factors.end());
  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

std::uint64_t euler_phi(std::uint64_t n) { return nt::euler_phi(n); }
int moebius(std::uint64_t n) { return nt::moebius(n); }

Poly cyclotomic(const FieldPtr& ctx, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cyclotomic index must be positive");
  if (n % ctx->p() == 0)
    throw Error(ErrorCode::CharacteristicDividesN, "characteristic divides " + std::to_string(n));
  const auto& F = *ctx;
  const Coeff one = 1;
  std::vector<Coeff> acc{one};
  std::vector<std::uint64_t> denominators;
  for (auto d : nt::divisors(n)) {
    const int mu = nt::moebius(n / d);
    if (mu == 1) {
      // acc *= (x^d - 1)
      std::vector<Coeff> next(acc.size() + d, 0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] = F.sub(next[i], acc[i]);
        next[i + d] = F.add(next[i + d], acc[i]);
      }
      acc = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(d);
    }
  }
  for (auto d : denominators) {
    // Exact division by x^d - 1, top down: b_{k-d} = a_k + b_k.
    const std::size_t deg = acc.size() - 1;
    std::vector<Coeff> quot(deg - d + 1, 0);
    std::vector<Coeff> rem = acc;
    for (std::size_t k = deg; k >= d; --k) {
      const Coeff c = rem[k];
      if (c == 0) continue;
      quot[k - d] = c;
      rem[k] = 0;
      rem[k - d] = F.add(rem[k - d], c);
    }
    for (std::size_t k = 0; k < d; ++k)
      if (rem[k] != 0) throw Error(ErrorCode::Unsupported, "inexact cyclotomic quotient");
    acc = std::move(quot);
  }
  return Poly(ctx, std::move(acc));
}

Poly negate_arg(const Poly& f) {
  std::vector<Coeff> v = f.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = f.field().neg(v[i]);
  return Poly(f.ctx(), std::move(v));
}

Poly compose_power(const Poly& f, std::uint64_t t) {
  if (t == 0) throw Error(ErrorCode::ZeroInput, "compose_power needs t >= 1");
  if (f.is_zero() || t == 1) return f;
  std::vector<Coeff> v(static_cast<std::size_t>(f.degree()) * t + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i * t] = f.coeffs()[i];
  return Poly(f.ctx(), std::move(v));
}

// Above this degree Frobenius powers are reached by composition instead of stepping.
constexpr std::uint64_t kComposeDegree = 64;

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() < 1) throw Error(ErrorCode::ZeroDegree, "irreducibility needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NonMonic, "irreducibility test expects a monic polynomial");
  const auto n = static_cast<std::uint64_t>(f.degree());
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const PolyModulus mod(f);
  const Poly x = Poly::x(f.ctx());
  std::vector<std::uint64_t> checkpoints;
  for (auto ell : nt::prime_divisors(n)) checkpoints.push_back(n / ell);
  if (n >= kComposeDegree) {
    const auto doublings = mod.frobenius_doublings(64 - __builtin_clzll(n));
    for (auto c : checkpoints)
      if (!gcd(mod.frobenius_power(doublings, c) - x, f).is_one()) return false;
    return mod.frobenius_power(doublings, n) == x;
  }
  Poly h = x;
  for (std::uint64_t i = 1; i <= n; ++i) {
    h = mod.frobenius(h);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      if (!gcd(h - x, f).is_one()) return false;
    }
  }
  return h == x;
}

bool has_order(const Poly& f, std::uint64_t e) {
  if (f.degree() < 1 || e == 0) return false;
  const PolyModulus mod(f);
  const Poly x = Poly::x(f.ctx());
  if (!mod.pow(x, e).is_one()) return false;
  for (auto ell : nt::prime_divisors(e))
    if (mod.pow(x, e / ell).is_one()) return false;
  return true;
}

std::uint64_t poly_order(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::ZeroDegree, "order needs degree >= 1");
  if (f[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "order undefined when f(0) = 0");
  const Poly g = f.monic();
  if (!is_irreducible(g)) throw Error(ErrorCode::NotIrreducible, "order computed for irreducible f only");
  const std::uint64_t group = nt::checked_pow(f.field().q(), static_cast<std::uint64_t>(f.degree())) - 1;
  const PolyModulus mod(g);
  const Poly x = Poly::x(f.ctx());
  std::uint64_t order = group;
  for (auto [ell, e] : nt::factorize(group)) {
    while (order % ell == 0 && mod.pow(x, order / ell).is_one()) order /= ell;
  }
  return order;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

void canonical_sort(std::vector<Poly>& polys) { std::sort(polys.begin(), polys.end(), canonical_less); }

}  // namespace cyclo
