#include "cyclo/ffield.hpp"

#include <algorithm>
#include <string>

#include "cyclo/fpoly.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

constexpr std::uint64_t kLogTableLimit = 1u << 20;
constexpr std::uint64_t kAddTableLimit = 1024;

bool modulus_is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& coeffs) {
  auto prime = FieldContext::make(p);
  std::vector<Coeff> c(coeffs.begin(), coeffs.end());
  return is_irreducible(Poly(prime, std::move(c)));
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldContext& ctx, Coeff value) : ctx_(&ctx), value_(value) {}

std::vector<std::uint64_t> FieldElement::digits() const {
  std::vector<std::uint64_t> d(ctx_->m());
  Coeff v = value_;
  for (auto& digit : d) {
    digit = v % ctx_->p();
    v /= ctx_->p();
  }
  return d;
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (ctx_ != rhs.ctx_ && !(ctx_ && rhs.ctx_ && ctx_->same_as(*rhs.ctx_)))
    throw Error(ErrorCode::ContextMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(*ctx_, ctx_->neg(value_)); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = ctx_->add(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = ctx_->sub(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = ctx_->mul(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = ctx_->mul(value_, ctx_->inv(rhs.value_));
  return *this;
}

FieldElement FieldElement::inv() const { return FieldElement(*ctx_, ctx_->inv(value_)); }

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(*ctx_, ctx_->pow(value_, exponent));
}

// ---------------------------------------------------------------------------
// FieldContext

FieldPtr FieldContext::make(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::CharacteristicUnsupported, "characteristic 2 is not supported");
  if (p >= (1ULL << 32)) throw Error(ErrorCode::Unsupported, "characteristic must be below 2^32");
  if (m == 0) throw Error(ErrorCode::BadModulus, "extension degree must be at least 1");
  nt::checked_pow(p, m);

  std::vector<std::uint64_t> mod;
  if (m > 1) {
    if (modulus) {
      mod = *modulus;
      if (mod.size() != m + 1 || mod.back() != 1)
        throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(m));
      for (auto c : mod)
        if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient out of range");
      if (!modulus_is_irreducible(p, mod)) throw Error(ErrorCode::BadModulus, "modulus is reducible");
    } else {
      const std::uint64_t count = nt::checked_pow(p, m);
      for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<std::uint64_t> cand(m + 1);
        std::uint64_t v = enc;
        for (unsigned i = 0; i < m; ++i) {
          cand[i] = v % p;
          v /= p;
        }
        cand[m] = 1;
        if (modulus_is_irreducible(p, cand)) {
          mod = std::move(cand);
          break;
        }
      }
    }
  } else if (modulus && !modulus->empty()) {
    if (*modulus != std::vector<std::uint64_t>{0, 1})
      throw Error(ErrorCode::BadModulus, "prime fields take no modulus");
  }
  return FieldPtr(new FieldContext(p, m, std::move(mod)));
}

FieldContext::FieldContext(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), q_(nt::checked_pow(p, m)), modulus_(std::move(modulus)) {
  if (m_ > 1 && q_ <= kAddTableLimit) {
    add_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    for (Coeff a = 0; a < q_; ++a) {
      auto da = decode(a);
      for (auto& d : da) d = (p_ - d) % p_;
      neg_table_[a] = static_cast<std::uint32_t>(encode(da));
      for (Coeff b = 0; b < q_; ++b) {
        auto x = decode(a), y = decode(b);
        for (unsigned i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
        add_table_[a * q_ + b] = static_cast<std::uint32_t>(encode(x));
      }
    }
  }
  find_generator();
  if (m_ > 1 && q_ <= kLogTableLimit) {
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    Coeff x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = exp_[i + q_ - 1] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_ext_slow(x, generator_);
    }
  }
}

void FieldContext::find_generator() {
  const auto primes = nt::prime_divisors(q_ - 1);
  for (Coeff g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto ell : primes) {
      if (pow(g, (q_ - 1) / ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      return;
    }
  }
  throw Error(ErrorCode::BadModulus, "no generator found");
}

bool FieldContext::same_as(const FieldContext& other) const {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldElement FieldContext::element(Coeff value) const {
  if (value >= q_) throw Error(ErrorCode::Unsupported, "encoding out of range");
  return FieldElement(*this, value);
}

FieldElement FieldContext::from_int(std::int64_t value) const { return FieldElement(*this, from_int_raw(value)); }

Coeff FieldContext::from_int_raw(std::int64_t value) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  return static_cast<Coeff>(r);
}

std::vector<std::uint64_t> FieldContext::decode(Coeff a) const {
  std::vector<std::uint64_t> d(m_);
  for (auto& digit : d) {
    digit = a % p_;
    a /= p_;
  }
  return d;
}

Coeff FieldContext::encode(const std::vector<std::uint64_t>& digits) const {
  Coeff v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p_ + *it;
  return v;
}

Coeff FieldContext::neg(Coeff a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (!neg_table_.empty()) return neg_table_[a];
  auto d = decode(a);
  for (auto& x : d) x = (p_ - x) % p_;
  return encode(d);
}

Coeff FieldContext::add_ext(Coeff a, Coeff b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Coeff result = 0, scale = 1;
  while (a || b) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Coeff FieldContext::mul_ext(Coeff a, Coeff b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_ext_slow(a, b);
}

Coeff FieldContext::mul_ext_slow(Coeff a, Coeff b) const {
  auto x = decode(a), y = decode(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j <= m_; ++j) {
      std::uint64_t t = c * modulus_[j] % p_;
      prod[k - m_ + j] = (prod[k - m_ + j] + p_ - t) % p_;
    }
  }
  prod.resize(m_);
  return encode(prod);
}

Coeff FieldContext::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (m_ == 1) {
    // Extended Euclid on machine words.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    return static_cast<Coeff>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
  }
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Coeff FieldContext::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------

FieldPtr make_context_r5(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (p == 2 || p == 5)
    throw Error(ErrorCode::CharacteristicUnsupported, "characteristic must be coprime to 10");
  return FieldContext::make(p, m, std::move(modulus));
}

void require_coprime_to_ten(const FieldContext& ctx) {
  if (ctx.p() == 2 || ctx.p() == 5)
    throw Error(ErrorCode::CharacteristicUnsupported, "characteristic must be coprime to 10");
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "quadratic character of zero");
  const auto& F = a.field();
  return F.pow(a.value(), (F.q() - 1) / 2) == 1;
}

std::optional<std::pair<FieldElement, FieldElement>> try_sqrt(const FieldElement& a) {
  const auto& F = a.field();
  if (a.is_zero()) return std::pair{F.zero(), F.zero()};
  if (!is_square(a)) return std::nullopt;

  // Tonelli-Shanks with the generator as the required non-residue.
  std::uint64_t t = F.q() - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Coeff z = F.pow(F.generator().value(), t);
  Coeff x = F.pow(a.value(), (t + 1) / 2);
  Coeff b = F.pow(a.value(), t);
  int m = s;
  while (b != 1) {
    int i = 0;
    for (Coeff bb = b; bb != 1; bb = F.mul(bb, bb)) ++i;
    Coeff c = z;
    for (int j = 0; j < m - i - 1; ++j) c = F.mul(c, c);
    x = F.mul(x, c);
    z = F.mul(c, c);
    b = F.mul(b, z);
    m = i;
  }
  Coeff y = F.neg(x);
  if (y < x) std::swap(x, y);
  return std::pair{F.element(x), F.element(y)};
}

std::pair<FieldElement, FieldElement> sqrt(const FieldElement& a) {
  auto r = try_sqrt(a);
  if (!r) throw Error(ErrorCode::NonResidue, "element " + std::to_string(a.value()) + " is not a square");
  return *r;
}

std::uint64_t mult_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "order of zero");
  const auto& F = a.field();
  std::uint64_t order = F.q() - 1;
  for (auto [ell, e] : nt::factorize(order)) {
    while (order % ell == 0 && F.pow(a.value(), order / ell) == 1) order /= ell;
  }
  return order;
}

std::vector<FieldElement> RhoChain::primitive(int i) const {
  if (i == 0) return {entries.at(0)};
  const auto& r = entries.at(static_cast<std::size_t>(i));
  std::vector<FieldElement> out;
  FieldElement x = r;
  const FieldElement r2 = r * r;
  for (std::uint64_t j = 1; j < (1ULL << i); j += 2) {
    out.push_back(x);
    x *= r2;
  }
  return out;
}

RhoChain rho_chain(const FieldContext& ctx) {
  const int top = nt::v2(ctx.q() - 1);
  RhoChain chain;
  for (int i = 0; i <= top; ++i) chain.entries.push_back(ctx.generator().pow((ctx.q() - 1) >> i));
  return chain;
}

Omega5 omega5(const FieldContext& ctx) {
  if (ctx.p() == 5) throw Error(ErrorCode::CharacteristicFive, "Omega(5) needs characteristic != 5");
  Omega5 out;
  const std::uint64_t q = ctx.q();
  if ((q - 1) % 5 == 0) {
    out.kind = Omega5::Kind::Roots;
    const auto base = ctx.generator().pow((q - 1) / 5);
    for (int i = 1; i <= 4; ++i) out.elements.push_back(base.pow(i));
    return out;
  }
  if ((q + 1) % 5 == 0) {
    // w + 1/w are the roots of x^2 + x - 1, i.e. (-1 +- sqrt 5) / 2.
    out.kind = Omega5::Kind::TraceSet;
    const auto [s, t] = sqrt(ctx.from_int(5));
    const auto half = ctx.from_int(2).inv();
    out.elements = {(s - ctx.one()) * half, (t - ctx.one()) * half};
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }
  return out;
}

}  // namespace cyclo
