#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclo/ffield.hpp"

namespace cyclo {

/// Dense univariate polynomial over F_q, coefficients in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldPtr ctx, std::vector<Coeff> coeffs);

  static Poly x(FieldPtr ctx);
  static Poly constant(FieldPtr ctx, Coeff c);
  /// c * x^k
  static Poly monomial(FieldPtr ctx, Coeff c, std::size_t k);
  /// Reads integer coefficients (ascending), reducing each into the prime subfield.
  static Poly from_ints(FieldPtr ctx, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& ctx() const { return ctx_; }
  const FieldContext& field() const { return *ctx_; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  std::vector<Coeff>&& take_coeffs() && { return std::move(c_); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Coeff lead() const { return c_.empty() ? 0 : c_.back(); }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return FieldElement(*ctx_, (*this)[i]); }
  /// Number of nonzero terms.
  std::size_t weight() const;

  Poly monic() const;
  Poly derivative() const;
  FieldElement eval(const FieldElement& at) const;
  Poly scaled(Coeff c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && a.same_field(b); }

  bool same_field(const Poly& other) const;
  void check_same(const Poly& other) const;

  std::string to_string() const;

 private:
  void trim();

  FieldPtr ctx_;
  std::vector<Coeff> c_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);
/// base^exponent mod modulus by square-and-multiply.
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);
bool divides(const Poly& d, const Poly& f);
/// Product of a list of polynomials using a balanced tree.
Poly product(std::span<const Poly> factors, const FieldPtr& ctx);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// n-th cyclotomic polynomial reduced mod p, via the Moebius quotient of (x^d - 1).
Poly cyclotomic(const FieldPtr& ctx, std::uint64_t n);
/// f(-x)
Poly negate_arg(const Poly& f);
/// f(x^t)
Poly compose_power(const Poly& f, std::uint64_t t);

/// Deterministic Rabin test. f must be monic of degree >= 1.
bool is_irreducible(const Poly& f);
/// Least e with f | x^e - 1, for monic irreducible f with f(0) != 0 and q^deg f < 2^64.
std::uint64_t poly_order(const Poly& f);
/// True iff the class of x mod f has multiplicative order exactly e.
bool has_order(const Poly& f, std::uint64_t e);

struct FactorMeta {
  std::uint64_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t count = 0;
};

/// Degree first, then lexicographic on ascending coefficient encodings.
bool canonical_less(const Poly& a, const Poly& b);
void canonical_sort(std::vector<Poly>& polys);

}  // namespace cyclo
