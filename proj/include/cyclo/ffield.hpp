#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

/// Canonical integer encoding of an element of F_q: sum of digit_i * p^i over the
/// coefficients of the element in the polynomial basis of the extension.
using Coeff = std::uint64_t;

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// An element of a finite field, tied to the context that created it.
/// The context must outlive the element.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldContext& ctx, Coeff value);

  const FieldContext& field() const { return *ctx_; }
  Coeff value() const { return value_; }
  std::vector<std::uint64_t> digits() const;
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.value_ <=> b.value_;
  }

 private:
  void check_same(const FieldElement& rhs) const;

  const FieldContext* ctx_ = nullptr;
  Coeff value_ = 0;
};

/// F_q with q = p^m, p an odd prime below 2^32. Immutable once built.
class FieldContext {
 public:
  /// Builds a validated context. With m > 1 and no modulus, the first irreducible
  /// monic polynomial of degree m in canonical-encoding order is used.
  static FieldPtr make(std::uint64_t p, unsigned m = 1,
                       std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  /// Ascending coefficients of the extension modulus (leading 1 included); empty when m = 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool same_as(const FieldContext& other) const;

  FieldElement element(Coeff value) const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement zero() const { return FieldElement(*this, 0); }
  FieldElement one() const { return FieldElement(*this, 1); }
  FieldElement generator() const { return FieldElement(*this, generator_); }

  // Raw arithmetic on encodings. Inputs must be valid encodings of this field.
  Coeff add(Coeff a, Coeff b) const {
    if (m_ == 1) {
      Coeff s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Coeff sub(Coeff a, Coeff b) const {
    if (m_ == 1) return a >= b ? a - b : a + p_ - b;
    return add_ext(a, neg(b));
  }
  Coeff neg(Coeff a) const;
  Coeff mul(Coeff a, Coeff b) const {
    if (m_ == 1) return a * b % p_;
    return mul_ext(a, b);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff from_int_raw(std::int64_t value) const;

 private:
  FieldContext(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);

  Coeff add_ext(Coeff a, Coeff b) const;
  Coeff mul_ext(Coeff a, Coeff b) const;
  Coeff mul_ext_slow(Coeff a, Coeff b) const;
  std::vector<std::uint64_t> decode(Coeff a) const;
  Coeff encode(const std::vector<std::uint64_t>& digits) const;
  void find_generator();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  Coeff generator_ = 0;
  // Extension fields with small q use discrete log tables for products and a
  // full table for sums.
  std::vector<std::uint32_t> log_, exp_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
};

/// Opens a context suitable for the r = 5 engine (p not in {2, 5}).
FieldPtr make_context_r5(std::uint64_t p, unsigned m = 1,
                         std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);
void require_coprime_to_ten(const FieldContext& ctx);

bool is_square(const FieldElement& a);
/// Square roots (r, -r) with the smaller canonical encoding first.
std::pair<FieldElement, FieldElement> sqrt(const FieldElement& a);
std::optional<std::pair<FieldElement, FieldElement>> try_sqrt(const FieldElement& a);
std::uint64_t mult_order(const FieldElement& a);

/// Coherent chain of primitive 2^i-th roots of unity: rho_0 = 1, rho_1 = -1,
/// rho_i^2 = rho_{i-1}, up to i = v2(q - 1).
struct RhoChain {
  std::vector<FieldElement> entries;

  int top() const { return static_cast<int>(entries.size()) - 1; }
  const FieldElement& operator[](std::size_t i) const { return entries.at(i); }
  /// All 2^(i-1) primitive 2^i-th roots (odd powers of rho_i), i >= 1; {1} for i = 0.
  std::vector<FieldElement> primitive(int i) const;
};

RhoChain rho_chain(const FieldContext& ctx);

/// Omega(5) when 5 | q - 1, else the values w + 1/w (roots of x^2 + x - 1) when
/// q = +-1 mod 5, else nothing.
struct Omega5 {
  enum class Kind { Roots, TraceSet, Empty };
  Kind kind = Kind::Empty;
  std::vector<FieldElement> elements;
};

Omega5 omega5(const FieldContext& ctx);

}  // namespace cyclo
