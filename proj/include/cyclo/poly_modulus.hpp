#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/fpoly.hpp"

namespace cyclo {

/// A fixed monic modulus with precomputed reduction data. Sparse moduli
/// (few nonzero terms) reduce term by term; dense ones use a precomputed
/// inverse of the reversed polynomial.
class PolyModulus {
 public:
  explicit PolyModulus(Poly f);

  const Poly& poly() const { return f_; }
  int degree() const { return f_.degree(); }

  Poly reduce(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly sqr(const Poly& a) const { return mul(a, a); }
  Poly pow(const Poly& base, std::uint64_t exponent) const;
  /// a^q, the Frobenius image of a reduced element.
  Poly frobenius(const Poly& a) const { return pow(a, f_.field().q()); }
  /// g(h) mod f by baby-step/giant-step (Brent-Kung).
  Poly compose(const Poly& g, const Poly& h) const;
  /// x^(q^(2^i)) mod f for i = 0..count-1, by repeated self-composition.
  std::vector<Poly> frobenius_doublings(int count) const;
  /// x^(q^k) mod f from the doublings; needs k < 2^doublings.size().
  Poly frobenius_power(const std::vector<Poly>& doublings, std::uint64_t k) const;

  void reduce_in_place(std::vector<Coeff>& a) const;

 private:
  Poly f_;
  std::vector<std::pair<std::size_t, Coeff>> tail_;  // nonzero lower terms, negated
  bool sparse_ = true;
  std::vector<Coeff> rev_inv_;  // 1 / rev(f) mod x^(n-1)
};

namespace kernel {

/// Full product of coefficient vectors over F_q.
std::vector<Coeff> mul(const FieldContext& F, const std::vector<Coeff>& a, const std::vector<Coeff>& b);
void trim(std::vector<Coeff>& a);

}  // namespace kernel

}  // namespace cyclo
