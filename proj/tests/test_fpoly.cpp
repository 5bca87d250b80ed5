#include <doctest.h>

#include <random>
#include <tuple>

#include "cyclo/error.hpp"
#include "cyclo/fpoly.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/poly_modulus.hpp"

using namespace cyclo;

namespace {

Poly P(const FieldPtr& F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int degree, bool monic = false) {
  std::vector<Coeff> c(degree + 1);
  for (auto& x : c) x = rng() % F->q();
  if (monic || c.back() == 0) c.back() = 1;
  return Poly(F, c);
}

// Plain quadratic product using only field add/mul.
Poly schoolbook(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx());
  const auto& F = a.field();
  std::vector<Coeff> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return Poly(a.ctx(), c);
}

// Remainder by repeated subtraction of shifted multiples of a monic g.
Poly naive_rem(Poly f, const Poly& g) {
  while (!f.is_zero() && f.degree() >= g.degree()) {
    const auto shift = static_cast<std::size_t>(f.degree() - g.degree());
    f -= Poly::monomial(f.ctx(), f.lead(), shift) * g;
  }
  return f;
}

// Irreducible iff no monic factor of degree <= deg/2 divides it (exhaustive).
bool brute_irreducible(const Poly& f) {
  const auto F = f.ctx();
  const auto q = F->q();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Coeff> c(d + 1);
      auto t = code;
      for (int i = 0; i < d; ++i, t /= q) c[i] = t % q;
      c[d] = 1;
      if ((f % Poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("basic polynomial operations") {
  auto F3 = FieldContext::make(3);
  auto F13 = FieldContext::make(13);
  CHECK(gcd(P(F3, {-1, 0, 1}), P(F3, {0, 1, 1})) == P(F3, {1, 1}));
  auto [q, r] = divrem(P(F13, {0, 0, 0, 0, 0, 1}), P(F13, {1, 0, 1}));
  CHECK(q == P(F13, {0, -1, 0, 1}));
  CHECK(r == P(F13, {0, 1}));
  CHECK_THROWS_AS(divrem(P(F13, {1, 1}), Poly(F13)), Error);

  const auto m = P(F3, {1, 1, 1, 1, 1});
  CHECK(powmod(Poly::x(F3), 9, m) == naive_rem(Poly::monomial(F3, 1, 9), m));

  CHECK(P(F13, {0, 3, 0, 0, 7}).weight() == 2);
  CHECK(P(F13, {4, 0, 2}).derivative() == P(F13, {0, 4}));
  CHECK(P(F13, {1, 2, 3}).eval(F13->element(2)).value() == 17 % 13);
  CHECK_THROWS_AS(P(F13, {1}) + P(F3, {1}), Error);
}

TEST_CASE("multiplication kernels agree with the schoolbook product") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {13, 1}, {1000003, 1}, {3, 2}, {7, 2}}) {
    auto F = FieldContext::make(p, m);
    for (int da : {0, 5, 31, 33, 95, 97, 150, 300}) {
      for (int db : {1, 40, 96, 130, 257}) {
        const auto a = random_poly(F, rng, da), b = random_poly(F, rng, db);
        REQUIRE(a * b == schoolbook(a, b));
      }
    }
  }
}

TEST_CASE("reduction and composition modulo a fixed polynomial") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {17, 1}, {3, 2}}) {
    auto F = FieldContext::make(p, m);
    for (int deg : {3, 20, 70, 200}) {
      // Dense and sparse moduli take different reduction paths.
      const auto dense = random_poly(F, rng, deg, true);
      auto sparse = Poly::monomial(F, 1, deg) + P(F, {2, 1});
      for (const auto& g : {dense, sparse}) {
        const PolyModulus mod(g);
        const auto a = random_poly(F, rng, deg - 1), b = random_poly(F, rng, deg - 1);
        REQUIRE(mod.mul(a, b) == naive_rem(schoolbook(a, b), g));
        const auto big = random_poly(F, rng, 3 * deg);
        REQUIRE(big % g == naive_rem(big, g));

        // g(h) mod f against Horner evaluation.
        const auto h = random_poly(F, rng, deg - 1);
        const auto outer = random_poly(F, rng, deg + 5);
        Poly horner(F);
        for (std::size_t i = outer.coeffs().size(); i-- > 0;)
          horner = mod.mul(horner, h) + Poly::constant(F, outer[i]);
        REQUIRE(mod.compose(outer, h) == horner);

        const auto doublings = mod.frobenius_doublings(4);
        Poly step = mod.reduce(Poly::x(F));
        for (std::uint64_t k = 1; k < 16; ++k) {
          step = mod.frobenius(step);
          REQUIRE(mod.frobenius_power(doublings, k) == step);
        }
      }
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  auto F7 = FieldContext::make(7);
  CHECK(cyclotomic(F7, 5) == P(F7, {1, 1, 1, 1, 1}));
  CHECK(cyclotomic(F7, 20) == P(F7, {1, 0, -1, 0, 1, 0, -1, 0, 1}));
  CHECK(cyclotomic(F7, 1) == P(F7, {-1, 1}));
  CHECK(negate_arg(cyclotomic(F7, 5)) == cyclotomic(F7, 10));
  CHECK(negate_arg(P(F7, {1, 1})) == P(F7, {1, -1}));
  CHECK(compose_power(P(F7, {1, 1}), 2) == P(F7, {1, 0, 1}));
  CHECK(compose_power(cyclotomic(F7, 10), 2) == cyclotomic(F7, 20));
  CHECK_THROWS_AS(cyclotomic(F7, 14), Error);

  // prod_{d | n} Q_d = x^n - 1.
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {11, 1}, {3, 2}}) {
    auto F = FieldContext::make(p, m);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      if (n % p == 0) continue;
      std::vector<Poly> parts;
      for (auto d : nt::divisors(n)) parts.push_back(cyclotomic(F, d));
      REQUIRE(product(parts, F) == Poly::monomial(F, 1, n) - Poly::constant(F, 1));
      REQUIRE(static_cast<std::uint64_t>(cyclotomic(F, n).degree()) == nt::euler_phi(n));
    }
  }
}

TEST_CASE("irreducibility") {
  auto F3 = FieldContext::make(3);
  CHECK(is_irreducible(P(F3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(P(F3, {-1, 0, 1})));
  CHECK(is_irreducible(P(FieldContext::make(13), {1, 1, 1, 1, 1})));
  CHECK_THROWS_AS(is_irreducible(P(F3, {1, 0, 2})), Error);
  CHECK_THROWS_AS(is_irreducible(P(F3, {1})), Error);

  // Exhaustive over all monic polynomials of small degree.
  for (auto [p, m, top] : std::vector<std::tuple<std::uint64_t, unsigned, int>>{{3, 1, 6}, {5, 1, 4}, {3, 2, 3}}) {
    auto F = FieldContext::make(p, m);
    const auto q = F->q();
    for (int d = 1; d <= top; ++d) {
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      std::uint64_t count = 0;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Coeff> c(d + 1);
        auto t = code;
        for (int i = 0; i < d; ++i, t /= q) c[i] = t % q;
        c[d] = 1;
        const Poly f(F, c);
        const bool irr = is_irreducible(f);
        REQUIRE(irr == brute_irreducible(f));
        count += irr;
      }
      // Necklace count (1/d) sum_{e | d} mu(d/e) q^e.
      std::int64_t expect = 0;
      for (auto e : nt::divisors(d)) expect += nt::moebius(d / e) * static_cast<std::int64_t>(nt::checked_pow(q, e));
      CHECK(count == static_cast<std::uint64_t>(expect / d));
    }
  }
}

TEST_CASE("irreducibility at degrees that use composition") {
  // Factors of Q_{2^n 5} over F_3 have degree 2^(n-2); products of two must be rejected.
  auto F3 = FieldContext::make(3);
  const auto a = P(F3, {2, 0, 0, 1, 1}), b = P(F3, {2, 1, 0, 0, 1});
  for (std::uint64_t t : {16, 32, 64}) {
    const auto fa = compose_power(a, t), fb = compose_power(b, t);
    REQUIRE(is_irreducible(fa));
    REQUIRE(is_irreducible(fb));
    REQUIRE_FALSE(is_irreducible(fa * fb));
    REQUIRE_FALSE(is_irreducible(compose_power(a, 3 * t)));
  }
  // x^3 - x - 1 is irreducible; the roots of x^81 - x - 1 satisfy x^(3^12) = x, so it splits into small factors.
  CHECK(is_irreducible(P(F3, {-1, -1, 0, 1})));
  std::vector<std::int64_t> as(82, 0);
  as[0] = -1, as[1] = -1, as[81] = 1;
  CHECK_FALSE(is_irreducible(P(F3, as)));
}

TEST_CASE("order of irreducible polynomials") {
  auto F3 = FieldContext::make(3);
  CHECK(poly_order(P(F3, {1, 1, 1, 1, 1})) == 5);
  CHECK(poly_order(P(FieldContext::make(13), {1, 1})) == 2);
  CHECK(poly_order(P(F3, {2, 0, 0, 1, 1})) == 80);
  CHECK(has_order(P(F3, {2, 0, 0, 1, 1}), 80));
  CHECK_FALSE(has_order(P(F3, {2, 0, 0, 1, 1}), 40));
  CHECK_THROWS_AS(poly_order(P(F3, {0, 1, 1})), Error);
  CHECK_THROWS_AS(poly_order(P(F3, {-1, 0, 1})), Error);
}

TEST_CASE("canonical order") {
  auto F7 = FieldContext::make(7);
  std::vector<Poly> v = {P(F7, {1, 0, 1}), P(F7, {3, 1}), P(F7, {0, 2, 1}), P(F7, {2, 1})};
  canonical_sort(v);
  CHECK(v == std::vector<Poly>{P(F7, {2, 1}), P(F7, {3, 1}), P(F7, {0, 2, 1}), P(F7, {1, 0, 1})});
}
