#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclo/error.hpp"
#include "cyclo/ffield.hpp"
#include "cyclo/numtheory.hpp"

using namespace cyclo;

namespace {

// Order of a by repeated multiplication.
std::uint64_t brute_order(const FieldElement& a) {
  std::uint64_t k = 1;
  for (auto x = a; !(x == a.field().one()); x *= a) ++k;
  return k;
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(nt::v2(12) == 2);
  CHECK(nt::v2_pow_minus_one(13, 2) == 3);
  CHECK(nt::v2_pow_minus_one(13, 4) == 4);
  CHECK(nt::v2_pow_minus_one(3, 4) == 4);
  CHECK(nt::euler_phi(20) == 8);
  CHECK(nt::euler_phi(80) == 32);
  CHECK(nt::euler_phi(1) == 1);
  CHECK(nt::moebius(10) == 1);
  CHECK(nt::moebius(4) == 0);
  CHECK(nt::moebius(2) == -1);
  CHECK(nt::mult_order_mod(13, 80) == 4);
  CHECK(nt::mult_order_mod(47, 160) == 4);
  CHECK_THROWS_AS(nt::checked_pow(3, 41), Error);

  for (std::uint64_t n = 1; n < 2000; ++n) {
    bool prime = n > 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    REQUIRE(nt::is_prime(n) == prime);
  }
  CHECK(nt::is_prime(4179340454199820289ULL));
  CHECK(nt::factorize(3ULL * 3 * 1000003 * 1000033) ==
        std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {1000003, 1}, {1000033, 1}});
}

TEST_CASE("context construction") {
  auto f13 = FieldContext::make(13);
  CHECK(f13->q() == 13);
  CHECK(f13->generator().value() == 2);
  CHECK(FieldContext::make(3)->generator().value() == 2);

  // F_9: first monic quadratic without roots in F_3, scanning (c0, c1) in encoding order.
  auto f9 = FieldContext::make(3, 2);
  CHECK(f9->q() == 9);
  std::vector<std::uint64_t> first;
  for (std::uint64_t c1 = 0; c1 < 3 && first.empty(); ++c1)
    for (std::uint64_t c0 = 0; c0 < 3 && first.empty(); ++c0) {
      bool root = false;
      for (std::uint64_t x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
      if (!root) first = {c0, c1, 1};
    }
  CHECK(f9->modulus() == first);
  CHECK(brute_order(f9->generator()) == 8);

  CHECK_THROWS_AS(FieldContext::make(15), Error);
  CHECK_THROWS_AS(make_context_r5(5), Error);
  CHECK_THROWS_AS(FieldContext::make(3, 2, std::vector<std::uint64_t>{2, 0, 1}), Error);  // x^2 + 2 = (x-1)(x+1)
}

TEST_CASE("prime field arithmetic") {
  auto F = FieldContext::make(13);
  CHECK((F->element(5) * F->element(5)).value() == 12);
  CHECK(F->element(2).pow(12) == F->one());
  CHECK(FieldContext::make(11)->element(3).inv().value() == 4);
  CHECK_THROWS_AS(F->zero().inv(), Error);
}

TEST_CASE("extension field arithmetic matches the field axioms") {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {3, 3}, {7, 2}, {3, 4}}) {
    auto F = FieldContext::make(p, m);
    const auto q = F->q();
    std::set<Coeff> powers;
    auto g = F->generator();
    auto x = F->one();
    for (std::uint64_t i = 0; i + 1 < q; ++i, x *= g) powers.insert(x.value());
    CHECK(powers.size() == q - 1);
    for (Coeff a = 1; a < q; ++a) {
      const auto A = F->element(a);
      REQUIRE(A * A.inv() == F->one());
      for (Coeff b = 0; b < q; b += 3) {
        const auto B = F->element(b);
        REQUIRE(A + B - B == A);
        REQUIRE((A + B) * A == A * A + B * A);
      }
    }
  }
}

TEST_CASE("squares") {
  auto F11 = FieldContext::make(11);
  auto F13 = FieldContext::make(13);
  auto F19 = FieldContext::make(19);
  CHECK(is_square(F11->from_int(-2)));
  CHECK_FALSE(is_square(F13->element(5)));
  CHECK(is_square(F13->element(12)));
  CHECK_THROWS_AS(is_square(F13->zero()), Error);

  auto [a, b] = sqrt(F11->element(9));
  CHECK(a.value() == 3);
  CHECK(b.value() == 8);
  auto [c, d] = sqrt(F13->element(12));
  CHECK(c.value() == 5);
  CHECK(d.value() == 8);
  auto [e, f] = sqrt(F19->element(5));
  CHECK(e.value() == 9);
  CHECK(f.value() == 10);
  CHECK_THROWS_AS(sqrt(F13->element(5)), Error);

  // Exhaustive: the squares are exactly the image of x -> x^2.
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {3, 1}, {7, 1}, {13, 1}, {17, 1}, {41, 1}, {97, 1}, {257, 1}, {3, 2}, {3, 3}, {7, 2}, {13, 2}}) {
    auto F = FieldContext::make(p, m);
    std::set<Coeff> image;
    for (Coeff x = 1; x < F->q(); ++x) image.insert((F->element(x) * F->element(x)).value());
    CHECK(image.size() == (F->q() - 1) / 2);
    for (Coeff a = 1; a < F->q(); ++a) {
      const auto A = F->element(a);
      REQUIRE(is_square(A) == (image.count(a) == 1));
      if (is_square(A)) {
        auto [r, s] = sqrt(A);
        REQUIRE(r * r == A);
        REQUIRE(s == -r);
        REQUIRE(r.value() < s.value());
      }
    }
  }
}

TEST_CASE("multiplicative order") {
  auto F11 = FieldContext::make(11);
  CHECK(mult_order(F11->element(3)) == 5);
  CHECK(mult_order(FieldContext::make(13)->element(12)) == 2);
  CHECK(mult_order(F11->one()) == 1);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{29, 1}, {3, 3}, {7, 2}}) {
    auto F = FieldContext::make(p, m);
    for (Coeff a = 1; a < F->q(); ++a) REQUIRE(mult_order(F->element(a)) == brute_order(F->element(a)));
  }
}

TEST_CASE("roots of unity") {
  auto chain = [](std::uint64_t p) {
    std::vector<Coeff> v;
    for (const auto& e : rho_chain(*FieldContext::make(p)).entries) v.push_back(e.value());
    return v;
  };
  CHECK(chain(13) == std::vector<Coeff>{1, 12, 8});
  CHECK(chain(3) == std::vector<Coeff>{1, 2});
  CHECK(chain(11) == std::vector<Coeff>{1, 10});

  for (std::uint64_t p : {17ULL, 41ULL, 97ULL, 257ULL}) {
    auto F = FieldContext::make(p);
    const auto rho = rho_chain(*F);
    CHECK(rho.top() == nt::v2(p - 1));
    for (int i = 1; i <= rho.top(); ++i) {
      REQUIRE(rho[i] * rho[i] == rho[i - 1]);
      const auto prim = rho.primitive(i);
      REQUIRE(prim.size() == (std::size_t{1} << (i - 1)));
      for (const auto& r : prim) REQUIRE(mult_order(r) == (std::uint64_t{1} << i));
    }
  }

  auto values = [](const Omega5& o) {
    std::vector<Coeff> v;
    for (const auto& e : o.elements) v.push_back(e.value());
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto o11 = omega5(*FieldContext::make(11));
  CHECK(o11.kind == Omega5::Kind::Roots);
  CHECK(values(o11) == std::vector<Coeff>{3, 4, 5, 9});
  const auto o19 = omega5(*FieldContext::make(19));
  CHECK(o19.kind == Omega5::Kind::TraceSet);
  CHECK(values(o19) == std::vector<Coeff>{4, 14});
  const auto o13 = omega5(*FieldContext::make(13));
  CHECK(o13.kind == Omega5::Kind::Empty);
  CHECK(o13.elements.empty());
}
