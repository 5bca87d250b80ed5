#include <doctest.h>

#include <random>

#include "cyclo/error.hpp"
#include "cyclo/oracle.hpp"

using namespace cyclo;

namespace {

Poly P(const FieldPtr& F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

Poly random_monic(const FieldPtr& F, std::mt19937_64& rng, int degree) {
  std::vector<Coeff> c(degree + 1);
  for (auto& x : c) x = rng() % F->q();
  c.back() = 1;
  return Poly(F, c);
}

}  // namespace

TEST_CASE("small factorizations") {
  auto F7 = FieldContext::make(7);
  CHECK(factorize(P(F7, {-1, 0, 1})).distinct() == std::vector<Poly>{P(F7, {1, 1}), P(F7, {-1, 1})});

  auto F3 = FieldContext::make(3);
  const auto q10 = factorize(cyclotomic(F3, 10));
  REQUIRE(q10.factors.size() == 1);
  CHECK(q10.factors[0].first == P(F3, {1, -1, 1, -1, 1}));

  auto F11 = FieldContext::make(11);
  std::vector<Poly> expect;
  for (std::int64_t w : {3, 4, 5, 9}) expect.push_back(P(F11, {w, 0, 1}));
  canonical_sort(expect);
  CHECK(factorize(cyclotomic(F11, 20)).distinct() == expect);

  CHECK_THROWS_AS(factorize(Poly(F11)), Error);
  const auto c = factorize(P(F11, {5}));
  CHECK(c.factors.empty());
  CHECK(c.leading == 5);
}

TEST_CASE("roots") {
  auto values = [](const std::vector<FieldElement>& v) {
    std::vector<Coeff> out;
    for (const auto& e : v) out.push_back(e.value());
    return out;
  };
  CHECK(values(find_roots(P(FieldContext::make(19), {-1, 1, 1}))) == std::vector<Coeff>{4, 14});
  CHECK(find_roots(P(FieldContext::make(3), {1, 0, 1})).empty());
  CHECK(values(find_roots(P(FieldContext::make(13), {-1, 0, 1}))) == std::vector<Coeff>{1, 12});
  // (x - 2)^3 (x - 5) over F_7.
  auto F7 = FieldContext::make(7);
  const auto f = P(F7, {-2, 1}) * P(F7, {-2, 1}) * P(F7, {-2, 1}) * P(F7, {-5, 1});
  CHECK(values(find_roots(f)) == std::vector<Coeff>{2, 2, 2, 5});

  // Against a full scan.
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{31, 1}, {3, 3}, {7, 2}}) {
    auto F = FieldContext::make(p, m);
    for (int t = 0; t < 40; ++t) {
      const auto g = random_monic(F, rng, 1 + t % 9);
      std::vector<Coeff> scan;
      for (Coeff x = 0; x < F->q(); ++x)
        if (g.eval(F->element(x)).is_zero()) scan.push_back(x);
      auto roots = values(find_roots(g, t));
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      REQUIRE(roots == scan);
    }
  }
}

TEST_CASE("factorization reassembles the input") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {3, 7, 11, 13, 17, 19, 23, 29}) {
    auto F = FieldContext::make(p);
    for (int t = 0; t < 500; ++t) {
      auto f = random_monic(F, rng, 1 + static_cast<int>(rng() % 32));
      if (t % 5 == 0) f *= f;  // repeated factors
      if (t % 7 == 0) f = compose_power(f, p);  // zero derivative
      const auto report = factorize(f, t);
      REQUIRE(report.expand() == f);
      for (std::size_t i = 0; i < report.factors.size(); ++i) {
        REQUIRE(report.factors[i].first.is_monic());
        if (t % 10 == 0) REQUIRE(is_irreducible(report.factors[i].first));
        if (i) REQUIRE(canonical_less(report.factors[i - 1].first, report.factors[i].first));
      }
    }
  }
}

TEST_CASE("stages") {
  auto F13 = FieldContext::make(13);
  const auto a = P(F13, {1, 1}), b = P(F13, {2, 0, 1}), c = P(F13, {3, 1});
  const auto sqf = squarefree_decomposition(a * b * b * c * c * c);
  REQUIRE(sqf.size() == 3);
  CHECK(sqf[0] == std::pair<Poly, unsigned>{a, 1});
  CHECK(sqf[1] == std::pair<Poly, unsigned>{b, 2});
  CHECK(sqf[2] == std::pair<Poly, unsigned>{c, 3});

  // Q_80 over F_13: eight quartics in one distinct-degree block, then split.
  const auto q80 = cyclotomic(F13, 80);
  const auto ddf = distinct_degree(q80);
  REQUIRE(ddf.size() == 1);
  CHECK(ddf[0].second == 4);
  for (std::uint64_t seed : {1, 2, 99}) {
    auto parts = equal_degree(ddf[0].first, 4, seed);
    canonical_sort(parts);
    CHECK(parts.size() == 8);
    CHECK(parts == factorize(q80, 7).distinct());
  }
}

TEST_CASE("extension fields and large characteristic") {
  auto F9 = FieldContext::make(3, 2);
  const auto r = factorize(cyclotomic(F9, 80));
  CHECK(r.factors.size() == 16);
  CHECK(r.expand() == cyclotomic(F9, 80));

  auto Fbig = FieldContext::make(1000003);
  std::mt19937_64 rng(5);
  const auto f = random_monic(Fbig, rng, 20) * random_monic(Fbig, rng, 15);
  CHECK(factorize(f, 3).expand() == f);
}
