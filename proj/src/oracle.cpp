#include "cyclo/oracle.hpp"

#include <algorithm>

#include "cyclo/poly_modulus.hpp"

namespace cyclo {

namespace {

class XorShift64 {
 public:
  explicit XorShift64(std::uint64_t seed) : s_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {
    if (s_ == 0) s_ = 0x2545F4914F6CDD1DULL;
  }
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_ * 0x2545F4914F6CDD1DULL;
  }
  Coeff element(std::uint64_t q) { return next() % q; }

 private:
  std::uint64_t s_;
};

Poly exact_quotient(const Poly& f, const Poly& g) { return divrem(f, g).quotient; }

// f(x) = h(x)^p when f' = 0; returns h.
Poly pth_root(const Poly& f) {
  const auto& F = f.field();
  const std::uint64_t p = F.p();
  std::uint64_t e = 1;
  for (unsigned i = 1; i < F.m(); ++i) e *= p;
  std::vector<Coeff> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.pow(f[i * p], e);
  return Poly(f.ctx(), std::move(c));
}

// Monic random polynomial of exact degree k.
Poly random_monic(const FieldPtr& ctx, unsigned k, XorShift64& rng) {
  std::vector<Coeff> c(k + 1);
  for (unsigned i = 0; i < k; ++i) c[i] = rng.element(ctx->q());
  c[k] = 1;
  return Poly(ctx, std::move(c));
}

constexpr unsigned kBlock = 16;
constexpr unsigned kCheapTerms = 6;
constexpr unsigned kCheapRounds = 4;

}  // namespace

Poly FactorizationReport::expand() const {
  std::vector<Poly> parts;
  for (const auto& [g, e] : factors)
    for (unsigned i = 0; i < e; ++i) parts.push_back(g);
  return product(parts, input.ctx()).scaled(leading);
}

std::vector<Poly> FactorizationReport::distinct() const {
  std::vector<Poly> out;
  out.reserve(factors.size());
  for (const auto& entry : factors) out.push_back(entry.first);
  return out;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() < 1) return out;
  const Poly one = Poly::constant(f.ctx(), 1);
  Poly c = gcd(f, f.derivative());
  Poly w = exact_quotient(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    const auto p = static_cast<unsigned>(f.field().p());
    for (auto& [g, e] : squarefree_decomposition(pth_root(c))) out.emplace_back(std::move(g), e * p);
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f_in) {
  std::vector<std::pair<Poly, unsigned>> out;
  const FieldPtr& ctx = f_in.ctx();
  const Poly x = Poly::x(ctx);
  Poly f = f_in.monic();
  if (f.degree() < 1) return out;

  auto mod = std::make_unique<PolyModulus>(f);
  Poly h = x % f;
  Poly acc = Poly::constant(ctx, 1);
  std::vector<Poly> block;
  unsigned first = 1;

  for (unsigned i = 1; 2 * i <= static_cast<unsigned>(f.degree()); ++i) {
    h = mod->frobenius(h);
    block.push_back(h);
    acc = mod->mul(acc, h - x);
    const bool last = 2 * (i + 1) > static_cast<unsigned>(f.degree());
    if (block.size() < kBlock && !last) continue;

    Poly rest = gcd(acc, f);
    for (unsigned j = 0; j < block.size() && rest.degree() > 0; ++j) {
      Poly g = gcd(rest, (block[j] - x) % rest);
      if (g.degree() < 1) continue;
      out.emplace_back(g, first + j);
      rest = exact_quotient(rest, g);
      f = exact_quotient(f, g);
    }
    if (mod->degree() != f.degree()) {
      if (f.degree() < 1) break;
      mod = std::make_unique<PolyModulus>(f);
      h = h % f;
    }
    block.clear();
    acc = Poly::constant(ctx, 1);
    first = i + 1;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<Poly> equal_degree(const Poly& g_in, unsigned d, std::uint64_t seed) {
  const Poly g = g_in.monic();
  const FieldPtr& ctx = g.ctx();
  const auto n = static_cast<unsigned>(g.degree());
  if (n == d) return {g};
  const std::uint64_t q = ctx->q();
  XorShift64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ d);
  const PolyModulus mod(g);
  const Poly one = Poly::constant(ctx, 1);

  // Conjugates of x: x^(q^j) mod g.
  std::vector<Poly> conj{Poly::x(ctx) % g};
  for (unsigned j = 1; j < d; ++j) conj.push_back(mod.frobenius(conj.back()));

  std::vector<Poly> done, pending{g};
  unsigned stalled = 0;
  while (!pending.empty()) {
    // Norm from F_{q^d} to F_q of a random element a, componentwise. Cheap
    // rounds draw a from c0 + sum c_u x^(q^j_u), whose conjugates are index
    // shifts of the precomputed list; after repeated stalls a uniformly
    // random a is used instead.
    Poly norm = one;
    if (stalled < kCheapRounds) {
      const unsigned terms = std::min(d, kCheapTerms);
      std::vector<std::pair<unsigned, Coeff>> combo;
      for (unsigned u = 0; u < terms; ++u)
        combo.emplace_back(static_cast<unsigned>(rng.next() % d), 1 + rng.element(q - 1));
      const Poly c0 = Poly::constant(ctx, rng.element(q));
      for (unsigned i = 0; i < d; ++i) {
        Poly v = c0;
        for (const auto& [j, c] : combo) v += conj[(i + j) % d].scaled(c);
        norm = mod.mul(norm, v);
      }
    } else {
      Poly t = random_monic(ctx, n - 1, rng);
      norm = t;
      for (unsigned j = 1; j < d; ++j) {
        t = mod.frobenius(t);
        norm = mod.mul(norm, t);
      }
    }
    const Poly b = mod.pow(norm, (q - 1) / 2) - one;

    bool progress = false;
    std::vector<Poly> next;
    for (auto& piece : pending) {
      Poly u = gcd(piece, b % piece);
      if (u.degree() > 0 && u.degree() < piece.degree()) {
        progress = true;
        for (Poly part : {u, exact_quotient(piece, u)}) {
          if (static_cast<unsigned>(part.degree()) == d)
            done.push_back(std::move(part));
          else
            next.push_back(std::move(part));
        }
      } else {
        next.push_back(std::move(piece));
      }
    }
    pending = std::move(next);
    stalled = progress ? 0 : stalled + 1;
  }
  canonical_sort(done);
  return done;
}

FactorizationReport factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  FactorizationReport report;
  report.input = f;
  report.leading = f.lead();
  std::vector<std::pair<Poly, unsigned>> found;
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (const auto& [group, d] : distinct_degree(part))
      for (auto& g : equal_degree(group, d, seed)) found.emplace_back(std::move(g), mult);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  report.factors = std::move(found);
  return report;
}

std::vector<FieldElement> find_roots(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has every element as a root");
  std::vector<FieldElement> roots;
  const auto& F = f.field();
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    const PolyModulus mod(part);
    const Poly x = Poly::x(f.ctx());
    Poly linear = gcd(part, mod.frobenius(x % part) - x);
    if (linear.degree() < 1) continue;
    for (const auto& l : equal_degree(linear, 1, seed))
      for (unsigned i = 0; i < mult; ++i) roots.emplace_back(F, F.neg(l[0]));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value() < b.value(); });
  return roots;
}

}  // namespace cyclo
