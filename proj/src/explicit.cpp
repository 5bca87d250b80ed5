#include "cyclo/explicit.hpp"

#include <algorithm>

#include "cyclo/numtheory.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/poly_modulus.hpp"

namespace cyclo {

namespace {

using FE = FieldElement;

FE fe(const FieldContext& F, std::int64_t v) { return F.from_int(v); }

// Ascending coefficients.
Poly make_poly(const FieldPtr& ctx, std::initializer_list<FE> coeffs) {
  std::vector<Coeff> c;
  for (const auto& e : coeffs) c.push_back(e.value());
  return Poly(ctx, std::move(c));
}

// Both square roots of a (one when a = 0, none for non-squares).
std::vector<FE> square_roots(const FE& a) {
  if (a.value() == 0) return {a};
  auto r = try_sqrt(a);
  if (!r) return {};
  return {r->first, r->second};
}

// g | Q_{2^n 5}, using Q_{2^n 5}(x) = Q_10(x^(2^(n-1))) for n >= 1.
bool divides_q5(const Poly& g, int n) {
  if (g.degree() < 1) return false;
  const PolyModulus mod(g);
  const auto& ctx = g.ctx();
  Poly y = mod.reduce(Poly::x(ctx));
  for (int i = 1; i < n; ++i) y = mod.sqr(y);
  if (n == 0) y = -y;  // Q_5(x) = Q_10(-x)
  // y^4 - y^3 + y^2 - y + 1 by Horner.
  const Poly one = Poly::constant(ctx, 1);
  Poly acc = one;
  for (int i = 0; i < 4; ++i) {
    acc = mod.mul(acc, y);
    acc = (i % 2 == 0) ? acc - one : acc + one;
  }
  return acc.is_zero();
}

void dedupe(std::vector<Poly>& polys) {
  canonical_sort(polys);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

struct QuarticSplit {
  FE a, b, c, d;  // x^4 + a x^3 + b x^2 + c x + d
};

// All monic quartics g with g(x) g(-x) = x^8 + a x^6 + b x^4 + c x^2 + e.
// Writing g = x^4 + A x^3 + B x^2 + C x + D gives A^2 = 2B - a,
// 2AC = B^2 + 2D - b, C^2 = 2BD - c, D^2 = e; eliminating A and C leaves the
// resolvent (B^2 + 2D - b)^2 = 4 (2B - a)(2BD - c).
std::vector<QuarticSplit> split_quartic(const FieldPtr& ctx, const FE& a, const FE& b, const FE& c, const FE& e,
                                        std::uint64_t seed) {
  const auto& F = *ctx;
  const FE two = fe(F, 2), four = fe(F, 4);
  std::vector<QuarticSplit> out;
  for (const auto& D : square_roots(e)) {
    // (B^2 + s)^2 - 4 (2B - a)(2DB - c), s = 2D - b
    const FE s = two * D - b;
    const FE t2 = two * s - four * two * two * D;  // 2s - 16 D
    const FE t1 = four * (two * c + two * a * D);  // 8c + 8aD
    const FE t0 = s * s - four * a * c;
    const Poly resolvent = make_poly(ctx, {t0, t1, t2, F.zero(), F.one()});
    auto roots = find_roots(resolvent, seed);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& B : roots) {
      const FE a_sq = two * B - a;
      const FE c_sq = two * B * D - c;
      const FE num = B * B + two * D - b;
      if (a_sq.value() == 0) {
        if (num.value() != 0) continue;
        for (const auto& C : square_roots(c_sq)) out.push_back({F.zero(), B, C, D});
        continue;
      }
      for (const auto& A : square_roots(a_sq)) {
        const FE C = num / (two * A);
        if (C * C == c_sq) out.push_back({A, B, C, D});
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CaseParameters case_params(const FieldContext& ctx, std::uint64_t r) {
  if (r == 0 || r % 2 == 0) throw Error(ErrorCode::EvenR, "r must be odd, got " + std::to_string(r));
  if (r % ctx.p() == 0)
    throw Error(ErrorCode::CharacteristicDividesR, "characteristic " + std::to_string(ctx.p()) + " divides r");
  CaseParameters P;
  P.q = ctx.q();
  P.r = r;
  P.residue = static_cast<unsigned>(P.q % 20);
  P.k = P.q / 20;
  P.L1 = nt::v2_pow_minus_one(P.q, 1);
  P.L2 = nt::v2_pow_minus_one(P.q, 2);
  P.L4 = nt::v2_pow_minus_one(P.q, 4);
  P.L = nt::v2_pow_minus_one(P.q, nt::euler_phi(r));
  return P;
}

std::uint64_t factor_degree(std::uint64_t q, std::uint64_t r, int n) {
  if (n < 0 || n > 62) throw Error(ErrorCode::Unsupported, "level out of range");
  const std::uint64_t m = r << n;
  if (m >> n != r) throw Error(ErrorCode::Unsupported, "2^n r exceeds 64 bits");
  return nt::mult_order_mod(q % m, m);
}

int stabilization_level(std::uint64_t q, std::uint64_t r) {
  for (int n = 2;; ++n) {
    const auto d = factor_degree(q, r, n);
    if (nt::v2_pow_minus_one(q, d) == n) return n;
  }
}

WitnessSet solve_witness_1317(const FieldContext& ctx, const CaseParameters& params, const RhoChain& rho) {
  if (params.residue != 13 && params.residue != 17)
    throw Error(ErrorCode::FamilyResidueMismatch, "residue 13 or 17 required");
  const FE rho2 = rho[2];
  const FE one = ctx.one(), two = fe(ctx, 2), five = fe(ctx, 5);
  WitnessSet out;
  for (const auto& r : rho.primitive(params.L1)) {
    const auto a_mid = square_roots(five * r);
    if (a_mid.empty()) throw Error(ErrorCode::WitnessUnsolvable, "5 rho is not a square");
    for (const auto& a : a_mid) {
      const FE plus = (two * rho2 - one) * a;
      const FE minus = -(two * rho2 + one) * a;
      const bool first = is_square(plus);
      if (first == is_square(minus))
        throw Error(ErrorCode::WitnessUnsolvable, "square branches of the top level are not exclusive");
      for (const auto& top : square_roots(first ? plus : minus)) {
        Witness w;
        w.rho = r;
        w.a_l2 = a;
        w.a_l4 = top;
        w.square_branch = first;
        out.solutions.push_back(w);
      }
    }
  }
  return out;
}

namespace {

// Level 3 of the residue 3/7 chain: (a2, a3, b3, c3) with c3 = 3 / a3.
std::vector<Witness> level3_witnesses_3mod20(const FieldContext& ctx) {
  if (ctx.p() == 3) throw Error(ErrorCode::CharacteristicUnsupported, "closed forms need characteristic != 3");
  const FE one = ctx.one(), two = fe(ctx, 2), three = fe(ctx, 3);
  const auto a2s = square_roots(fe(ctx, -5));
  if (a2s.empty()) throw Error(ErrorCode::WitnessUnsolvable, "-5 is not a square");
  std::vector<Witness> out;
  for (const auto& a2 : a2s) {
    const bool first = is_square(two - a2);
    if (first == is_square(-two - a2))
      throw Error(ErrorCode::WitnessUnsolvable, "exactly one of 2 - a2, -2 - a2 must be a square");
    for (const auto& a3 : square_roots(first ? two - a2 : -two - a2)) {
      Witness w;
      w.a2 = a2;
      w.a3 = a3;
      w.b3 = first ? one : -one;
      w.c3 = three / a3;
      w.square_branch = first;
      w.constant = 1;
      out.push_back(w);
    }
  }
  return out;
}

Poly quartic_from(const FieldPtr& ctx, const FE& a, const FE& b, const FE& c, const FE& d) {
  return make_poly(ctx, {d, c, b, a, ctx->one()});
}

}  // namespace

WitnessSet solve_witness_3mod20(const FieldContext& ctx, const CaseParameters& params) {
  if (params.residue != 3 && params.residue != 7)
    throw Error(ErrorCode::FamilyResidueMismatch, "residue 3 or 7 required");
  if (ctx.q() == 3) throw Error(ErrorCode::Unsupported, "q = 3 uses the tabulated factors");
  const FE one = ctx.one(), two = fe(ctx, 2), three = fe(ctx, 3);
  // A non-owning handle so polynomials can be assembled for the division filter.
  const FieldPtr handle(FieldPtr(), &ctx);
  WitnessSet out;
  for (const auto& w3 : level3_witnesses_3mod20(ctx)) {
    const FE a2 = *w3.a2, a3 = *w3.a3, c3 = *w3.c3;
    std::vector<std::pair<FE, std::optional<FE>>> b4s;  // (b4, alpha or beta)
    if (w3.square_branch) {
      for (const auto& alpha : square_roots(fe(ctx, -2)))
        for (const auto& b4 : {alpha + a2, alpha - a2}) b4s.emplace_back(b4, alpha);
    } else {
      for (const auto& beta : square_roots(two))
        for (const auto& b4 : {beta + one, beta - one}) b4s.emplace_back(b4, beta);
    }
    for (const auto& [b4, aux] : b4s) {
      const FE numer = w3.square_branch ? b4 * b4 - three : b4 * b4 + three;
      const FE need = w3.square_branch ? -two * b4 - c3 : two * b4 - c3;
      for (const auto& a4 : square_roots(two * b4 - a3)) {
        // c4 = numer / (2 a4); when a4 = 0 the x^4 equation forces numer = 0
        // and c4 is any square root of `need`.
        std::vector<FE> c4s;
        if (a4.value() != 0) {
          c4s.push_back(numer / (two * a4));
        } else if (numer.value() == 0) {
          c4s = square_roots(need);
        }
        for (const auto& c4 : c4s) {
          if (!(c4 * c4 == need)) continue;
          const int constant = w3.square_branch ? -1 : 1;
          if (!divides_q5(quartic_from(handle, a4, b4, c4, constant == 1 ? one : -one), 4)) continue;
          Witness w = w3;
          w.a4 = a4;
          w.b4 = b4;
          w.c4 = c4;
          if (w3.square_branch)
            w.alpha = aux;
          else
            w.beta = aux;
          w.constant = constant;
          out.solutions.push_back(w);
        }
      }
    }
  }
  if (out.solutions.empty()) throw Error(ErrorCode::WitnessUnsolvable, "no level-4 witness found");
  return out;
}

WitnessSet solve_witness_7mod20_n5(const FieldContext& ctx, const CaseParameters& params, const WitnessSet& w4) {
  if (params.residue != 7 && params.residue != 3)
    throw Error(ErrorCode::FamilyResidueMismatch, "residue 3 or 7 required");
  const FieldPtr handle(FieldPtr(), &ctx);
  WitnessSet out;
  for (const auto& w : w4.solutions) {
    if (!w.a4 || w.constant != 1) continue;
    for (const auto& s : split_quartic(handle, *w.a4, *w.b4, *w.c4, ctx.one(), 0)) {
      if (!divides_q5(quartic_from(handle, s.a, s.b, s.c, s.d), 5)) continue;
      Witness next = w;
      next.a5 = s.a;
      next.b5 = s.b;
      next.c5 = s.c;
      next.constant = s.d == ctx.one() ? 1 : -1;
      out.solutions.push_back(next);
    }
  }
  if (out.solutions.empty()) throw Error(ErrorCode::WitnessUnsolvable, "no resolvent root yields a level-5 factor");
  return out;
}

std::vector<Poly> split_even_part(const Poly& f, std::uint64_t seed) {
  if (!f.is_monic()) throw Error(ErrorCode::NonMonic, "split_even_part expects a monic polynomial");
  const auto& ctx = f.ctx();
  const auto& F = *ctx;
  const FE two = fe(F, 2);
  std::vector<Poly> out;
  switch (f.degree()) {
    case 1:
      // (x - s)(x + s) = x^2 + c  =>  s^2 = -c
      for (const auto& s : square_roots(-f.coeff(0))) out.push_back(make_poly(ctx, {s, F.one()}));
      break;
    case 2: {
      // (x^2 + A x + D)(x^2 - A x + D) = x^4 + (2D - A^2) x^2 + D^2
      const FE a = f.coeff(1), e = f.coeff(0);
      for (const auto& D : square_roots(e))
        for (const auto& A : square_roots(two * D - a)) out.push_back(make_poly(ctx, {D, A, F.one()}));
      break;
    }
    case 4:
      for (const auto& s : split_quartic(ctx, f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0), seed))
        out.push_back(quartic_from(ctx, s.a, s.b, s.c, s.d));
      break;
    default:
      throw Error(ErrorCode::Unsupported, "even-part splitting implemented for degrees 1, 2, 4");
  }
  dedupe(out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Builds the factor lists of Q_{2^n 5} level by level up to the
// stabilization level. Each level's candidates are kept only if they are
// monic of the predicted degree and divide Q_{2^n 5}; the surviving count must
// equal phi(2^n 5) / d.
class Engine {
 public:
  explicit Engine(const FieldPtr& ctx)
      : ctx_(ctx),
        F_(*ctx),
        P_(case_params(*ctx, 5)),
        rho_(rho_chain(*ctx)),
        omega_(omega5(*ctx)),
        n0_(stabilization_level(ctx->q(), 5)) {}

  int n0() const { return n0_; }
  const std::vector<int>& generic_levels() const { return generic_; }

  const std::vector<Poly>& level(int n) {
    while (static_cast<int>(levels_.size()) <= n) {
      const int m = static_cast<int>(levels_.size());
      auto cands = templates(m);
      if (!cands) {
        generic_.push_back(m);
        cands = continue_from(levels_.back(), m);
      }
      levels_.push_back(accept(m, std::move(*cands)));
    }
    return levels_[static_cast<std::size_t>(n)];
  }

 private:
  Poly poly(std::initializer_list<FE> coeffs) const { return make_poly(ctx_, coeffs); }
  FE num(std::int64_t v) const { return fe(F_, v); }

  std::vector<Poly> linear_rho(int n) const {
    std::vector<Poly> out;
    for (const auto& w : omega_.elements)
      for (const auto& r : rho_.primitive(n)) out.push_back(poly({-(w * r), F_.one()}));
    return out;
  }

  std::vector<Poly> quartic_rho(int n) const {
    std::vector<Poly> out;
    for (const auto& r : rho_.primitive(n)) out.push_back(poly({r.pow(4), r.pow(3), r * r, r, F_.one()}));
    return out;
  }

  std::optional<std::vector<Poly>> templates(int n) {
    switch (P_.residue) {
      case 1:
        return linear_rho(n);
      case 11:
        return templates_11(n);
      case 9:
        return templates_9(n);
      case 19:
        return templates_19(n);
      case 13:
      case 17:
        return templates_1317(n);
      case 3:
      case 7:
        if (F_.q() == 3) return table_q3(n);
        if (F_.p() == 3) {
          if (n <= 1) return quartic_rho(n);
          if (n == 2) return level2_3mod20();
          return std::nullopt;
        }
        return templates_3mod20(n);
      default:
        throw Error(ErrorCode::CharacteristicUnsupported, "q must be coprime to 10");
    }
  }

  std::optional<std::vector<Poly>> templates_11(int n) const {
    if (n <= 1) return linear_rho(n);
    std::vector<Poly> out;
    if (n == 2) {
      for (const auto& w : omega_.elements) out.push_back(poly({w, F_.zero(), F_.one()}));
      return out;
    }
    if (n == 3) {
      // x^2 + c w x - w^2 with c^2 = -2, or x^2 + c w x + w^2 with c^2 = 2.
      for (const auto& w : omega_.elements) {
        for (const auto& c : square_roots(num(-2))) out.push_back(poly({-(w * w), c * w, F_.one()}));
        for (const auto& c : square_roots(num(2))) out.push_back(poly({w * w, c * w, F_.one()}));
      }
      return out;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Poly>> templates_9(int n) const {
    const auto& traces = omega_.elements;
    std::vector<Poly> out;
    if (n <= 1) {
      for (const auto& t : traces) out.push_back(poly({F_.one(), n == 0 ? -t : t, F_.one()}));
      return out;
    }
    if (n <= P_.L1) {
      for (const auto& t : traces)
        for (const auto& r : rho_.primitive(n)) out.push_back(poly({r * r, r * t, F_.one()}));
      return out;
    }
    if (n == P_.L2) {
      // x^2 + a x + rho with a^2 = 2 rho - rho t.
      for (const auto& t : traces)
        for (const auto& r : rho_.primitive(P_.L1))
          for (const auto& a : square_roots(num(2) * r - r * t)) out.push_back(poly({r, a, F_.one()}));
      return out;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Poly>> templates_19(int n) const {
    const auto& traces = omega_.elements;
    std::vector<Poly> out;
    if (n <= 1) {
      for (const auto& t : traces) out.push_back(poly({F_.one(), n == 0 ? -t : t, F_.one()}));
      return out;
    }
    std::vector<FE> a2s;
    for (const auto& t : traces)
      for (const auto& a2 : square_roots(num(2) - t)) a2s.push_back(a2);
    if (n == 2) {
      for (const auto& a2 : a2s) out.push_back(poly({F_.one(), a2, F_.one()}));
      return out;
    }
    if (n == 3 && P_.L2 == 3) {
      // x^2 + a3 x - 1 with a3^2 = -a2 - 2.
      for (const auto& a2 : a2s)
        for (const auto& a3 : square_roots(-a2 - num(2))) out.push_back(poly({-F_.one(), a3, F_.one()}));
      return out;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Poly>> templates_1317(int n) {
    if (n <= P_.L1) return quartic_rho(n);
    std::vector<Poly> out;
    if (n == P_.L2) {
      // x^4 + a x^3 + 3 rho x^2 + a rho x + rho^2 with a^2 = 5 rho.
      for (const auto& r : rho_.primitive(P_.L1))
        for (const auto& a : square_roots(num(5) * r)) out.push_back(poly({r * r, a * r, num(3) * r, a, F_.one()}));
      return out;
    }
    if (n == P_.L4) {
      const FE rho2 = rho_[2];
      for (const auto& w : solve_witness_1317(F_, P_, rho_).solutions) {
        const FE a = *w.a_l2, top = *w.a_l4, r = *w.rho;
        const FE mid = w.square_branch ? rho2 * a : -(rho2 * a);
        out.push_back(poly({-r, -(num(5) * r) / top, mid, top, F_.one()}));
      }
      return out;
    }
    return std::nullopt;
  }

  std::vector<Poly> level2_3mod20() const {
    // x^4 + a2 x^3 - 3 x^2 - a2 x + 1 with a2^2 = -5.
    std::vector<Poly> out;
    for (const auto& a2 : square_roots(num(-5))) out.push_back(poly({F_.one(), -a2, num(-3), a2, F_.one()}));
    return out;
  }

  std::optional<std::vector<Poly>> templates_3mod20(int n) {
    if (n <= 1) return quartic_rho(n);
    if (n == 2) return level2_3mod20();
    std::vector<Poly> out;
    if (n == 3) {
      for (const auto& w : level3_witnesses_3mod20(F_)) out.push_back(quartic_from(ctx_, *w.a3, *w.b3, *w.c3, F_.one()));
      return out;
    }
    if (n == 4) {
      for (const auto& w : witness4().solutions)
        out.push_back(quartic_from(ctx_, *w.a4, *w.b4, *w.c4, w.constant == 1 ? F_.one() : -F_.one()));
      return out;
    }
    if (n == 5 && P_.residue == 7 && P_.k % 2 == 0) {
      for (const auto& w : solve_witness_7mod20_n5(F_, P_, witness4()).solutions)
        out.push_back(quartic_from(ctx_, *w.a5, *w.b5, *w.c5, w.constant == 1 ? F_.one() : -F_.one()));
      return out;
    }
    return std::nullopt;
  }

  const WitnessSet& witness4() {
    if (!w4_) w4_ = solve_witness_3mod20(F_, P_);
    return *w4_;
  }

  std::optional<std::vector<Poly>> table_q3(int n) const {
    auto P = [&](std::vector<std::int64_t> c) { return Poly::from_ints(ctx_, c); };
    switch (n) {
      case 0:
      case 1:
        return quartic_rho(n);
      case 2:
        return std::vector<Poly>{P({1, -1, 0, 1, 1}), P({1, 1, 0, -1, 1})};
      case 3:
        return std::vector<Poly>{P({1, 0, 1, 1, 1}), P({1, 0, 1, -1, 1}), P({1, 1, 1, 0, 1}), P({1, -1, 1, 0, 1})};
      case 4: {
        std::vector<Poly> out;
        for (std::int64_t a : {1, -1}) {
          out.push_back(P({2, 0, 0, a, 1}));
          out.push_back(P({2, a, 0, 0, 1}));
          out.push_back(P({2, -a, 1, a, 1}));
          out.push_back(P({2, -a, -1, a, 1}));
        }
        return out;
      }
      default:
        return std::nullopt;
    }
  }

  std::vector<Poly> continue_from(const std::vector<Poly>& parents, int n) const {
    const auto d = factor_degree(F_.q(), 5, n);
    std::vector<Poly> out;
    for (const auto& f : parents) {
      if (static_cast<std::uint64_t>(f.degree()) * 2 == d) {
        out.push_back(compose_power(f, 2));
      } else {
        for (auto& g : split_even_part(f)) out.push_back(std::move(g));
      }
    }
    return out;
  }

  std::vector<Poly> accept(int n, std::vector<Poly> cands) const {
    const auto d = factor_degree(F_.q(), 5, n);
    const auto expected = nt::euler_phi(std::uint64_t{5} << n) / d;
    std::vector<Poly> kept;
    for (auto& g : cands)
      if (g.is_monic() && static_cast<std::uint64_t>(g.degree()) == d && divides_q5(g, n)) kept.push_back(std::move(g));
    dedupe(kept);
    if (kept.size() != expected)
      throw Error(ErrorCode::WitnessUnsolvable, "level " + std::to_string(n) + ": assembled " +
                                                    std::to_string(kept.size()) + " of " + std::to_string(expected) +
                                                    " factors");
    return kept;
  }

  FieldPtr ctx_;
  const FieldContext& F_;
  CaseParameters P_;
  RhoChain rho_;
  Omega5 omega_;
  int n0_;
  std::optional<WitnessSet> w4_;
  std::vector<std::vector<Poly>> levels_;
  std::vector<int> generic_;
};

constexpr int kMaxLevel = 26;

std::string level_range(const std::vector<int>& levels) {
  if (levels.empty()) return "";
  std::string s = std::to_string(levels.front());
  if (levels.size() > 1) s += "-" + std::to_string(levels.back());
  return s;
}

}  // namespace

ExplicitFactorization factor_explicit(const FieldPtr& ctx, int n) {
  require_coprime_to_ten(*ctx);
  if (n < 0 || n > kMaxLevel) throw Error(ErrorCode::Unsupported, "n must lie in 0.." + std::to_string(kMaxLevel));
  Engine engine(ctx);
  const int n0 = engine.n0();
  const int base = std::min(n, n0);
  ExplicitFactorization ef;
  ef.ctx = ctx;
  ef.r = 5;
  ef.n = n;
  ef.factors = engine.level(base);
  if (n > base) {
    const std::uint64_t t = std::uint64_t{1} << (n - base);
    for (auto& f : ef.factors) f = compose_power(f, t);
    canonical_sort(ef.factors);
  }
  ef.meta.degree = static_cast<std::uint64_t>(ef.factors.front().degree());
  ef.meta.order = std::uint64_t{5} << n;
  ef.meta.count = ef.factors.size();

  ef.provenance = "q = " + std::to_string(ctx->q() % 20) + " mod 20, stabilizes at level " + std::to_string(n0);
  if (!engine.generic_levels().empty())
    ef.provenance += ", even-part splitting at level " + level_range(engine.generic_levels());
  if (n > base) ef.provenance += ", lifted by x -> x^" + std::to_string(std::uint64_t{1} << (n - base));
  return ef;
}

ExplicitFactorization lift_general(const FieldPtr& ctx, std::uint64_t r, int n, std::uint64_t seed) {
  const auto P = case_params(*ctx, r);
  if (n < 0 || n > kMaxLevel) throw Error(ErrorCode::Unsupported, "n must lie in 0.." + std::to_string(kMaxLevel));
  const int base = std::min(n, P.L);
  ExplicitFactorization ef;
  ef.ctx = ctx;
  ef.r = r;
  ef.n = n;
  ef.factors = factorize(cyclotomic(ctx, r << base), seed).distinct();
  if (n > base) {
    const std::uint64_t e = r << base;
    for (const auto& f : ef.factors) {
      const auto m = static_cast<std::uint64_t>(f.degree());
      // x -> x^(2^j) keeps f irreducible when ord(f) = e, (q^m - 1)/e is odd,
      // and q^m = 1 mod 4.
      if (!has_order(f, e) || nt::v2_pow_minus_one(ctx->q(), m) != base || base < 2)
        throw Error(ErrorCode::NotIrreducible, "base factor does not satisfy the lifting conditions");
    }
    const std::uint64_t t = std::uint64_t{1} << (n - base);
    for (auto& f : ef.factors) f = compose_power(f, t);
  }
  canonical_sort(ef.factors);
  ef.meta.degree = static_cast<std::uint64_t>(ef.factors.front().degree());
  ef.meta.order = r << n;
  ef.meta.count = ef.factors.size();
  ef.provenance = "oracle factorization at level " + std::to_string(base);
  if (n > base) ef.provenance += ", lifted by x -> x^" + std::to_string(std::uint64_t{1} << (n - base));
  return ef;
}

VerificationReport verify_factorization(const ExplicitFactorization& ef, const VerifyOptions& options) {
  VerificationReport rep;
  const auto& ctx = ef.ctx;
  const std::uint64_t e = ef.r << ef.n;

  const Poly target = cyclotomic(ctx, e);
  if (product(ef.factors, ctx) == target) {
    rep.product_ok = true;
  } else {
    rep.failures.push_back("product mismatch: factors do not multiply to Q_" + std::to_string(e));
  }

  rep.irreducible_ok = true;
  for (std::size_t i = 0; i < ef.factors.size(); ++i) {
    const auto& f = ef.factors[i];
    if (f.degree() < 1 || !f.is_monic() || !is_irreducible(f)) {
      rep.irreducible_ok = false;
      rep.failures.push_back("factor " + std::to_string(i) + " is not monic irreducible");
    }
  }

  const std::uint64_t d = factor_degree(ctx->q(), ef.r, ef.n);
  const std::uint64_t expected = nt::euler_phi(e) / d;
  rep.count_ok = ef.factors.size() == expected;
  if (!rep.count_ok)
    rep.failures.push_back("count " + std::to_string(ef.factors.size()) + ", expected " + std::to_string(expected));
  rep.degree_ok = std::all_of(ef.factors.begin(), ef.factors.end(),
                              [&](const Poly& f) { return static_cast<std::uint64_t>(f.degree()) == d; });
  if (!rep.degree_ok) rep.failures.push_back("factor degrees differ from " + std::to_string(d));

  rep.order_ok = true;
  rep.order_checked = true;
  for (std::size_t i = 0; i < ef.factors.size(); ++i) {
    const auto& f = ef.factors[i];
    if (f.degree() > options.order_degree_limit) {
      rep.order_checked = false;
      continue;
    }
    if (f.degree() < 1 || f[0] == 0 || !has_order(f, e)) {
      rep.order_ok = false;
      rep.failures.push_back("factor " + std::to_string(i) + " does not have order " + std::to_string(e));
    }
  }
  return rep;
}

}  // namespace cyclo
