#include "cyclo/sparsegen.hpp"

#include <algorithm>

namespace cyclo {

namespace {

using FE = FieldElement;

struct Base {
  int level = 0;      // level of the template factors
  int min_n = 0;      // smallest n the family is stated for
  std::string pattern;
  WitnessSet witness;
  std::vector<Poly> polys;
};

std::vector<FE> square_roots(const FE& a) {
  if (a.value() == 0) return {a};
  auto r = try_sqrt(a);
  if (!r) return {};
  return {r->first, r->second};
}

Poly poly(const FieldPtr& ctx, std::initializer_list<FE> coeffs) {
  std::vector<Coeff> c;
  for (const auto& e : coeffs) c.push_back(e.value());
  return Poly(ctx, std::move(c));
}

void require_residue(const CaseParameters& P, std::initializer_list<unsigned> residues, const std::string& id) {
  if (std::find(residues.begin(), residues.end(), P.residue) == residues.end())
    throw Error(ErrorCode::FamilyResidueMismatch,
                id + " does not apply to q = " + std::to_string(P.q) + " (q mod 20 = " + std::to_string(P.residue) + ")");
}

Base base_q3(const FieldPtr& ctx) {
  Base b{4, 5,
         "x^(2^(n-2)) + a x^(3*2^(n-4)) + 2; x^(2^(n-2)) + a x^(2^(n-4)) + 2; "
         "x^(2^(n-2)) + a x^(3*2^(n-4)) + x^(2^(n-3)) - a x^(2^(n-4)) + 2; "
         "x^(2^(n-2)) + a x^(3*2^(n-4)) - x^(2^(n-3)) - a x^(2^(n-4)) + 2",
         {}, {}};
  for (std::int64_t a : {1, -1}) {
    Witness w;
    w.a4 = ctx->from_int(a);
    b.witness.solutions.push_back(w);
    b.polys.push_back(Poly::from_ints(ctx, {2, 0, 0, a, 1}));
    b.polys.push_back(Poly::from_ints(ctx, {2, a, 0, 0, 1}));
    b.polys.push_back(Poly::from_ints(ctx, {2, -a, 1, a, 1}));
    b.polys.push_back(Poly::from_ints(ctx, {2, -a, -1, a, 1}));
  }
  return b;
}

Base base_3mod20(const FieldPtr& ctx, const CaseParameters& P) {
  Base b{4, 4, "x^(2^(n-2)) + a4 x^(3*2^(n-4)) + b4 x^(2^(n-3)) + c4 x^(2^(n-4)) +- 1", {}, {}};
  b.witness = solve_witness_3mod20(*ctx, P);
  for (const auto& w : b.witness.solutions) {
    const FE d = w.constant == 1 ? ctx->one() : -ctx->one();
    b.polys.push_back(poly(ctx, {d, *w.c4, *w.b4, *w.a4, ctx->one()}));
  }
  return b;
}

Base base_1317(const FieldPtr& ctx, const CaseParameters& P) {
  const auto rho = rho_chain(*ctx);
  const FE rho2 = rho[2];
  const FE five = ctx->from_int(5);
  Base b{P.L4, P.L4, "x^(2^(n-L4+2)) + a x^(3*2^(n-L4)) +- a' rho_2 x^(2^(n-L4+1)) - 5 rho a^-1 x^(2^(n-L4)) - rho",
         {}, {}};
  b.witness = solve_witness_1317(*ctx, P, rho);
  for (const auto& w : b.witness.solutions) {
    const FE a = *w.a_l2, top = *w.a_l4, r = *w.rho;
    const FE mid = w.square_branch ? rho2 * a : -(rho2 * a);
    b.polys.push_back(poly(ctx, {-r, -(five * r) / top, mid, top, ctx->one()}));
  }
  return b;
}

Base base_binomial1(const FieldPtr& ctx, const CaseParameters& P) {
  Base b{P.L1, P.L1, "x^(2^(n-L1)) - w rho", {}, {}};
  const auto rho = rho_chain(*ctx);
  for (const auto& w : omega5(*ctx).elements) {
    for (const auto& r : rho.primitive(P.L1)) {
      Witness wit;
      wit.w = w;
      wit.rho = r;
      b.witness.solutions.push_back(wit);
      b.polys.push_back(poly(ctx, {-(w * r), ctx->one()}));
    }
  }
  return b;
}

Base base_trinomial9(const FieldPtr& ctx, const CaseParameters& P) {
  Base b{P.L2, P.L2, "x^(2^(n-L2+1)) + a x^(2^(n-L2)) + rho", {}, {}};
  const auto rho = rho_chain(*ctx);
  const FE two = ctx->from_int(2);
  for (const auto& t : omega5(*ctx).elements) {
    for (const auto& r : rho.primitive(P.L1)) {
      for (const auto& a : square_roots(two * r - r * t)) {
        Witness wit;
        wit.w = t;
        wit.rho = r;
        wit.a_l2 = a;
        b.witness.solutions.push_back(wit);
        b.polys.push_back(poly(ctx, {r, a, ctx->one()}));
      }
    }
  }
  return b;
}

Base base_trinomial11(const FieldPtr& ctx) {
  Base b{3, 3, "x^(2^(n-2)) + c w x^(2^(n-3)) - w^2 (c^2 = -2); x^(2^(n-2)) + c w x^(2^(n-3)) + w^2 (c^2 = 2)", {}, {}};
  for (const auto& w : omega5(*ctx).elements) {
    for (std::int64_t s : {-2, 2}) {
      for (const auto& c : square_roots(ctx->from_int(s))) {
        Witness wit;
        wit.w = w;
        wit.c = c;
        b.witness.solutions.push_back(wit);
        b.polys.push_back(poly(ctx, {s < 0 ? -(w * w) : w * w, c * w, ctx->one()}));
      }
    }
  }
  return b;
}

Base base_trinomial19(const FieldPtr& ctx, const CaseParameters& P) {
  if (P.L2 != 3)
    throw Error(ErrorCode::FamilyUnavailable,
                "trinomial-19 needs v2(q^2 - 1) = 3, got " + std::to_string(P.L2) + " for q = " + std::to_string(P.q));
  Base b{3, 3, "x^(2^(n-2)) + a3 x^(2^(n-3)) - 1", {}, {}};
  const FE two = ctx->from_int(2);
  for (const auto& t : omega5(*ctx).elements) {
    for (const auto& a2 : square_roots(two - t)) {
      for (const auto& a3 : square_roots(-a2 - two)) {
        Witness wit;
        wit.w = t;
        wit.a2 = a2;
        wit.a3 = a3;
        b.witness.solutions.push_back(wit);
        b.polys.push_back(poly(ctx, {-ctx->one(), a3, ctx->one()}));
      }
    }
  }
  return b;
}

Base family_base(const FieldPtr& ctx, const CaseParameters& P, const std::string& id) {
  if (id == "irred-3") {
    if (P.q != 3) throw Error(ErrorCode::FamilyResidueMismatch, "irred-3 is defined over F_3 only");
    return base_q3(ctx);
  }
  if (id == "irred-mod-3" || id == "irred-mod-7") {
    require_residue(P, {id == "irred-mod-3" ? 3u : 7u}, id);
    if (P.q == 3) throw Error(ErrorCode::FamilyResidueMismatch, id + " needs q > 3; use irred-3");
    if (ctx->p() == 3)
      throw Error(ErrorCode::FamilyUnavailable, id + " needs characteristic != 3");
    return base_3mod20(ctx, P);
  }
  if (id == "irred-mod-13-17") {
    require_residue(P, {13, 17}, id);
    return base_1317(ctx, P);
  }
  if (id == "binomial-1") {
    require_residue(P, {1}, id);
    return base_binomial1(ctx, P);
  }
  if (id == "trinomial-9") {
    require_residue(P, {9}, id);
    return base_trinomial9(ctx, P);
  }
  if (id == "trinomial-11") {
    require_residue(P, {11}, id);
    return base_trinomial11(ctx);
  }
  if (id == "trinomial-19") {
    require_residue(P, {19}, id);
    return base_trinomial19(ctx, P);
  }
  throw Error(ErrorCode::Unsupported, "unknown family '" + id + "'");
}

}  // namespace

const std::vector<std::string>& sparse_family_ids() {
  static const std::vector<std::string> ids = {"irred-3",    "irred-mod-3", "irred-mod-7",  "irred-mod-13-17",
                                               "binomial-1", "trinomial-9", "trinomial-11", "trinomial-19"};
  return ids;
}

std::string auto_family(const FieldContext& ctx) {
  if (ctx.q() == 3) return "irred-3";
  switch (ctx.q() % 20) {
    case 1:
      return "binomial-1";
    case 3:
      return "irred-mod-3";
    case 7:
      return "irred-mod-7";
    case 9:
      return "trinomial-9";
    case 11:
      return "trinomial-11";
    case 13:
    case 17:
      return "irred-mod-13-17";
    case 19:
      return "trinomial-19";
    default:
      throw Error(ErrorCode::CharacteristicUnsupported, "q must be coprime to 10");
  }
}

SparseFamily sparse_family(const FieldPtr& ctx, int n, std::string_view family, bool check) {
  const auto P = case_params(*ctx);
  const std::string id = family == "auto" ? auto_family(*ctx) : std::string(family);
  Base base = family_base(ctx, P, id);
  if (n < base.min_n)
    throw Error(ErrorCode::NBelowValidity,
                id + " is stated for n >= " + std::to_string(base.min_n) + ", got n = " + std::to_string(n));

  const int j = n - base.level;
  const std::uint64_t target = std::uint64_t{1} << (n - 2);
  const std::uint64_t degree = static_cast<std::uint64_t>(base.polys.front().degree()) << j;
  if (degree != target)
    throw Error(ErrorCode::FamilyUnavailable, id + " has degree " + std::to_string(degree) + " at n = " +
                                                  std::to_string(n) + " for q = " + std::to_string(P.q) +
                                                  ", not 2^(n-2) = " + std::to_string(target));
  if (j > 0 && stabilization_level(P.q, 5) > base.level)
    throw Error(ErrorCode::FamilyUnavailable, "x -> x^2 does not preserve irreducibility above level " +
                                                  std::to_string(base.level) + " for q = " + std::to_string(P.q));

  SparseFamily out;
  out.id = id;
  out.q = P.q;
  out.n = n;
  out.pattern = std::move(base.pattern);
  out.witness = std::move(base.witness);
  for (const auto& f : base.polys) {
    Poly g = compose_power(f, std::uint64_t{1} << j);
    if (check && !is_irreducible(g))
      throw Error(ErrorCode::NotIrreducible, id + " member " + g.to_string() + " is reducible");
    out.members.push_back(std::move(g));
  }
  canonical_sort(out.members);
  out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  return out;
}

std::vector<Poly> generate_sparse(const FieldPtr& ctx, int n, std::string_view family, bool check) {
  return sparse_family(ctx, n, family, check).members;
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero() || f[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal needs f(0) != 0");
  std::vector<Coeff> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.ctx(), std::move(c)).monic();
}

}  // namespace cyclo
