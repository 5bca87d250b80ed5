#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/ffield.hpp"
#include "cyclo/fpoly.hpp"

namespace cyclo {

/// 2-adic data of q that decides the shape of the factorization of Q_{2^n r}.
struct CaseParameters {
  std::uint64_t q = 0;
  std::uint64_t r = 5;
  /// q mod 20 (only meaningful for r = 5).
  unsigned residue = 0;
  int L1 = 0;  // v2(q - 1)
  int L2 = 0;  // v2(q^2 - 1)
  int L4 = 0;  // v2(q^4 - 1)
  int L = 0;   // v2(q^phi(r) - 1)
  /// q = 20k + residue.
  std::uint64_t k = 0;
};

CaseParameters case_params(const FieldContext& ctx, std::uint64_t r = 5);

/// Degree of every irreducible factor of Q_{2^n r}: the order of q mod 2^n r.
std::uint64_t factor_degree(std::uint64_t q, std::uint64_t r, int n);

/// Level from which x -> x^2 maps irreducible factors of Q_{2^n r} to
/// irreducible factors of Q_{2^(n+1) r}.
int stabilization_level(std::uint64_t q, std::uint64_t r);

/// One consistent assignment of the auxiliary constants used to build factors.
/// Residue 3/7 witnesses fill a2..c5; residue 13/17 witnesses fill rho, a_l2, a_l4;
/// the binomial and trinomial families use w, rho, c and a2/a3.
struct Witness {
  std::optional<FieldElement> rho;
  std::optional<FieldElement> w;  // element of Omega(5), or a trace w + 1/w
  std::optional<FieldElement> c;  // c^2 = -2 or c^2 = 2
  std::optional<FieldElement> a2, a3, b3, c3, a4, b4, c4, a5, b5, c5;
  std::optional<FieldElement> a_l2, a_l4;
  std::optional<FieldElement> alpha;  // alpha^2 = -2
  std::optional<FieldElement> beta;   // beta^2 = 2
  /// Constant term of the quartic assembled from the deepest populated level (+1/-1), or 0.
  int constant = 0;
  /// Residue 13/17: (2 rho_2 - 1) a_l2 is a square. Residue 3/7: 2 - a2 is a square.
  bool square_branch = false;
};

struct WitnessSet {
  std::vector<Witness> solutions;
};

/// Residue 13/17: a_l2^2 = 5 rho for every primitive 2^L1-th root rho, then
/// a_l4^2 = (2 rho_2 - 1) a_l2 or -(2 rho_2 + 1) a_l2, whichever is a square.
WitnessSet solve_witness_1317(const FieldContext& ctx, const CaseParameters& params, const RhoChain& rho);

/// Residue 3/7 (characteristic not 3): a2^2 = -5, a3^2 = +-2 - a2, c3 = 3/a3,
/// then (a4, b4, c4) on the branch selected by whether 2 - a2 is a square.
/// Every returned witness yields a quartic dividing Q_80.
WitnessSet solve_witness_3mod20(const FieldContext& ctx, const CaseParameters& params);

/// Splits each level-4 quartic x^4 + a4 x^3 + b4 x^2 + c4 x + 1 of `w4` into
/// level-5 quartics by solving the two resolvent quartics in b5.
WitnessSet solve_witness_7mod20_n5(const FieldContext& ctx, const CaseParameters& params, const WitnessSet& w4);

/// Monic g of the same degree with g(x) g(-x) = +-f(x^2), deg f in {1, 2, 4}.
/// Returns every such g over F_q (possibly none).
std::vector<Poly> split_even_part(const Poly& f, std::uint64_t seed = 0);

struct ExplicitFactorization {
  FieldPtr ctx;
  std::uint64_t r = 5;
  int n = 0;
  std::vector<Poly> factors;  // canonical order
  FactorMeta meta;
  std::string provenance;
};

/// Closed-form factorization of Q_{2^n 5}; p must not be 2 or 5.
ExplicitFactorization factor_explicit(const FieldPtr& ctx, int n);

/// Oracle factorization of Q_{2^min(n,L) r} lifted by x -> x^(2^(n-L)).
ExplicitFactorization lift_general(const FieldPtr& ctx, std::uint64_t r, int n, std::uint64_t seed = 0);

struct VerifyOptions {
  /// Order checks are skipped for factors above this degree.
  int order_degree_limit = 1 << 12;
};

struct VerificationReport {
  bool product_ok = false;
  bool irreducible_ok = false;
  bool count_ok = false;
  bool degree_ok = false;
  bool order_ok = false;
  bool order_checked = false;
  std::vector<std::string> failures;

  bool passed() const { return product_ok && irreducible_ok && count_ok && degree_ok && order_ok; }
};

VerificationReport verify_factorization(const ExplicitFactorization& ef, const VerifyOptions& options = {});

}  // namespace cyclo
