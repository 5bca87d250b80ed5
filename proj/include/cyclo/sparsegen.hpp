#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/explicit.hpp"

namespace cyclo {

/// A family of sparse irreducible polynomials of degree 2^(n-2) obtained by
/// substituting x -> x^(2^j) into a low-degree factor of Q_{2^m 5}.
struct SparseFamily {
  std::string id;
  std::uint64_t q = 0;
  int n = 0;
  /// Term pattern with exponents written in n, e.g. "x^(2^(n-2)) + a x^(3*2^(n-4)) + 2".
  std::string pattern;
  WitnessSet witness;
  std::vector<Poly> members;  // canonical order
};

/// Family identifiers accepted by generate_sparse besides "auto".
const std::vector<std::string>& sparse_family_ids();

/// Family id matching q's residue class mod 20.
std::string auto_family(const FieldContext& ctx);

/// Builds the family; `check` asserts every member is irreducible.
SparseFamily sparse_family(const FieldPtr& ctx, int n, std::string_view family = "auto", bool check = true);

std::vector<Poly> generate_sparse(const FieldPtr& ctx, int n, std::string_view family = "auto", bool check = true);

/// f(0)^-1 x^deg f(1/x).
Poly reciprocal(const Poly& f);

}  // namespace cyclo
