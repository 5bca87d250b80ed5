#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/fpoly.hpp"

namespace cyclo {

struct FactorizationReport {
  Poly input;
  Coeff leading = 0;
  /// Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<Poly, unsigned>> factors;

  /// leading * prod factor^multiplicity
  Poly expand() const;
  /// Factors without multiplicities.
  std::vector<Poly> distinct() const;
};

/// Squarefree split, distinct-degree split, then randomized equal-degree
/// splitting driven by a generator seeded with `seed`.
FactorizationReport factorize(const Poly& f, std::uint64_t seed = 0);

/// Roots in F_q listed with multiplicity, sorted by encoding.
std::vector<FieldElement> find_roots(const Poly& f, std::uint64_t seed = 0);

/// Squarefree decomposition of a monic polynomial: pairs (g, i) with the g
/// pairwise coprime, squarefree, and f = prod g^i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Splits a monic squarefree polynomial into pairs (g, d) where g is the
/// product of all its irreducible factors of degree d.
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f);

/// Splits a monic squarefree product of irreducibles all of degree d.
std::vector<Poly> equal_degree(const Poly& g, unsigned d, std::uint64_t seed);

}  // namespace cyclo
