#ifndef CATMAP_FACTORIZATION_HPP
#define CATMAP_FACTORIZATION_HPP

#include <utility>
#include <vector>

#include "catmap/intpoly.hpp"

namespace catmap {

/// Monic irreducible factors with multiplicities, product reconstructs the
/// input exactly. Squarefree split, factorization mod a good prime,
/// Hensel lifting to the Landau-Mignotte bound, subset recombination.
/// Input must be monic of degree <= 16 (desk scale).
std::vector<std::pair<IntPoly, int>> factor_over_Z(const IntPoly& f);

bool is_irreducible_over_Z(const IntPoly& f);

/// Squarefree decomposition f = prod part_i^i (Yun); parts monic.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// n-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long n);

unsigned long euler_phi(unsigned long n);

} // namespace catmap

#endif
