#ifndef CATMAP_STRUCTURE_HPP
#define CATMAP_STRUCTURE_HPP

#include <vector>

#include "catmap/intmatrix.hpp"
#include "catmap/spectral.hpp"
#include "catmap/symplectic.hpp"

namespace catmap {

enum class BlockClass { Symplectic, Isotropic };

/// One invariant block of the rational decomposition: an irreducible factor
/// of chi_A with the primitive lattice of its kernel and the class of the
/// restricted symplectic form.
struct StructureBlock {
    IntPoly poly;
    LatticeBasis lattice;
    BlockClass klass = BlockClass::Symplectic;
    int partner = -1; // index of the dual isotropic block, -1 for symplectic
};

/// Invariant-subtorus structure of a symplectic matrix with separable
/// characteristic polynomial: factor blocks, isotropy classes, eigenvalue
/// counts and the predicted centralizer rank m + l - I.
struct StructureReport {
    IntPoly chi;
    std::vector<StructureBlock> blocks;
    int m = 0, k = 0, l = 0;
    int isotropic_pairs = 0; // I
    int predicted_rank = 0;  // m + l - I
};

StructureReport structure_report(const SymplecticMatrix& a, unsigned precision_bits = 128);

/// Monic reciprocal rho*(X) = +-X^{deg rho} rho(1/X).
IntPoly reciprocal_poly(const IntPoly& rho);

/// Gram matrix of the standard symplectic form on a lattice basis.
IntMatrix symplectic_gram(const LatticeBasis& basis);

} // namespace catmap

#endif
