#ifndef CATMAP_UNITS_HPP
#define CATMAP_UNITS_HPP

#include <optional>
#include <vector>

#include "catmap/intpoly.hpp"
#include "catmap/roots.hpp"
#include "catmap/spectral.hpp"
#include "catmap/symplectic.hpp"

namespace catmap {

/// Field norm of p in Z[X]/(chi): the exact product of p over the roots of
/// chi (monic); |result| = 1 iff p(A) is invertible over Z.
mpz_class field_norm(const IntPoly& p, const IntPoly& chi);

/// Exact test p(A) p(A^{-1}) = I, equivalent to p(A) in Sp(2d, Z).
bool is_symplectic_unit(const IntPoly& p, const SymplecticMatrix& a);

/// Inverse-closed eigenvalue classes of chi_A with high-precision
/// representatives; ordering: real classes by decreasing |lambda|, then
/// off-circle complex classes by decreasing modulus, then unit-circle classes.
struct EigenClass {
    int rep = 0; // index of the representative root (|rep| > 1 off circle)
    int inv = 0; // index of the inverse-partner root
    RootClass tag = RootClass::Real;
};

struct EigenClassInfo {
    IntPoly chi;
    unsigned precision_bits = 0;
    int m = 0, k = 0, l = 0;
    std::vector<BigComplex> roots;
    std::vector<EigenClass> classes;

    int reduced_dim() const { return m + l; }
};

EigenClassInfo eigen_classes(const IntPoly& chi, unsigned precision_bits);

/// Centralizer element p(A) with both exactness certificates and its
/// logarithmic embedding (full r+c vector and reduced (m+l)-vector).
struct SymplecticUnit {
    IntPoly p;
    IntMatrix matrix;
    std::vector<double> log_full;
    std::vector<double> log_reduced;
    bool norm_certified = false;       // |N_{K/Q}(p)| = 1, exact
    bool symplectic_certified = false; // p(A) p(A^{-1}) = I, exact
};

/// Builds a certified unit from its polynomial; throws NotSymplecticError if
/// p(A) is not a symplectic unit.
SymplecticUnit make_unit(const IntPoly& p, const SymplecticMatrix& a,
                         const EigenClassInfo& classes);

std::vector<double> log_embedding_full(const IntPoly& p, const EigenClassInfo& classes);
std::vector<double> log_embedding_reduced(const IntPoly& p, const EigenClassInfo& classes);

struct UnitSearchResult {
    std::vector<SymplecticUnit> units;
    bool exhausted = false; // no nontrivial unit in the box
    EigenClassInfo classes;
};

/// Box search over integer polynomials of degree < 2d with coefficients in
/// [-coeff_bound, coeff_bound]: float pruning by |p(l) p(1/l) - 1| < 1e-6,
/// exact confirmation, torsion (+-1) deduplication, canonical ordering.
UnitSearchResult unit_search(const SymplecticMatrix& a, long coeff_bound, int limit,
                             unsigned precision_bits);

/// Numerical rank of the reduced log-vector matrix at the given tolerance.
int lattice_rank(const std::vector<SymplecticUnit>& units, double tol);

/// Eigenvalue-gap element: every ratio max{log|lambda|, 0} / chi_+ lies in
/// [0, epsilon] u [1 - epsilon, 1] (convention 0/0 = 0).
struct GapCertificate {
    SymplecticUnit unit;
    std::vector<double> ratios;
    double epsilon_requested = 0;
    double epsilon_achieved = 1; // smallest band width this unit satisfies
    int m_used = 0;
    bool reached = false;
    std::vector<long> exponents; // in terms of the independent search units
};

GapCertificate b_epsilon(const SymplecticMatrix& a, const std::vector<SymplecticUnit>& units,
                         const EigenClassInfo& classes, double epsilon, int m_max);

/// Gap ratios recomputed from scratch from the exact matrix (via its
/// characteristic polynomial), not from accumulated float state.
std::vector<double> gap_ratios(const IntMatrix& b, unsigned precision_bits);

} // namespace catmap

#endif
