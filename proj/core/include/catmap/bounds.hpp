#ifndef CATMAP_BOUNDS_HPP
#define CATMAP_BOUNDS_HPP

#include <vector>

#include "catmap/structure.hpp"
#include "catmap/units.hpp"

namespace catmap {

/// sum over the spectrum of max{log|lambda| - chi_+/2, 0}, chi_+ the top
/// log-modulus.
double entropy_lower_bound(const std::vector<double>& log_moduli);

/// entropy_lower_bound / sum max{log|lambda|, 0}; requires chi_+ > 0.
double positive_entropy_mass_bound(const std::vector<double>& log_moduli);

/// max over the spectra of positive_entropy_mass_bound, skipping elliptic
/// spectra; throws AllElliptic when every spectrum has chi_+ <= 0.
double lebesgue_weight_bound(const std::vector<std::vector<double>>& spectra);

/// Machine-checkable weight inequality for the reducible case: for every
/// direct sum T of invariant blocks, a coefficient
///   c_T = sum over blocks in T of sum max{log|lambda(B|block)|, 0},
/// and the right-hand side sum max{log|lambda| - chi_+(B)/2, 0} over the full
/// spectrum; the constraint is sum_T alpha_T c_T >= rhs.
struct ConstraintRow {
    std::vector<int> block_subset; // indices into StructureReport::blocks
    double coefficient = 0;
};

struct ReducibleConstraint {
    std::vector<ConstraintRow> rows;
    double rhs = 0;
    std::vector<double> block_coefficients; // per single block
};

ReducibleConstraint reducible_constraint(const StructureReport& report,
                                         const SymplecticMatrix& a, const SymplecticUnit& b,
                                         unsigned precision_bits);

/// Spectrum log-moduli of an integer matrix at the given precision.
std::vector<double> spectrum_log_moduli(const IntMatrix& m, unsigned precision_bits);

} // namespace catmap

#endif
