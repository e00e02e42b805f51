#ifndef CATMAP_SPECTRAL_HPP
#define CATMAP_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "catmap/intpoly.hpp"
#include "catmap/roots.hpp"

namespace catmap {

enum class RootClass { Real, UnitCircle, ComplexQuadruple };

struct TaggedRoot {
    std::complex<double> value;
    RootClass tag;
    unsigned precision_bits;
};

/// Eigenvalue class profile of a palindromic separable polynomial:
/// m real pairs, k unit-circle pairs, l off-circle complex quadruples,
/// m + k + 2l = d. Counts are certified by Sturm counts on the reciprocal
/// transform; the root values are advisory at the stated precision.
struct SpectralProfile {
    int d = 0;
    int m = 0, k = 0, l = 0;
    std::vector<TaggedRoot> roots;
};

SpectralProfile spectral_profile(const IntPoly& f, unsigned precision_bits);

/// Sufficient coefficient test for a unit-circle root of a palindromic
/// polynomial (fast rejection filter; never a certificate).
bool km_unit_circle_root(const IntPoly& f);

} // namespace catmap

#endif
