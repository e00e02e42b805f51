#ifndef CATMAP_ERRORS_HPP
#define CATMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catmap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CATMAP_DEFINE_ERROR(NAME)                                            \
    struct NAME : Error {                                                     \
        using Error::Error;                                                   \
    }

CATMAP_DEFINE_ERROR(ZeroPolynomialError);
CATMAP_DEFINE_ERROR(NotPalindromicError);
CATMAP_DEFINE_ERROR(OddDegreeError);
CATMAP_DEFINE_ERROR(DegreeTooLargeError);
CATMAP_DEFINE_ERROR(NotSquarefreeError);
CATMAP_DEFINE_ERROR(OddDimensionError);
CATMAP_DEFINE_ERROR(NotSymplecticError);
CATMAP_DEFINE_ERROR(RootAtPlusMinusOneError);
CATMAP_DEFINE_ERROR(NotSeparableError);
CATMAP_DEFINE_ERROR(NotPrimeError);
CATMAP_DEFINE_ERROR(EmptyRangeError);
CATMAP_DEFINE_ERROR(NotIrreducibleError);
CATMAP_DEFINE_ERROR(RankDeficientError);
CATMAP_DEFINE_ERROR(ZeroTopExponentError);
CATMAP_DEFINE_ERROR(AllEllipticError);
CATMAP_DEFINE_ERROR(IncompatibleUnitError);
CATMAP_DEFINE_ERROR(PrecisionInsufficientError);
CATMAP_DEFINE_ERROR(NotNormalizedError);
CATMAP_DEFINE_ERROR(NoAlignmentError);
CATMAP_DEFINE_ERROR(ClusterOverlapError);
CATMAP_DEFINE_ERROR(DegenerateAverageError);
CATMAP_DEFINE_ERROR(ParseError);

#undef CATMAP_DEFINE_ERROR

/// Convention mismatch in the quantum layer: conjugating a translation by a
/// metaplectic operator failed to land on the classically mapped translation.
struct EgorovDefectError : Error {
    EgorovDefectError(std::string msg, std::vector<long> n_, double defect_)
        : Error(std::move(msg)), n(std::move(n_)), defect(defect_) {}
    std::vector<long> n;
    double defect;
};

} // namespace catmap

#endif
