#ifndef CATMAP_GALOIS_HPP
#define CATMAP_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "catmap/intpoly.hpp"
#include "catmap/spectral.hpp"
#include "catmap/symplectic.hpp"

namespace catmap {

/// Frobenius cycle-type witness: a prime with squarefree reduction whose
/// factor-degree multiset realizes the required cycle pattern.
struct CycleWitness {
    int cycle_length = 0;
    uint64_t prime = 0;
    std::vector<int> degrees; // sorted multiset
};

/// One-sided certificate for the full wreath-product Galois group
/// Gal = S_2 wr S_d of order 2^d d!: witnesses for a 2-cycle, 4-cycle,
/// (2d-2)-cycle and 2d-cycle (deduplicated for d = 2, 3).
struct GaloisCertificate {
    enum class Status { Certified, Inconclusive };
    Status status = Status::Inconclusive;
    int d = 0;
    uint64_t prime_bound = 0;
    std::vector<CycleWitness> witnesses;
    mpz_class group_order; // 2^d d! when certified

    bool certified() const { return status == Status::Certified; }
};

/// Factor-degree multiset of f mod p, absent when the reduction is not
/// squarefree.
std::optional<std::vector<int>> cycle_type_mod_p(const IntPoly& f, uint64_t p);

/// Required degree multisets for the cycle lengths {2, 4, 2d-2, 2d}.
std::vector<std::pair<int, std::vector<int>>> required_cycle_patterns(int d);

GaloisCertificate galois_condition(const IntPoly& f, uint64_t prime_bound);

struct RatioRootResult {
    bool no_ratio_root_of_unity = false;
    unsigned long witness = 0; // least failing N when false
};

/// Enumerates all N with phi(N) <= (deg f)^2 and tests separability of the
/// N-th power polynomial.
RatioRootResult no_ratio_root_of_unity(const IntPoly& f);

/// Independent route: the ratio polynomial Res_Y(f(Y), f(X Y)) must carry
/// (X - 1) with multiplicity exactly deg f and no cyclotomic factor Phi_N,
/// N >= 2, phi(N) <= (deg f)^2.
IntPoly ratio_resultant_poly(const IntPoly& f);
RatioRootResult no_ratio_root_of_unity_resultant(const IntPoly& f);

struct AdmissibilityBundle {
    GaloisCertificate galois;
    bool irreducible = false;
    bool reducible_route = false; // caller should use structure_report
    RatioRootResult ratio;
    std::optional<SpectralProfile> profile;
    bool applicable = false; // certified && no ratio root && m + l >= 2
};

AdmissibilityBundle certify(const SymplecticMatrix& a, uint64_t prime_bound,
                            unsigned precision_bits = 128);
AdmissibilityBundle certify_poly(const IntPoly& chi, uint64_t prime_bound,
                                 unsigned precision_bits = 128);

/// Certificate-inheriting family f_k = f + k (prod of witness primes) X^d,
/// keeping only k whose reciprocal transform has no roots in [-2, 2].
struct Candidate {
    long k = 0;
    IntPoly f_k;
    AdmissibilityBundle bundle;
    bool all_real = false; // m == d (reported for d = 2 per the k << -1 regime)
};

std::vector<Candidate> generate_candidates(const IntPoly& f, const GaloisCertificate& cert,
                                           long k_min, long k_max,
                                           unsigned precision_bits = 128);

} // namespace catmap

#endif
