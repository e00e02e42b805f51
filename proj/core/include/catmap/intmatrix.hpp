#ifndef CATMAP_INTMATRIX_HPP
#define CATMAP_INTMATRIX_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "catmap/intpoly.hpp"

namespace catmap {

/// Square matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}
    IntMatrix(int n, std::vector<mpz_class> entries);
    /// Row-major initializer, size must be a perfect square.
    IntMatrix(std::initializer_list<long> entries);

    static IntMatrix identity(int n);

    int dim() const { return n_; }
    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<mpz_class>& entries() const { return e_; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool is_identity() const;
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    mpz_class det() const;
    /// Exact inverse; requires det = +-1 (throws Error otherwise).
    IntMatrix inverse_unimodular() const;

    std::string to_string() const;

  private:
    int n_ = 0;
    std::vector<mpz_class> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Basis of a sublattice of Z^ambient, vectors as rows; always primitive
/// (the lattice equals its saturation) when produced by hnf_kernel.
struct LatticeBasis {
    int ambient_dim = 0;
    std::vector<std::vector<mpz_class>> vectors;

    int rank() const { return static_cast<int>(vectors.size()); }
};

/// Exact characteristic polynomial det(X I - M), division-free (Berkowitz).
IntPoly char_poly(const IntMatrix& m);

/// Exact Horner evaluation p(M).
IntMatrix poly_eval_matrix(const IntPoly& p, const IntMatrix& m);

/// Primitive basis of ker_Q(M) /\ Z^n via column echelon with unimodular
/// transform; empty basis for injective M.
LatticeBasis hnf_kernel(const IntMatrix& m);

/// Elementary divisors d_1 | d_2 | ... of an arbitrary rectangular integer
/// matrix (rows x cols), nonnegative, zeros trimmed.
std::vector<mpz_class> elementary_divisors(std::vector<std::vector<mpz_class>> m);

/// Smith normal form with transforms: U * A * V = diag(S), U and V unimodular.
struct SmithDecomposition {
    IntMatrix left;   // U
    IntMatrix right;  // V
    std::vector<mpz_class> diag;
};
SmithDecomposition smith_with_transforms(const IntMatrix& a);

/// True iff the rows of the basis generate a saturated (primitive) sublattice.
bool lattice_is_primitive(const LatticeBasis& basis);

/// Text format: first token n, then n^2 row-major entries.
std::string matrix_to_text(const IntMatrix& m);
IntMatrix matrix_from_text(const std::string& text);

} // namespace catmap

#endif
