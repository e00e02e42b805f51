#ifndef CATMAP_SYMPLECTIC_HPP
#define CATMAP_SYMPLECTIC_HPP

#include <cstdint>
#include <vector>

#include "catmap/intmatrix.hpp"

namespace catmap {

/// Standard skew form J = [[0, I], [-I, 0]] in dimension 2d.
IntMatrix standard_J(int d);

bool is_symplectic(const IntMatrix& m);

/// Integer symplectic matrix, validated B^T J B = J on construction.
class SymplecticMatrix {
  public:
    explicit SymplecticMatrix(IntMatrix m);

    int d() const { return inner_.dim() / 2; }
    int dim() const { return inner_.dim(); }
    const IntMatrix& matrix() const { return inner_; }

    /// Exact inverse J^{-1} B^T J (integer, no elimination needed).
    SymplecticMatrix inverse() const;
    SymplecticMatrix operator*(const SymplecticMatrix& o) const;
    bool operator==(const SymplecticMatrix& o) const { return inner_ == o.inner_; }

  private:
    IntMatrix inner_;
};

/// Word over the generator alphabet {J, Shear(S), Linear(E)} with
///   J         = [[0, I], [-I, 0]]
///   Shear(S)  = [[I, 0], [S, I]],  S symmetric
///   Linear(E) = [[E, 0], [0, E^{-T}]],  E in GL(d, Z)
struct WordToken {
    enum class Kind { J, Shear, Linear };
    Kind kind = Kind::J;
    IntMatrix block; // S for Shear, E for Linear, unused for J

    static WordToken j() { return {Kind::J, IntMatrix()}; }
    static WordToken shear(IntMatrix s) { return {Kind::Shear, std::move(s)}; }
    static WordToken linear(IntMatrix e) { return {Kind::Linear, std::move(e)}; }
};

struct GeneratorWord {
    int d = 0;
    std::vector<WordToken> tokens;

    IntMatrix token_matrix(const WordToken& t) const;
    IntMatrix product() const;
};

/// Exact decomposition of a symplectic integer matrix into generator tokens;
/// the token product reconstructs the input exactly.
GeneratorWord symplectic_word(const SymplecticMatrix& a);

/// Deterministic product of word_length random generator tokens with entries
/// bounded by entry_bound; always exactly symplectic.
SymplecticMatrix random_symplectic(int d, int word_length, long entry_bound, uint64_t seed);
GeneratorWord random_word(int d, int word_length, long entry_bound, uint64_t seed);

} // namespace catmap

#endif
