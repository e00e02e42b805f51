#ifndef CATMAP_MODPOLY_HPP
#define CATMAP_MODPOLY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "catmap/intpoly.hpp"

namespace catmap {

/// Polynomial over F_p for word-sized prime p, low-to-high coefficients.
class ModPoly {
  public:
    ModPoly() = default;
    ModPoly(uint64_t p, std::vector<uint64_t> coeffs);
    static ModPoly reduce(const IntPoly& f, uint64_t p);
    static ModPoly x(uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly one(uint64_t p) { return ModPoly(p, {1}); }

    uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    uint64_t operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly mod(const ModPoly& m) const;
    ModPoly mulmod(const ModPoly& o, const ModPoly& m) const;
    ModPoly powmod(const mpz_class& e, const ModPoly& m) const;
    ModPoly derivative() const;
    ModPoly monic() const;
    IntPoly lift_symmetric() const; // representatives in (-p/2, p/2]

    friend ModPoly mod_gcd(ModPoly a, ModPoly b);
    /// g = gcd(a,b) monic with g = s*a + t*b.
    friend void mod_ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly* g, ModPoly* s,
                            ModPoly* t);

  private:
    void normalize();
    uint64_t p_ = 0;
    std::vector<uint64_t> c_;
};

bool is_prime_u64(uint64_t n);

/// Degrees of the distinct-degree factorization of a squarefree f mod p:
/// multiset of irreducible factor degrees. Empty optional when f mod p is not
/// squarefree (or drops degree).
std::optional<std::vector<int>> factor_degrees_mod_p(const IntPoly& f, uint64_t p);

/// Full irreducible factorization of a squarefree monic f over F_p
/// (distinct-degree + equal-degree splitting; p odd). Deterministic in seed.
std::vector<ModPoly> factor_mod_p_squarefree(const ModPoly& f, uint64_t seed = 1);

} // namespace catmap

#endif
