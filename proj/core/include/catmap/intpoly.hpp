#ifndef CATMAP_INTPOLY_HPP
#define CATMAP_INTPOLY_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catmap/errors.hpp"

namespace catmap {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored low-to-high with no trailing zeros (the zero polynomial is empty).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    /// c * X^k
    static IntPoly monomial(const mpz_class& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& operator[](int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const mpz_class& k) const;
    /// X^k * this
    IntPoly shifted(int k) const;

    IntPoly derivative() const;
    mpz_class operator()(const mpz_class& x) const;
    /// sign of value at num/den (den > 0), exactly, by homogeneous Horner
    int sign_at(const mpz_class& num, const mpz_class& den) const;

    mpz_class content() const;
    IntPoly primitive_part() const;

    /// Quotient of exact division; throws Error if the division is not exact.
    IntPoly divide_exact(const IntPoly& divisor) const;
    /// True iff divisor divides this exactly over Z.
    bool divisible_by(const IntPoly& divisor) const;

    std::string to_string() const;

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// remainder sequence helper: prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

/// gcd over Z, primitive with positive leading coefficient
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

bool is_palindromic(const IntPoly& f);

/// g of degree d with X^d g(X + 1/X) = f, via the Dickson basis
/// X^k + X^{-k} = P_k(X + 1/X), P_{k+1} = Y P_k - P_{k-1}.
IntPoly reciprocal_transform(const IntPoly& f);

/// inverse of reciprocal_transform: X^d g(X + 1/X), expanded exactly
IntPoly expand_reciprocal(const IntPoly& g);

bool is_squarefree(const IntPoly& f);

/// Sturm endpoint: a rational number or an infinity.
struct SturmBound {
    enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
    mpz_class num = 0;
    mpz_class den = 1; // > 0

    static SturmBound neg_inf() { return {Kind::NegInf, 0, 1}; }
    static SturmBound pos_inf() { return {Kind::PosInf, 0, 1}; }
    static SturmBound at(long n, long d = 1) { return {Kind::Finite, n, d}; }
    static SturmBound at(mpz_class n, mpz_class d) {
        return {Kind::Finite, std::move(n), std::move(d)};
    }
};

/// Number of distinct real roots of g in (a, b].
int sturm_count(const IntPoly& g, const SturmBound& a, const SturmBound& b);
int sturm_count_all(const IntPoly& g);

/// Res(f, g) with the convention Res(f, X - a) = f(a) for monic f,
/// i.e. lc(g)^{deg f} * prod over roots b of g of f(b).
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// Monic polynomial whose roots are the k-th powers of the roots of f
/// (with multiplicity). Doubling for 2-parts, power sums for the odd part.
IntPoly power_poly(const IntPoly& f, unsigned long k);
/// Literal resultant route Res_Y(f(Y), X - Y^k), for cross-checking.
IntPoly power_poly_resultant(const IntPoly& f, unsigned long k);

/// Power sums s_1..s_m of the roots of a monic f (exact, Newton identities).
std::vector<mpz_class> power_sums(const IntPoly& f, unsigned long m);

/// Text format: "deg c0 c1 ... cdeg".
std::string poly_to_text(const IntPoly& p);
IntPoly poly_from_text(const std::string& text);

} // namespace catmap

#endif
