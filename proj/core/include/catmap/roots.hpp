#ifndef CATMAP_ROOTS_HPP
#define CATMAP_ROOTS_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <vector>

#include "catmap/intpoly.hpp"

namespace catmap {

using BigFloat = boost::multiprecision::mpfr_float;

/// Minimal complex arithmetic over BigFloat; std::complex is not usable with
/// multiprecision scalars.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }
    BigComplex conj() const { return {re, -im}; }
    std::complex<double> to_double() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

BigFloat bigfloat_from_mpz(const mpz_class& z);
BigComplex eval_poly(const IntPoly& f, const BigComplex& z);

/// Roots of a squarefree integer polynomial, refined to the requested binary
/// precision (Aberth initialization in double, Newton refinement in MPFR).
struct RootSet {
    unsigned precision_bits = 0;
    std::vector<BigComplex> roots;

    std::vector<std::complex<double>> to_double() const {
        std::vector<std::complex<double>> out;
        out.reserve(roots.size());
        for (const auto& r : roots) out.push_back(r.to_double());
        return out;
    }
};

RootSet find_roots(const IntPoly& f, unsigned precision_bits);

/// log |f-root evaluations| helper used by the logarithmic embedding.
BigFloat log_abs(const BigComplex& z);

/// RAII guard for the thread-global mpfr_float working precision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

} // namespace catmap

#endif
