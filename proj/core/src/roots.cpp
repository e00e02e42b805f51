#include "catmap/roots.hpp"

#include <algorithm>
#include <cmath>

#include "catmap/errors.hpp"

namespace catmap {

BigFloat bigfloat_from_mpz(const mpz_class& z) {
    BigFloat f;
    mpfr_set_z(f.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return f;
}

BigComplex eval_poly(const IntPoly& f, const BigComplex& z) {
    BigComplex v;
    for (int i = f.degree(); i >= 0; --i) {
        v = v * z;
        v.re += bigfloat_from_mpz(f[i]);
    }
    return v;
}

BigFloat log_abs(const BigComplex& z) { return log(z.norm2()) / 2; }

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 4;
    BigFloat::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

namespace {

std::complex<double> eval_poly_d(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

// Aberth-Ehrlich in double precision; input squarefree with nonzero constant
std::vector<std::complex<double>> aberth(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<double> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * i;

    double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i] / c[n]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2 * M_PI * k / n + 0.7 / n + 0.3;
        z[k] = radius * std::polar(1.0, theta);
    }
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> fv = eval_poly_d(c, z[k]);
            std::complex<double> dv = eval_poly_d(dc, z[k]);
            if (std::abs(dv) == 0.0) {
                z[k] *= 1.0 + 1e-8;
                worst = 1;
                continue;
            }
            std::complex<double> ratio = fv / dv;
            std::complex<double> sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            std::complex<double> w = ratio / (1.0 - ratio * sum);
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

} // namespace

RootSet find_roots(const IntPoly& f, unsigned precision_bits) {
    if (f.is_zero()) throw ZeroPolynomialError("find_roots of zero polynomial");
    PrecisionGuard guard(precision_bits + 32);

    IntPoly g = f;
    RootSet out;
    out.precision_bits = precision_bits;
    while (!g.is_zero() && g[0] == 0) {
        out.roots.emplace_back(); // exact zero root
        g = IntPoly([&] {
            std::vector<mpz_class> c(g.coeffs().begin() + 1, g.coeffs().end());
            return c;
        }());
    }
    int n = g.degree();
    if (n <= 0) return out;

    std::vector<double> cd(n + 1);
    for (int i = 0; i <= n; ++i) cd[i] = g[i].get_d();

    auto approx = aberth(cd);

    IntPoly dg = g.derivative();
    BigFloat tol = pow(BigFloat(2), -static_cast<int>(precision_bits));
    for (auto& z0 : approx) {
        BigComplex z(z0);
        for (int iter = 0; iter < 80; ++iter) {
            BigComplex fv = eval_poly(g, z);
            BigComplex dv = eval_poly(dg, z);
            if (dv.norm2() == 0) throw PrecisionInsufficientError("find_roots: derivative vanished");
            BigComplex step = fv / dv;
            z = z - step;
            BigFloat rel = step.abs() / (BigFloat(1) + z.abs());
            if (rel < tol) break;
        }
        out.roots.push_back(std::move(z));
    }
    // pairwise separation sanity for squarefree input
    for (size_t i = 0; i < out.roots.size(); ++i)
        for (size_t j = i + 1; j < out.roots.size(); ++j) {
            BigComplex d = out.roots[i] - out.roots[j];
            if (d.norm2() == 0)
                throw PrecisionInsufficientError("find_roots: coincident refined roots");
        }
    return out;
}

} // namespace catmap
