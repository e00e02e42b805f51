#include "catmap/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "catmap/errors.hpp"

namespace catmap {

SpectralProfile spectral_profile(const IntPoly& f, unsigned precision_bits) {
    if (!is_palindromic(f)) throw NotPalindromicError("spectral_profile: not palindromic");
    if (f(1) == 0 || f(-1) == 0)
        throw RootAtPlusMinusOneError("spectral_profile: +-1 is a root");
    if (!is_squarefree(f)) throw NotSquarefreeError("spectral_profile: not squarefree");

    IntPoly g = reciprocal_transform(f);
    SpectralProfile profile;
    profile.d = g.degree();
    // pairs of roots {lambda, 1/lambda} of f <-> roots y = lambda + 1/lambda of g;
    // |y| > 2 real pair, y in (-2, 2) unit-circle pair, complex y quadruple
    profile.m = sturm_count(g, SturmBound::neg_inf(), SturmBound::at(-2)) +
                sturm_count(g, SturmBound::at(2), SturmBound::pos_inf());
    profile.k = sturm_count(g, SturmBound::at(-2), SturmBound::at(2));
    profile.l = (profile.d - profile.m - profile.k) / 2;

    RootSet rs = find_roots(f, precision_bits);
    struct Scored {
        std::complex<double> z;
        double im_abs, circle_dist;
    };
    std::vector<Scored> scored;
    for (const auto& r : rs.roots) {
        std::complex<double> z = r.to_double();
        scored.push_back({z, std::abs(z.imag()), std::abs(std::abs(z) - 1.0)});
    }
    // assign tags to match the certified counts: the 2m closest-to-real roots
    // are the real pairs, then the 2k closest to the unit circle
    std::vector<int> idx(scored.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return scored[a].im_abs < scored[b].im_abs; });
    std::vector<RootClass> tags(scored.size(), RootClass::ComplexQuadruple);
    const double tol = 1e-9;
    for (int i = 0; i < 2 * profile.m; ++i) {
        if (scored[idx[i]].im_abs > tol)
            throw PrecisionInsufficientError("spectral_profile: real-root tagging ambiguous");
        tags[idx[i]] = RootClass::Real;
    }
    std::vector<int> rest(idx.begin() + 2 * profile.m, idx.end());
    std::sort(rest.begin(), rest.end(),
              [&](int a, int b) { return scored[a].circle_dist < scored[b].circle_dist; });
    for (int i = 0; i < 2 * profile.k; ++i) {
        if (scored[rest[i]].circle_dist > tol)
            throw PrecisionInsufficientError("spectral_profile: circle-root tagging ambiguous");
        tags[rest[i]] = RootClass::UnitCircle;
    }
    for (size_t i = 2 * profile.k; i < rest.size(); ++i) {
        if (scored[rest[i]].im_abs < tol || scored[rest[i]].circle_dist < tol)
            throw PrecisionInsufficientError("spectral_profile: quadruple tagging ambiguous");
    }
    for (size_t i = 0; i < scored.size(); ++i)
        profile.roots.push_back({scored[i].z, tags[i], precision_bits});
    return profile;
}

bool km_unit_circle_root(const IntPoly& f) {
    if (!is_palindromic(f) || f.degree() % 2 != 0 || f.degree() == 0) return false;
    int n = f.degree() / 2;
    double an = std::abs(f[n].get_d());
    for (int k = 0; k < n; ++k) {
        double ak = std::abs(f[k].get_d());
        double threshold = an * std::cos(M_PI / (n / (n - k) + 2));
        if (ak >= threshold * (1.0 + 1e-9) && threshold > 0) return true;
    }
    return false;
}

} // namespace catmap
