#include "catmap/galois.hpp"

#include <algorithm>
#include <map>

#include "catmap/errors.hpp"
#include "catmap/factorization.hpp"
#include "catmap/modpoly.hpp"

namespace catmap {

std::optional<std::vector<int>> cycle_type_mod_p(const IntPoly& f, uint64_t p) {
    return factor_degrees_mod_p(f, p);
}

std::vector<std::pair<int, std::vector<int>>> required_cycle_patterns(int d) {
    int n = 2 * d;
    auto pattern = [&](int len) {
        std::vector<int> pat;
        if (len == 2 || len == 4) {
            pat.assign(n - len, 1);
            pat.push_back(len);
        } else if (len == n - 2) {
            pat = {1, 1, n - 2};
        } else {
            pat = {n};
        }
        std::sort(pat.begin(), pat.end());
        return pat;
    };
    std::vector<std::pair<int, std::vector<int>>> req;
    for (int len : {2, 4, 2 * d - 2, 2 * d}) {
        auto pat = pattern(len);
        bool seen = false;
        for (const auto& [l, q] : req)
            if (q == pat) seen = true;
        if (!seen) req.emplace_back(len, pat);
    }
    return req;
}

GaloisCertificate galois_condition(const IntPoly& f, uint64_t prime_bound) {
    if (!f.is_monic() || !is_palindromic(f))
        throw NotPalindromicError("galois_condition: f must be monic palindromic");
    if (f.degree() < 4 || f.degree() % 2 != 0)
        throw OddDegreeError("galois_condition: degree must be even and >= 4");
    GaloisCertificate cert;
    cert.d = f.degree() / 2;
    cert.prime_bound = prime_bound;

    auto required = required_cycle_patterns(cert.d);
    std::map<int, CycleWitness> found;
    for (uint64_t p = 2; p <= prime_bound && found.size() < required.size(); ++p) {
        if (!is_prime_u64(p)) continue;
        auto type = cycle_type_mod_p(f, p);
        if (!type) continue;
        for (const auto& [len, pat] : required) {
            if (found.count(len)) continue;
            if (*type == pat) found[len] = CycleWitness{len, p, *type};
        }
    }
    for (const auto& [len, w] : found) cert.witnesses.push_back(w);
    if (found.size() == required.size()) {
        cert.status = GaloisCertificate::Status::Certified;
        mpz_class order = 1;
        for (int i = 2; i <= cert.d; ++i) order *= i;
        mpz_class pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, cert.d);
        cert.group_order = order * pow2;
    }
    return cert;
}

RatioRootResult no_ratio_root_of_unity(const IntPoly& f) {
    if (!is_squarefree(f)) throw NotSquarefreeError("no_ratio_root_of_unity: f not squarefree");
    unsigned long n = static_cast<unsigned long>(f.degree());
    unsigned long phi_bound = n * n;
    unsigned long n_bound = 2 * n * n * n * n;
    for (unsigned long N = 2; N <= n_bound; ++N) {
        if (euler_phi(N) > phi_bound) continue;
        if (!is_squarefree(power_poly(f, N))) return {false, N};
    }
    return {true, 0};
}

IntPoly ratio_resultant_poly(const IntPoly& f) {
    int n = f.degree();
    int deg = n * n;
    // interpolate x -> Res_Y(f(Y), f(x Y)) at deg+1 integer points
    std::vector<mpz_class> xs(deg + 1), ys(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        long s = (i + 1) / 2;
        if (i % 2 == 0) s = -s;
        mpz_class x(s);
        std::vector<mpz_class> c(n + 1);
        mpz_class xp = 1;
        for (int j = 0; j <= n; ++j) {
            c[j] = f[j] * xp;
            xp *= x;
        }
        IntPoly fx(std::move(c));
        xs[i] = x;
        ys[i] = fx.is_zero() ? mpz_class(0) : resultant(fx, f);
    }
    // Newton's divided differences over Q, assembled exactly
    std::vector<mpq_class> coef(deg + 1);
    for (int i = 0; i <= deg; ++i) coef[i] = mpq_class(ys[i]);
    for (int level = 1; level <= deg; ++level)
        for (int i = deg; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / mpq_class(xs[i] - xs[i - level]);
    std::vector<mpq_class> acc{coef[deg]};
    for (int i = deg - 1; i >= 0; --i) {
        // acc <- acc * (X - x_i) + coef[i]
        std::vector<mpq_class> next(acc.size() + 1, 0);
        for (size_t t = 0; t < acc.size(); ++t) {
            next[t + 1] += acc[t];
            next[t] -= acc[t] * mpq_class(xs[i]);
        }
        next[0] += coef[i];
        acc = std::move(next);
    }
    std::vector<mpz_class> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        acc[i].canonicalize();
        if (acc[i].get_den() != 1) throw Error("ratio_resultant_poly: non-integral result");
        out[i] = acc[i].get_num();
    }
    return IntPoly(std::move(out));
}

RatioRootResult no_ratio_root_of_unity_resultant(const IntPoly& f) {
    if (!is_squarefree(f))
        throw NotSquarefreeError("no_ratio_root_of_unity_resultant: f not squarefree");
    unsigned long n = static_cast<unsigned long>(f.degree());
    IntPoly r = ratio_resultant_poly(f).primitive_part();
    // (X - 1) multiplicity must be exactly n (the diagonal ratios)
    IntPoly xm1{-1, 1};
    unsigned long mult = 0;
    while (r.divisible_by(xm1)) {
        r = r.divide_exact(xm1);
        ++mult;
    }
    if (mult != n) return {false, 1};
    unsigned long phi_bound = n * n;
    unsigned long n_bound = 2 * n * n * n * n;
    for (unsigned long N = 2; N <= n_bound; ++N) {
        if (euler_phi(N) > phi_bound) continue;
        if (r.divisible_by(cyclotomic(N))) return {false, N};
    }
    return {true, 0};
}

AdmissibilityBundle certify_poly(const IntPoly& chi, uint64_t prime_bound,
                                 unsigned precision_bits) {
    AdmissibilityBundle bundle;
    bundle.irreducible = is_irreducible_over_Z(chi);
    if (!bundle.irreducible) {
        bundle.reducible_route = true;
        bundle.galois.d = chi.degree() / 2;
        bundle.galois.prime_bound = prime_bound;
        return bundle;
    }
    bundle.galois = galois_condition(chi, prime_bound);
    bundle.ratio = no_ratio_root_of_unity(chi);
    bundle.profile = spectral_profile(chi, precision_bits);
    bundle.applicable = bundle.galois.certified() && bundle.ratio.no_ratio_root_of_unity &&
                        (bundle.profile->m + bundle.profile->l >= 2);
    return bundle;
}

AdmissibilityBundle certify(const SymplecticMatrix& a, uint64_t prime_bound,
                            unsigned precision_bits) {
    return certify_poly(char_poly(a.matrix()), prime_bound, precision_bits);
}

std::vector<Candidate> generate_candidates(const IntPoly& f, const GaloisCertificate& cert,
                                           long k_min, long k_max, unsigned precision_bits) {
    if (k_min > k_max) throw EmptyRangeError("generate_candidates: empty k range");
    if (!cert.certified()) throw Error("generate_candidates: certificate not Certified");
    if (!f.is_monic() || !is_palindromic(f) || f.degree() != 2 * cert.d)
        throw NotPalindromicError("generate_candidates: f does not match the certificate");

    mpz_class prime_product = 1;
    {
        std::vector<uint64_t> primes;
        for (const auto& w : cert.witnesses) primes.push_back(w.prime);
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (uint64_t p : primes) prime_product *= static_cast<unsigned long>(p);
    }

    std::vector<Candidate> out;
    for (long k = k_min; k <= k_max; ++k) {
        IntPoly f_k = f + IntPoly::monomial(prime_product * k, cert.d);
        if (f_k(1) == 0 || f_k(-1) == 0) continue;
        if (km_unit_circle_root(f_k)) continue; // certain unit-circle root
        IntPoly g_k = reciprocal_transform(f_k);
        if (sturm_count(g_k, SturmBound::at(-2), SturmBound::at(2)) != 0) continue;
        if (!is_squarefree(f_k)) continue;

        Candidate cand;
        cand.k = k;
        cand.f_k = f_k;
        // the congruences f_k = f mod p transfer every witness verbatim
        GaloisCertificate inherited = cert;
        for (auto& w : inherited.witnesses) {
            auto type = cycle_type_mod_p(f_k, w.prime);
            if (!type || *type != w.degrees)
                throw Error("generate_candidates: witness failed to transfer");
        }
        cand.bundle.galois = inherited;
        cand.bundle.irreducible = true; // certified implies irreducible
        cand.bundle.ratio = no_ratio_root_of_unity(f_k);
        cand.bundle.profile = spectral_profile(f_k, precision_bits);
        cand.bundle.applicable = cand.bundle.ratio.no_ratio_root_of_unity &&
                                 (cand.bundle.profile->m + cand.bundle.profile->l >= 2);
        cand.all_real = (cand.bundle.profile->m == cert.d);
        out.push_back(std::move(cand));
    }
    return out;
}

} // namespace catmap
