#include "catmap/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "catmap/errors.hpp"
#include "catmap/modpoly.hpp"

namespace catmap {

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree_decomposition of zero");
    std::vector<std::pair<IntPoly, int>> parts;
    if (f.degree() == 0) return parts;
    // Yun over Q, kept integral via primitive gcds (f monic).
    IntPoly a = f;
    IntPoly g = poly_gcd(a, a.derivative());
    IntPoly b = a.divide_exact(g);
    IntPoly c = a.derivative().divide_exact(g);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly p = poly_gcd(b, d);
        if (p.degree() > 0) parts.emplace_back(p, i);
        IntPoly b2 = b.divide_exact(p);
        IntPoly c2 = d.divide_exact(p);
        b = std::move(b2);
        d = c2 - b.derivative();
        ++i;
    }
    return parts;
}

namespace {

// Landau-Mignotte style bound on coefficients of monic factors of monic f,
// returned as a bit count for the lifting modulus.
unsigned long factor_bound_bits(const IntPoly& f) {
    mpz_class norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    unsigned long bits = mpz_sizeinbase(root.get_mpz_t(), 2);
    return bits + static_cast<unsigned long>(f.degree()) + 3;
}

struct HenselPair {
    IntPoly g, h; // lifted factors, coefficients reduced mod m
};

IntPoly poly_mod(const IntPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c(f.coeffs());
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
    }
    return IntPoly(std::move(c));
}

IntPoly poly_mod_symmetric(const IntPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c(f.coeffs());
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
        if (v * 2 > m) v -= m;
    }
    return IntPoly(std::move(c));
}

// division with remainder by a monic divisor, coefficients mod m
void divmod_monic_mod(const IntPoly& f, const IntPoly& div, const mpz_class& m, IntPoly* q,
                      IntPoly* r) {
    std::vector<mpz_class> rem(f.coeffs());
    int dd = div.degree();
    int n = f.degree();
    std::vector<mpz_class> qc(std::max(n - dd + 1, 0), 0);
    for (int k = n - dd; k >= 0; --k) {
        mpz_class head = rem[k + dd] % m;
        if (head < 0) head += m;
        if (head != 0) {
            qc[k] = head;
            for (int i = 0; i <= dd; ++i) {
                rem[k + i] -= head * div[i];
                rem[k + i] %= m;
            }
        } else {
            qc[k] = 0;
        }
        rem[k + dd] = 0;
    }
    rem.resize(dd > 0 ? dd : 0);
    for (auto& v : rem) {
        v %= m;
        if (v < 0) v += m;
    }
    if (q) *q = IntPoly(std::move(qc));
    if (r) *r = IntPoly(std::move(rem));
}

// one quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m)
// -> same congruences mod m^2 (von zur Gathen & Gerhard, Alg. 15.10)
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const mpz_class& m) {
    mpz_class m2 = m * m;
    IntPoly e = poly_mod(f - g * h, m2);
    IntPoly q, r;
    divmod_monic_mod(s * e, h, m2, &q, &r);
    IntPoly g1 = poly_mod(g + t * e + q * g, m2);
    IntPoly h1 = poly_mod(h + r, m2);
    IntPoly b = poly_mod(s * g1 + t * h1 - IntPoly{1}, m2);
    IntPoly c, d;
    divmod_monic_mod(s * b, h1, m2, &c, &d);
    IntPoly s1 = poly_mod(s - d, m2);
    IntPoly t1 = poly_mod(t - t * b - c * g1, m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// lift the factorization f = prod(factors) (mod p) to modulus >= 2^target_bits
std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, const std::vector<ModPoly>& factors,
                                      uint64_t p, unsigned long target_bits,
                                      mpz_class* modulus_out) {
    if (factors.size() == 1) {
        mpz_class m(static_cast<unsigned long>(p));
        while (mpz_sizeinbase(m.get_mpz_t(), 2) < target_bits) m *= m;
        if (modulus_out) *modulus_out = m;
        return {poly_mod(f, m)};
    }
    size_t half = factors.size() / 2;
    std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ModPoly> right(factors.begin() + half, factors.end());
    ModPoly gl = left[0];
    for (size_t i = 1; i < left.size(); ++i) gl = gl * left[i];
    ModPoly hr = right[0];
    for (size_t i = 1; i < right.size(); ++i) hr = hr * right[i];
    ModPoly gmod, smod, tmod;
    mod_ext_gcd(gl, hr, &gmod, &smod, &tmod);
    if (gmod.degree() != 0) throw Error("hensel_lift_tree: factors not coprime mod p");

    IntPoly g = gl.lift_symmetric(), h = hr.lift_symmetric();
    IntPoly s = smod.lift_symmetric(), t = tmod.lift_symmetric();
    mpz_class m(static_cast<unsigned long>(p));
    g = poly_mod(g, m);
    h = poly_mod(h, m);
    s = poly_mod(s, m);
    t = poly_mod(t, m);
    while (mpz_sizeinbase(m.get_mpz_t(), 2) < target_bits) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    if (modulus_out) *modulus_out = m;
    mpz_class sub_mod;
    auto lifted_left = hensel_lift_tree(g, left, p, target_bits, &sub_mod);
    auto lifted_right = hensel_lift_tree(h, right, p, target_bits, nullptr);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

// factor a monic squarefree polynomial over Z
std::vector<IntPoly> factor_squarefree(const IntPoly& f, uint64_t seed) {
    int n = f.degree();
    if (n <= 1) return {f};

    // prime with squarefree reduction; skip 2 so equal-degree splitting applies
    uint64_t p = 3;
    std::optional<std::vector<int>> degs;
    while (true) {
        if (is_prime_u64(p)) {
            degs = factor_degrees_mod_p(f, p);
            if (degs) break;
        }
        ++p;
    }
    ModPoly fp = ModPoly::reduce(f, p).monic();
    std::vector<ModPoly> modular = factor_mod_p_squarefree(fp, seed);
    if (modular.size() == 1) return {f};

    unsigned long bits = factor_bound_bits(f) + 1;
    mpz_class modulus;
    std::vector<IntPoly> lifted = hensel_lift_tree(poly_mod(f, [&] {
                                                       mpz_class m(static_cast<unsigned long>(p));
                                                       while (mpz_sizeinbase(m.get_mpz_t(), 2) < bits)
                                                           m *= m;
                                                       return m;
                                                   }()),
                                                   modular, p, bits, &modulus);

    // Zassenhaus recombination over subsets of the lifted factors
    std::vector<IntPoly> result;
    IntPoly remaining = f;
    std::vector<IntPoly> pool = lifted;
    size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            IntPoly cand{1};
            for (size_t i : idx) cand = poly_mod(cand * pool[i], modulus);
            cand = poly_mod_symmetric(cand, modulus);
            if (remaining.divisible_by(cand)) {
                result.push_back(cand);
                remaining = remaining.divide_exact(cand);
                std::vector<IntPoly> np;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    np.push_back(pool[i]);
                }
                pool = std::move(np);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[pos] == pool.size() - subset_size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (remaining.degree() > 0) result.push_back(remaining);
    std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return result;
}

} // namespace

std::vector<std::pair<IntPoly, int>> factor_over_Z(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("factor_over_Z of zero");
    if (!f.is_monic()) throw Error("factor_over_Z requires a monic polynomial");
    if (f.degree() > 16) throw DegreeTooLargeError("factor_over_Z: degree > 16");
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& irr : factor_squarefree(part, /*seed=*/0x5eedULL))
            out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_over_Z(const IntPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto factors = factor_over_Z(f);
    return factors.size() == 1 && factors[0].second == 1;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(unsigned long n) {
    // X^n - 1 divided by all lower cyclotomics
    std::vector<mpz_class> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    IntPoly f{std::move(c)};
    for (unsigned long d = 1; d < n; ++d)
        if (n % d == 0) f = f.divide_exact(cyclotomic(d));
    return f;
}

} // namespace catmap
