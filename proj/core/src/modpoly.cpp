#include "catmap/modpoly.hpp"

#include <algorithm>

#include "catmap/errors.hpp"

namespace catmap {

namespace {

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
uint64_t invm(uint64_t a, uint64_t p) { return powm(a % p, p - 2, p); }

} // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    normalize();
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, uint64_t p) {
    std::vector<uint64_t> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class r = f[i] % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        c[i] = r.get_ui();
    }
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = addm(r[i], o.c_[i], p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = subm(r[i], o.c_[i], p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_, {});
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(c_[i], o.c_[j], p_), p_);
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::mod(const ModPoly& m) const {
    if (m.is_zero()) throw ZeroPolynomialError("ModPoly::mod by zero");
    std::vector<uint64_t> r(c_);
    int dm = m.degree();
    uint64_t inv = invm(m.c_.back(), p_);
    for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
        if (r[k] == 0) continue;
        uint64_t q = mulm(r[k], inv, p_);
        for (int i = 0; i <= dm; ++i) r[k - dm + i] = subm(r[k - dm + i], mulm(q, m.c_[i], p_), p_);
    }
    r.resize(dm > 0 ? dm : 0);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::mulmod(const ModPoly& o, const ModPoly& m) const {
    return ((*this) * o).mod(m);
}

ModPoly ModPoly::powmod(const mpz_class& e, const ModPoly& m) const {
    ModPoly base = this->mod(m);
    ModPoly result = ModPoly::one(p_).mod(m);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result.mulmod(base, m);
        base = base.mulmod(base, m);
        k >>= 1;
    }
    return result;
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulm(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    uint64_t inv = invm(c_.back(), p_);
    std::vector<uint64_t> r(c_);
    for (auto& v : r) v = mulm(v, inv, p_);
    return ModPoly(p_, std::move(r));
}

IntPoly ModPoly::lift_symmetric() const {
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] > p_ / 2)
            r[i] = -static_cast<long>(p_ - c_[i]);
        else
            r[i] = static_cast<long>(c_[i]);
    }
    return IntPoly(std::move(r));
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

void mod_ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly* g, ModPoly* s, ModPoly* t) {
    uint64_t p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(p), s1 = ModPoly(p, {});
    ModPoly t0 = ModPoly(p, {}), t1 = ModPoly::one(p);
    while (!r1.is_zero()) {
        // quotient of r0 by r1
        ModPoly q(p, {});
        {
            std::vector<uint64_t> rem(r0.coeffs());
            int d1 = r1.degree();
            uint64_t inv = invm(r1.coeffs().back(), p);
            std::vector<uint64_t> qc(std::max<int>(static_cast<int>(rem.size()) - d1, 0), 0);
            for (int k = static_cast<int>(rem.size()) - 1; k >= d1; --k) {
                if (rem[k] == 0) continue;
                uint64_t f = mulm(rem[k], inv, p);
                qc[k - d1] = f;
                for (int i = 0; i <= d1; ++i)
                    rem[k - d1 + i] = subm(rem[k - d1 + i], mulm(f, r1[i], p), p);
            }
            q = ModPoly(p, std::move(qc));
        }
        ModPoly r2 = r0 - q * r1;
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize gcd monic
    if (!r0.is_zero()) {
        uint64_t inv = invm(r0.coeffs().back(), p);
        ModPoly scale(p, {inv});
        r0 = r0 * scale;
        s0 = s0 * scale;
        t0 = t0 * scale;
    }
    if (g) *g = r0;
    if (s) *s = s0;
    if (t) *t = t0;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull})
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        uint64_t x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<std::vector<int>> factor_degrees_mod_p(const IntPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrimeError("factor_degrees_mod_p: p is not prime");
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != f.degree()) return std::nullopt; // leading coefficient vanished
    if (mod_gcd(fp, fp.derivative()).degree() != 0) return std::nullopt;
    fp = fp.monic();

    std::vector<int> degrees;
    ModPoly h = ModPoly::x(p);
    ModPoly rest = fp;
    int i = 0;
    while (rest.degree() > 0) {
        ++i;
        if (2 * i > rest.degree()) {
            degrees.push_back(rest.degree());
            break;
        }
        h = h.powmod(mpz_class(static_cast<unsigned long>(p)), rest);
        ModPoly g = mod_gcd(h - ModPoly::x(p), rest);
        if (g.degree() > 0) {
            for (int c = 0; c < g.degree() / i; ++c) degrees.push_back(i);
            // divide rest by g
            ModPoly q(p, {});
            {
                // rest and g are monic; exact division
                std::vector<uint64_t> rem(rest.coeffs());
                int dg = g.degree();
                std::vector<uint64_t> qc(rem.size() - dg, 0);
                for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
                    uint64_t fac = rem[k];
                    if (fac == 0) continue;
                    qc[k - dg] = fac;
                    for (int t = 0; t <= dg; ++t)
                        rem[k - dg + t] = subm(rem[k - dg + t], mulm(fac, g[t], p), p);
                }
                q = ModPoly(p, std::move(qc));
            }
            rest = q;
            h = h.mod(rest);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

namespace {

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>* out) {
    uint64_t p = f.modulus();
    if (f.degree() == d) {
        out->push_back(f.monic());
        return;
    }
    // Cantor-Zassenhaus, p odd
    mpz_class exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
    while (true) {
        std::vector<uint64_t> rc(f.degree());
        for (auto& v : rc) v = rng() % p;
        ModPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        ModPoly b = a.powmod(exponent, f) - ModPoly::one(p);
        ModPoly g = mod_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            // split
            ModPoly q(p, {});
            {
                std::vector<uint64_t> rem(f.coeffs());
                int dg = g.degree();
                uint64_t inv = powm(g.coeffs().back(), p - 2, p);
                std::vector<uint64_t> qc(rem.size() - dg, 0);
                for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
                    if (rem[k] == 0) continue;
                    uint64_t fac = mulm(rem[k], inv, p);
                    qc[k - dg] = fac;
                    for (int t = 0; t <= dg; ++t)
                        rem[k - dg + t] = subm(rem[k - dg + t], mulm(fac, g[t], p), p);
                }
                q = ModPoly(p, std::move(qc));
            }
            equal_degree_split(g, d, rng, out);
            equal_degree_split(q, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<ModPoly> factor_mod_p_squarefree(const ModPoly& f0, uint64_t seed) {
    uint64_t p = f0.modulus();
    if (p == 2) throw Error("factor_mod_p_squarefree requires odd p");
    std::mt19937_64 rng(seed);
    ModPoly f = f0.monic();
    std::vector<ModPoly> out;
    ModPoly h = ModPoly::x(p);
    int i = 0;
    while (f.degree() > 0) {
        ++i;
        if (2 * i > f.degree()) {
            out.push_back(f.monic());
            break;
        }
        h = h.powmod(mpz_class(static_cast<unsigned long>(p)), f);
        ModPoly g = mod_gcd(h - ModPoly::x(p), f);
        if (g.degree() > 0) {
            equal_degree_split(g, i, rng, &out);
            std::vector<uint64_t> rem(f.coeffs());
            int dg = g.degree();
            std::vector<uint64_t> qc(rem.size() - dg, 0);
            for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
                uint64_t fac = rem[k];
                if (fac == 0) continue;
                qc[k - dg] = fac;
                for (int t = 0; t <= dg; ++t)
                    rem[k - dg + t] = subm(rem[k - dg + t], mulm(fac, g[t], p), p);
            }
            f = ModPoly(p, std::move(qc));
            h = h.mod(f);
        }
    }
    return out;
}

} // namespace catmap
