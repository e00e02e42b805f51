#include "catmap/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace catmap {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, 0);
        p.c_.back() = c;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::operator[](int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomialError("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
    if (k == 0) return IntPoly();
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= k;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

int IntPoly::sign_at(const mpz_class& num, const mpz_class& den) const {
    if (is_zero()) return 0;
    // sign of sum_i c_i num^i den^(n-i), den > 0
    mpz_class v = c_.back(), dp = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) {
        dp *= den;
        v = v * num + c_[i] * dp;
    }
    return sgn(v);
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (sgn(c_.back()) < 0) g = -g;
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v /= g;
    return IntPoly(std::move(r));
}

namespace {

bool try_divide(const IntPoly& f, const IntPoly& g, IntPoly* quot) {
    if (g.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
    if (f.is_zero()) {
        if (quot) *quot = IntPoly();
        return true;
    }
    int n = f.degree(), m = g.degree();
    if (n < m) return false;
    std::vector<mpz_class> rem(f.coeffs());
    std::vector<mpz_class> q(n - m + 1, 0);
    const mpz_class& lg = g.leading();
    for (int k = n - m; k >= 0; --k) {
        mpz_class& head = rem[k + m];
        if (head == 0) continue;
        if (!mpz_divisible_p(head.get_mpz_t(), lg.get_mpz_t())) return false;
        mpz_class t = head / lg;
        q[k] = t;
        for (int i = 0; i <= m; ++i) rem[k + i] -= t * g[i];
    }
    for (const auto& v : rem)
        if (v != 0) return false;
    if (quot) *quot = IntPoly(std::move(q));
    return true;
}

} // namespace

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    IntPoly q;
    if (!try_divide(*this, divisor, &q)) throw Error("inexact polynomial division");
    return q;
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
    return try_divide(*this, divisor, nullptr);
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& v = (*this)[i];
        if (v == 0) continue;
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        mpz_class a = abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.to_string();
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ZeroPolynomialError("pseudo_rem by zero");
    int n = f.degree(), m = g.degree();
    if (n < m) return f;
    std::vector<mpz_class> rem(f.coeffs());
    const mpz_class& lg = g.leading();
    for (int k = n - m; k >= 0; --k) {
        mpz_class head = rem[k + m];
        for (auto& v : rem) v *= lg;
        for (int i = 0; i <= m; ++i) rem[k + i] -= head * g[i];
        rem[k + m] = 0;
    }
    rem.resize(m > 0 ? m : 0);
    return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return g.is_zero() ? IntPoly() : g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_palindromic(const IntPoly& f) {
    int n = f.degree();
    if (n < 0) return true;
    for (int i = 0; 2 * i <= n; ++i)
        if (f[i] != f[n - i]) return false;
    return true;
}

IntPoly reciprocal_transform(const IntPoly& f) {
    if (!is_palindromic(f)) throw NotPalindromicError("reciprocal_transform: not palindromic");
    int n = f.degree();
    if (n % 2 != 0) throw OddDegreeError("reciprocal_transform: odd degree");
    int d = n / 2;
    // f / X^d = a_d + sum_{k=1..d} a_{d+k} (X^k + X^{-k})
    IntPoly g = IntPoly::constant(f[d]);
    IntPoly pk_prev{2};      // P_0 = 2
    IntPoly pk{0, 1};        // P_1 = Y
    for (int k = 1; k <= d; ++k) {
        g = g + pk.scaled(f[d + k]);
        if (k < d) {
            IntPoly next = pk.shifted(1) - pk_prev; // P_{k+1} = Y P_k - P_{k-1}
            pk_prev = std::move(pk);
            pk = std::move(next);
        }
    }
    return g;
}

IntPoly expand_reciprocal(const IntPoly& g) {
    int d = g.degree();
    if (d < 0) return IntPoly();
    IntPoly f;
    IntPoly base{1, 0, 1}; // X^2 + 1
    IntPoly pow{1};
    for (int j = 0; j <= d; ++j) {
        f = f + pow.scaled(g[j]).shifted(d - j);
        if (j < d) pow = pow * base;
    }
    return f;
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("is_squarefree of zero polynomial");
    if (f.degree() <= 1) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

namespace {

int sign_at_bound(const IntPoly& p, const SturmBound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case SturmBound::Kind::NegInf:
            return p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading());
        case SturmBound::Kind::PosInf:
            return sgn(p.leading());
        case SturmBound::Kind::Finite:
            return p.sign_at(b.num, b.den);
    }
    return 0;
}

int sign_variations(const std::vector<IntPoly>& chain, const SturmBound& b) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at_bound(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const IntPoly& g, const SturmBound& a, const SturmBound& b) {
    if (g.is_zero()) throw ZeroPolynomialError("sturm_count of zero polynomial");
    if (g.degree() == 0) return 0;
    std::vector<IntPoly> chain;
    chain.push_back(g);
    chain.push_back(g.derivative());
    while (!chain.back().is_zero()) {
        const IntPoly& p0 = chain[chain.size() - 2];
        const IntPoly& p1 = chain.back();
        int delta = p0.degree() - p1.degree() + 1;
        IntPoly r = pseudo_rem(p0, p1);
        if (r.is_zero()) break;
        // pseudo_rem scales by lc(p1)^delta; keep the sign of -(p0 mod p1)
        bool positive_factor = (delta % 2 == 0) || sgn(p1.leading()) > 0;
        IntPoly next = positive_factor ? -r : r;
        mpz_class cont = next.content();
        if (cont > 1) {
            std::vector<mpz_class> cs(next.coeffs());
            for (auto& v : cs) v /= cont;
            next = IntPoly(std::move(cs));
        }
        chain.push_back(std::move(next));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int sturm_count_all(const IntPoly& g) {
    return sturm_count(g, SturmBound::neg_inf(), SturmBound::pos_inf());
}

namespace {

// Bareiss fraction-free determinant; consumes the matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

// Classical Sylvester resultant det Syl(p, q) = lc(p)^deg q * prod q(alpha_i).
mpz_class resultant_classical(const IntPoly& p, const IntPoly& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) throw ZeroPolynomialError("resultant of zero polynomial");
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), p[0].get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), q[0].get_mpz_t(), m);
        return r;
    }
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<mpz_class>> syl(dim, std::vector<mpz_class>(dim, 0));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) syl[row][row + j] = p[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) syl[n + row][row + j] = q[n - j];
    return bareiss_det(syl);
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    // Res(f, X - a) = f(a) for monic f: product of f over the roots of g.
    return resultant_classical(g, f);
}

std::vector<mpz_class> power_sums(const IntPoly& f, unsigned long m) {
    if (!f.is_monic()) throw Error("power_sums requires a monic polynomial");
    int n = f.degree();
    std::vector<mpz_class> e(n + 1); // elementary symmetric, e[i] = (-1)^i a_{n-i}
    for (int i = 0; i <= n; ++i) e[i] = (i % 2 == 0) ? f[n - i] : mpz_class(-f[n - i]);
    std::vector<mpz_class> p(m + 1);
    p[0] = n;
    for (unsigned long k = 1; k <= m; ++k) {
        mpz_class s = 0;
        unsigned long jmax = std::min<unsigned long>(k - 1, n);
        for (unsigned long j = 1; j <= jmax; ++j) {
            mpz_class term = e[j] * p[k - j];
            s += (j % 2 == 1) ? term : -term;
        }
        if (k <= static_cast<unsigned long>(n)) {
            mpz_class lead = e[k] * static_cast<long>(k);
            s += (k % 2 == 1) ? lead : -lead;
        }
        p[k] = std::move(s);
    }
    return p;
}

namespace {

// Monic polynomial of degree n from power sums p_1..p_n of its roots.
IntPoly poly_from_power_sums(const std::vector<mpz_class>& p, int n) {
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (int i = 1; i <= n; ++i) {
        mpz_class s = 0;
        for (int j = 1; j <= i; ++j) {
            mpz_class term = e[i - j] * p[j];
            s += (j % 2 == 1) ? term : -term;
        }
        mpz_divexact_ui(e[i].get_mpz_t(), s.get_mpz_t(), i);
    }
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) c[n - i] = (i % 2 == 0) ? e[i] : mpz_class(-e[i]);
    return IntPoly(std::move(c));
}

IntPoly power_poly_double(const IntPoly& f) {
    int n = f.degree();
    IntPoly fneg = f;
    {
        std::vector<mpz_class> cs(fneg.coeffs());
        for (size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
        fneg = IntPoly(std::move(cs));
    }
    IntPoly h = f * fneg; // (-1)^n f2(X^2)
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = (n % 2 == 0) ? h[2 * i] : mpz_class(-h[2 * i]);
    return IntPoly(std::move(c));
}

} // namespace

IntPoly power_poly(const IntPoly& f, unsigned long k) {
    if (!f.is_monic()) throw Error("power_poly requires a monic polynomial");
    if (k == 0) throw Error("power_poly requires k >= 1");
    if (k == 1) return f;
    unsigned long odd = k;
    int doublings = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++doublings;
    }
    IntPoly out = f;
    if (odd > 1) {
        int n = f.degree();
        auto sums = power_sums(f, odd * static_cast<unsigned long>(n));
        std::vector<mpz_class> sub(n + 1);
        for (int j = 1; j <= n; ++j) sub[j] = sums[odd * static_cast<unsigned long>(j)];
        out = poly_from_power_sums(sub, n);
    }
    for (int i = 0; i < doublings; ++i) out = power_poly_double(out);
    return out;
}

IntPoly power_poly_resultant(const IntPoly& f, unsigned long k) {
    if (!f.is_monic()) throw Error("power_poly_resultant requires a monic polynomial");
    if (k == 0) throw Error("power_poly_resultant requires k >= 1");
    int n = f.degree();
    if (n == 0) return f;
    // interpolate Res_Y(f(Y), x - Y^k) = prod (x - lambda^k) at n+1 points
    std::vector<mpz_class> xs, ys;
    for (int i = 0; i <= n; ++i) {
        long s = (i + 1) / 2;
        if (i % 2 == 0) s = -s; // 0, 1, -1, 2, -2, ...
        std::vector<mpz_class> qc(k + 1, 0);
        qc[0] = s;
        qc[k] = -1;
        IntPoly q{std::vector<mpz_class>(qc)};
        xs.emplace_back(s);
        ys.push_back(resultant(q, f));
    }
    // Lagrange interpolation over Q; the result is integral
    std::vector<mpq_class> acc(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        // basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * mpq_class(xs[j]);
            }
            basis = std::move(next);
            denom *= mpq_class(xs[i] - xs[j]);
        }
        mpq_class w = mpq_class(ys[i]) / denom;
        for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * w;
    }
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        mpq_class v = acc[i];
        v.canonicalize();
        if (v.get_den() != 1) throw Error("power_poly_resultant: non-integral interpolation");
        c[i] = v.get_num();
    }
    return IntPoly(std::move(c));
}

std::string poly_to_text(const IntPoly& p) {
    std::ostringstream os;
    int n = std::max(p.degree(), 0);
    os << n;
    for (int i = 0; i <= n; ++i) os << " " << p[i].get_str();
    return os.str();
}

IntPoly poly_from_text(const std::string& text) {
    std::istringstream is(text);
    long n = -1;
    if (!(is >> n) || n < 0) throw ParseError("polynomial text: bad degree");
    std::vector<mpz_class> c(n + 1);
    for (long i = 0; i <= n; ++i) {
        std::string tok;
        if (!(is >> tok)) throw ParseError("polynomial text: too few coefficients");
        try {
            c[i] = mpz_class(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("polynomial text: bad coefficient '" + tok + "'");
        }
    }
    return IntPoly(std::move(c));
}

} // namespace catmap
