#include "catmap/intmatrix.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "catmap/errors.hpp"

namespace catmap {

IntMatrix::IntMatrix(int n, std::vector<mpz_class> entries) : n_(n), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(n) * n) throw Error("IntMatrix: entry count mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<long> entries) {
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
    if (static_cast<size_t>(n) * n != entries.size())
        throw Error("IntMatrix: initializer is not square");
    n_ = n;
    e_.reserve(entries.size());
    for (long v : entries) e_.emplace_back(v);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw Error("IntMatrix: dimension mismatch");
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw Error("IntMatrix: dimension mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (n_ != o.n_) throw Error("IntMatrix: dimension mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (static_cast<int>(v.size()) != n_) throw Error("IntMatrix::apply: size mismatch");
    std::vector<mpz_class> r(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

mpz_class bareiss_det_rows(std::vector<std::vector<mpz_class>> m) {
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

} // namespace

mpz_class IntMatrix::det() const {
    std::vector<std::vector<mpz_class>> rows(n_);
    for (int i = 0; i < n_; ++i)
        rows[i].assign(e_.begin() + static_cast<size_t>(i) * n_,
                       e_.begin() + static_cast<size_t>(i + 1) * n_);
    return bareiss_det_rows(std::move(rows));
}

IntMatrix IntMatrix::inverse_unimodular() const {
    mpz_class d = det();
    if (d != 1 && d != -1) throw Error("inverse_unimodular: determinant is not +-1");
    // adjugate via Gauss-Jordan over Q is avoided; use cofactor-free approach:
    // solve with fraction-free elimination on [A | I], then divide by det.
    int n = n_;
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = mpq_class(at(i, j));
        aug[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw Error("inverse_unimodular: singular");
        std::swap(aug[col], aug[piv]);
        mpq_class inv = 1 / aug[col][col];
        for (int j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            mpq_class f = aug[i][col];
            for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = aug[i][n + j];
            v.canonicalize();
            if (v.get_den() != 1) throw Error("inverse_unimodular: non-integer inverse");
            r.at(i, j) = v.get_num();
        }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < n_; ++j) os << at(i, j).get_str() << (j + 1 < n_ ? " " : "");
        os << (i + 1 < n_ ? "\n" : "]");
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    return os << m.to_string();
}

IntPoly char_poly(const IntMatrix& m) {
    // Berkowitz: division-free, exact. Coefficients built high-to-low for the
    // leading principal submatrices via Toeplitz products.
    int n = m.dim();
    if (n == 0) return IntPoly{1};
    std::vector<mpz_class> poly{1, -m.at(0, 0)}; // X - a_00
    for (int k = 2; k <= n; ++k) {
        // A_k = [[A_{k-1}, C], [R, a]]
        int s = k - 1;
        std::vector<mpz_class> t(k + 1);
        t[0] = 1;
        t[1] = -m.at(s, s);
        std::vector<mpz_class> v(s);
        for (int i = 0; i < s; ++i) v[i] = m.at(i, s); // C
        for (int j = 2; j <= k; ++j) {
            mpz_class dot = 0;
            for (int i = 0; i < s; ++i) dot += m.at(s, i) * v[i]; // R . A^{j-2} C
            t[j] = -dot;
            if (j < k) {
                std::vector<mpz_class> nv(s, 0);
                for (int i = 0; i < s; ++i)
                    for (int l = 0; l < s; ++l) nv[i] += m.at(i, l) * v[l];
                v = std::move(nv);
            }
        }
        std::vector<mpz_class> next(k + 1, 0);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < std::min(i + 1, k); ++j) next[i] += t[i - j] * poly[j];
        poly = std::move(next);
    }
    // poly is high-to-low; IntPoly wants low-to-high
    std::vector<mpz_class> c(poly.rbegin(), poly.rend());
    return IntPoly(std::move(c));
}

IntMatrix poly_eval_matrix(const IntPoly& p, const IntMatrix& m) {
    int n = m.dim();
    IntMatrix acc(n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int j = 0; j < n; ++j) acc.at(j, j) += p[i];
    }
    return acc;
}

LatticeBasis hnf_kernel(const IntMatrix& m) {
    int n = m.dim();
    // column echelon via unimodular column ops, tracked in U: H = M U
    std::vector<std::vector<mpz_class>> h(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[i][j] = m.at(i, j);
    std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;

    auto col_axpy = [&](int dst, int src, const mpz_class& q) {
        // col dst -= q * col src
        for (int i = 0; i < n; ++i) h[i][dst] -= q * h[i][src];
        for (int i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < n; ++i) std::swap(h[i][a], h[i][b]);
        for (int i = 0; i < n; ++i) std::swap(u[i][a], u[i][b]);
    };

    int col = 0;
    for (int row = 0; row < n && col < n; ++row) {
        // gcd-reduce row entries among columns >= col until at most one nonzero
        while (true) {
            int jmin = -1;
            for (int j = col; j < n; ++j) {
                if (h[row][j] == 0) continue;
                if (jmin < 0 || abs(h[row][j]) < abs(h[row][jmin])) jmin = j;
            }
            if (jmin < 0) break; // row is zero on the right
            bool others = false;
            for (int j = col; j < n; ++j) {
                if (j == jmin || h[row][j] == 0) continue;
                others = true;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h[row][j].get_mpz_t(), h[row][jmin].get_mpz_t());
                col_axpy(j, jmin, q);
            }
            if (!others) {
                col_swap(col, jmin);
                ++col;
                break;
            }
        }
    }
    LatticeBasis basis;
    basis.ambient_dim = n;
    for (int j = col; j < n; ++j) {
        std::vector<mpz_class> vec(n);
        for (int i = 0; i < n; ++i) vec[i] = u[i][j];
        for (const auto& x : vec) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : vec) y = -y;
            break;
        }
        basis.vectors.push_back(std::move(vec));
    }
    return basis;
}

std::vector<mpz_class> elementary_divisors(std::vector<std::vector<mpz_class>> a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> divs;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find a nonzero pivot
        size_t pi = r0, pj = c0;
        bool found = false;
        for (size_t i = r0; i < rows && !found; ++i)
            for (size_t j = c0; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[r0], a[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r0 + 1; i < rows; ++i) {
                if (a[i][c0] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c0].get_mpz_t(), a[r0][c0].get_mpz_t());
                for (size_t j = c0; j < cols; ++j) a[i][j] -= q * a[r0][j];
                if (a[i][c0] != 0) {
                    std::swap(a[r0], a[i]);
                    clean = false;
                }
            }
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (a[r0][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r0][j].get_mpz_t(), a[r0][c0].get_mpz_t());
                for (size_t i = r0; i < rows; ++i) a[i][j] -= q * a[i][c0];
                if (a[r0][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][j]);
                    clean = false;
                }
            }
        }
        divs.push_back(abs(a[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce divisibility chain
    for (size_t i = 0; i + 1 < divs.size(); ++i)
        for (size_t j = i + 1; j < divs.size(); ++j) {
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), divs[i].get_mpz_t(), divs[j].get_mpz_t());
            l = divs[i] / g * divs[j];
            divs[i] = g;
            divs[j] = l;
        }
    return divs;
}

SmithDecomposition smith_with_transforms(const IntMatrix& a) {
    int n = a.dim();
    IntMatrix s = a;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    auto row_axpy = [&](int dst, int src, const mpz_class& q) {
        for (int j = 0; j < n; ++j) {
            s.at(dst, j) -= q * s.at(src, j);
            u.at(dst, j) -= q * u.at(src, j);
        }
    };
    auto col_axpy = [&](int dst, int src, const mpz_class& q) {
        for (int i = 0; i < n; ++i) {
            s.at(i, dst) -= q * s.at(i, src);
            v.at(i, dst) -= q * v.at(i, src);
        }
    };
    auto row_swap = [&](int x, int y) {
        for (int j = 0; j < n; ++j) {
            std::swap(s.at(x, j), s.at(y, j));
            std::swap(u.at(x, j), u.at(y, j));
        }
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < n; ++i) {
            std::swap(s.at(i, x), s.at(i, y));
            std::swap(v.at(i, x), v.at(i, y));
        }
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < n; ++j) {
            s.at(x, j) = -s.at(x, j);
            u.at(x, j) = -u.at(x, j);
        }
    };

    for (int t = 0; t < n; ++t) {
        // pivot: smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (s.at(i, j) != 0 &&
                    (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < n; ++i) {
                if (s.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(i, t).get_mpz_t(), s.at(t, t).get_mpz_t());
                row_axpy(i, t, q);
                if (s.at(i, t) != 0) {
                    row_swap(t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (s.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(t, j).get_mpz_t(), s.at(t, t).get_mpz_t());
                col_axpy(j, t, q);
                if (s.at(t, j) != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
        }
        if (s.at(t, t) < 0) row_negate(t);
    }
    // enforce the divisibility chain on the diagonal
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (s.at(j, j) == 0 && s.at(i, i) == 0) continue;
            if (s.at(i, i) != 0 && s.at(j, j) % s.at(i, i) == 0) continue;
            // fold column j into column i: standard trick, then re-reduce 2x2
            col_axpy(i, j, -1);
            bool again = true;
            while (again) {
                again = false;
                if (s.at(j, i) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), s.at(j, i).get_mpz_t(), s.at(i, i).get_mpz_t());
                    row_axpy(j, i, q);
                    if (s.at(j, i) != 0) {
                        row_swap(i, j);
                        again = true;
                        continue;
                    }
                }
                if (s.at(i, j) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), s.at(i, j).get_mpz_t(), s.at(i, i).get_mpz_t());
                    col_axpy(j, i, q);
                    if (s.at(i, j) != 0) {
                        col_swap(i, j);
                        again = true;
                    }
                }
            }
            if (s.at(i, i) < 0) row_negate(i);
            if (s.at(j, j) < 0) row_negate(j);
        }
    }
    SmithDecomposition out;
    out.left = std::move(u);
    out.right = std::move(v);
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) out.diag[i] = s.at(i, i);
    return out;
}

bool lattice_is_primitive(const LatticeBasis& basis) {
    if (basis.vectors.empty()) return true;
    auto divs = elementary_divisors(basis.vectors);
    if (static_cast<int>(divs.size()) != basis.rank()) return false; // dependent rows
    for (const auto& d : divs)
        if (d != 1) return false;
    return true;
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream os;
    os << m.dim();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) os << " " << m.at(i, j).get_str();
    return os.str();
}

IntMatrix matrix_from_text(const std::string& text) {
    std::istringstream is(text);
    long n = 0;
    if (!(is >> n) || n <= 0) throw ParseError("matrix text: bad dimension");
    std::vector<mpz_class> e(static_cast<size_t>(n) * n);
    for (auto& v : e) {
        std::string tok;
        if (!(is >> tok)) throw ParseError("matrix text: too few entries");
        try {
            v = mpz_class(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError("matrix text: bad entry '" + tok + "'");
        }
    }
    return IntMatrix(static_cast<int>(n), std::move(e));
}

} // namespace catmap
