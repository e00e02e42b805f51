#include "catmap/units.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

#include "catmap/errors.hpp"
#include "catmap/factorization.hpp"

namespace catmap {

mpz_class field_norm(const IntPoly& p, const IntPoly& chi) {
    if (!chi.is_monic()) throw Error("field_norm: chi must be monic");
    if (p.is_zero()) return 0;
    return resultant(p, chi);
}

bool is_symplectic_unit(const IntPoly& p, const SymplecticMatrix& a) {
    if (p.degree() >= a.dim()) throw Error("is_symplectic_unit: deg p must be < 2d");
    IntMatrix b = poly_eval_matrix(p, a.matrix());
    IntMatrix binv = poly_eval_matrix(p, a.inverse().matrix());
    return (b * binv).is_identity();
}

EigenClassInfo eigen_classes(const IntPoly& chi, unsigned precision_bits) {
    SpectralProfile profile = spectral_profile(chi, precision_bits);
    EigenClassInfo info;
    info.chi = chi;
    info.precision_bits = precision_bits;
    info.m = profile.m;
    info.k = profile.k;
    info.l = profile.l;
    RootSet rs = find_roots(chi, precision_bits);
    info.roots = rs.roots;

    PrecisionGuard guard(precision_bits + 32);
    int n = static_cast<int>(info.roots.size());
    // structural involutions: inverse partner and conjugate partner
    std::vector<int> inverse_of(n, -1), conj_of(n, -1);
    for (int i = 0; i < n; ++i) {
        BigFloat best_inv = -1, best_conj = -1;
        for (int j = 0; j < n; ++j) {
            BigComplex prod = info.roots[i] * info.roots[j];
            prod.re -= 1;
            BigFloat dist = prod.norm2();
            if (best_inv < 0 || dist < best_inv) {
                best_inv = dist;
                inverse_of[i] = j;
            }
            BigComplex diff = info.roots[i] - info.roots[j].conj();
            BigFloat cdist = diff.norm2();
            if (best_conj < 0 || cdist < best_conj) {
                best_conj = cdist;
                conj_of[i] = j;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (inverse_of[inverse_of[i]] != i || conj_of[conj_of[i]] != i)
            throw PrecisionInsufficientError("eigen_classes: root pairing inconsistent");

    auto zd = rs.to_double();
    std::vector<bool> used(n, false);
    std::vector<EigenClass> real_cls, quad_cls, circle_cls;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int inv = inverse_of[i], cj = conj_of[i];
        if (cj == i) {
            int rep = std::abs(zd[i]) > 1 ? i : inv;
            real_cls.push_back({rep, inverse_of[rep], RootClass::Real});
            used[i] = used[inv] = true;
        } else if (cj == inv) {
            int rep = zd[i].imag() >= 0 ? i : inv;
            circle_cls.push_back({rep, inverse_of[rep], RootClass::UnitCircle});
            used[i] = used[inv] = true;
        } else {
            int members[4] = {i, cj, inv, conj_of[inv]};
            int rep = i;
            for (int t : members)
                if (std::abs(zd[t]) > 1 && zd[t].imag() > 0) rep = t;
            quad_cls.push_back({rep, inverse_of[rep], RootClass::ComplexQuadruple});
            for (int t : members) used[t] = true;
        }
    }
    if (static_cast<int>(real_cls.size()) != info.m ||
        static_cast<int>(circle_cls.size()) != info.k ||
        static_cast<int>(quad_cls.size()) != info.l)
        throw PrecisionInsufficientError("eigen_classes: class counts disagree with Sturm");

    auto by_modulus_desc = [&](const EigenClass& a, const EigenClass& b) {
        return std::abs(zd[a.rep]) > std::abs(zd[b.rep]);
    };
    std::sort(real_cls.begin(), real_cls.end(), by_modulus_desc);
    std::sort(quad_cls.begin(), quad_cls.end(), by_modulus_desc);
    info.classes = real_cls;
    info.classes.insert(info.classes.end(), quad_cls.begin(), quad_cls.end());
    info.classes.insert(info.classes.end(), circle_cls.begin(), circle_cls.end());
    return info;
}

std::vector<double> log_embedding_full(const IntPoly& p, const EigenClassInfo& classes) {
    PrecisionGuard guard(classes.precision_bits + 32);
    std::vector<double> out;
    for (const auto& cls : classes.classes) {
        if (cls.tag == RootClass::Real) {
            out.push_back(log_abs(eval_poly(p, classes.roots[cls.rep])).convert_to<double>());
            out.push_back(log_abs(eval_poly(p, classes.roots[cls.inv])).convert_to<double>());
        }
    }
    for (const auto& cls : classes.classes) {
        if (cls.tag == RootClass::UnitCircle)
            out.push_back(
                (2 * log_abs(eval_poly(p, classes.roots[cls.rep]))).convert_to<double>());
    }
    for (const auto& cls : classes.classes) {
        if (cls.tag == RootClass::ComplexQuadruple) {
            out.push_back(
                (2 * log_abs(eval_poly(p, classes.roots[cls.rep]))).convert_to<double>());
            out.push_back(
                (2 * log_abs(eval_poly(p, classes.roots[cls.inv]))).convert_to<double>());
        }
    }
    return out;
}

std::vector<double> log_embedding_reduced(const IntPoly& p, const EigenClassInfo& classes) {
    PrecisionGuard guard(classes.precision_bits + 32);
    std::vector<double> out;
    for (const auto& cls : classes.classes) {
        if (cls.tag == RootClass::UnitCircle) continue;
        BigFloat x = log_abs(eval_poly(p, classes.roots[cls.rep]));
        BigFloat xinv = log_abs(eval_poly(p, classes.roots[cls.inv]));
        if (abs(x + xinv) > 1e-8)
            throw PrecisionInsufficientError(
                "log_embedding_reduced: inverse-pair coordinates do not cancel");
        if (cls.tag == RootClass::ComplexQuadruple) x *= 2;
        out.push_back(x.convert_to<double>());
    }
    return out;
}

SymplecticUnit make_unit(const IntPoly& p, const SymplecticMatrix& a,
                         const EigenClassInfo& classes) {
    SymplecticUnit unit;
    unit.p = p;
    if (!is_symplectic_unit(p, a)) throw NotSymplecticError("make_unit: p(A) is not a unit");
    unit.symplectic_certified = true;
    unit.norm_certified = abs(field_norm(p, classes.chi)) == 1;
    unit.matrix = poly_eval_matrix(p, a.matrix());
    unit.log_full = log_embedding_full(p, classes);
    unit.log_reduced = log_embedding_reduced(p, classes);
    return unit;
}

UnitSearchResult unit_search(const SymplecticMatrix& a, long coeff_bound, int limit,
                             unsigned precision_bits) {
    IntPoly chi = char_poly(a.matrix());
    if (!is_irreducible_over_Z(chi)) throw NotIrreducibleError("unit_search: chi_A reducible");

    UnitSearchResult result;
    result.classes = eigen_classes(chi, precision_bits);
    const int n = a.dim();

    // double-precision roots for pruning, paired with their inverses
    auto roots = find_roots(chi, 64).to_double();
    std::vector<int> invof(n);
    for (int i = 0; i < n; ++i) {
        double best = 1e300;
        for (int j = 0; j < n; ++j) {
            double d = std::abs(roots[i] * roots[j] - 1.0);
            if (d < best) {
                best = d;
                invof[i] = j;
            }
        }
    }
    std::vector<std::vector<std::complex<double>>> pow(n);
    for (int r = 0; r < n; ++r) {
        pow[r].resize(n);
        pow[r][0] = 1.0;
        for (int i = 1; i < n; ++i) pow[r][i] = pow[r][i - 1] * roots[r];
    }

    // odometer over coefficient vectors, partial sums acc[i] = sum_{j>=i} c_j l^j
    std::vector<long> c(n, -coeff_bound);
    std::vector<std::vector<std::complex<double>>> acc(n + 1,
                                                       std::vector<std::complex<double>>(n, 0.0));
    auto recompute_from = [&](int level) {
        for (int i = level; i >= 0; --i)
            for (int r = 0; r < n; ++r)
                acc[i][r] = acc[i + 1][r] + static_cast<double>(c[i]) * pow[r][i];
    };
    recompute_from(n - 1);

    std::vector<IntPoly> confirmed;
    while (true) {
        // canonical sign: leading nonzero coefficient positive; skip constants
        int top = n - 1;
        while (top >= 0 && c[top] == 0) --top;
        if (top >= 1 && c[top] > 0) {
            bool plausible = true;
            for (int r = 0; r < n && plausible; ++r) {
                if (invof[r] < r) continue; // test each pair once
                std::complex<double> prod = acc[0][r] * acc[0][invof[r]];
                if (std::abs(prod - 1.0) > 1e-6) plausible = false;
            }
            if (plausible) {
                std::vector<mpz_class> cz(n);
                for (int i = 0; i < n; ++i) cz[i] = c[i];
                IntPoly p(std::move(cz));
                if (is_symplectic_unit(p, a)) {
                    confirmed.push_back(p);
                    if (limit > 0 && static_cast<int>(confirmed.size()) >= limit) break;
                }
            }
        }
        int i = 0;
        while (i < n && c[i] == coeff_bound) {
            c[i] = -coeff_bound;
            ++i;
        }
        if (i == n) break;
        ++c[i];
        recompute_from(i);
    }

    std::sort(confirmed.begin(), confirmed.end(), [](const IntPoly& x, const IntPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (int i = x.degree(); i >= 0; --i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    });
    for (const auto& p : confirmed) result.units.push_back(make_unit(p, a, result.classes));
    result.exhausted = result.units.empty();
    return result;
}

int lattice_rank(const std::vector<SymplecticUnit>& units, double tol) {
    if (units.empty()) return 0;
    int cols = static_cast<int>(units[0].log_reduced.size());
    if (cols == 0) return 0;
    Eigen::MatrixXd m(units.size(), cols);
    for (size_t i = 0; i < units.size(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = units[i].log_reduced[j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > tol) ++rank;
    return rank;
}

std::vector<double> gap_ratios(const IntMatrix& b, unsigned precision_bits) {
    IntPoly chi = char_poly(b);
    // repeated eigenvalues do not change the ratio set; use the squarefree part
    IntPoly sf = chi.divide_exact(poly_gcd(chi, chi.derivative()));
    RootSet rs = find_roots(sf, precision_bits);
    PrecisionGuard guard(precision_bits + 32);
    std::vector<BigFloat> logs;
    BigFloat chi_plus = 0;
    for (const auto& r : rs.roots) {
        BigFloat lg = log_abs(r);
        if (lg > chi_plus) chi_plus = lg;
        logs.push_back(lg);
    }
    std::vector<double> ratios;
    for (const auto& lg : logs) {
        if (chi_plus == 0) {
            ratios.push_back(0.0); // 0/0 = 0 convention
        } else {
            BigFloat num = lg > 0 ? lg : BigFloat(0);
            ratios.push_back((num / chi_plus).convert_to<double>());
        }
    }
    return ratios;
}

namespace {

IntMatrix int_matrix_power(const IntMatrix& b, long e, const IntMatrix& binv) {
    IntMatrix base = e >= 0 ? b : binv;
    unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
    IntMatrix acc = IntMatrix::identity(b.dim());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

// p with p(A) = U, solved over the Krylov basis (e1, A e1, ..., A^{n-1} e1);
// valid for irreducible chi_A, result must be integral
IntPoly recover_polynomial(const IntMatrix& a, const IntMatrix& u) {
    int n = a.dim();
    std::vector<std::vector<mpq_class>> sys(n, std::vector<mpq_class>(n + 1, 0));
    // columns: A^j e1; rhs: U e1
    std::vector<mpz_class> v(n, 0);
    v[0] = 1;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) sys[i][j] = mpq_class(v[i]);
        v = a.apply(v);
    }
    for (int i = 0; i < n; ++i) sys[i][n] = mpq_class(u.at(i, 0));
    // Gauss
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && sys[piv][col] == 0) ++piv;
        if (piv == n) throw Error("recover_polynomial: Krylov basis degenerate");
        std::swap(sys[col], sys[piv]);
        mpq_class inv = 1 / sys[col][col];
        for (int j = col; j <= n; ++j) sys[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || sys[i][col] == 0) continue;
            mpq_class f = sys[i][col];
            for (int j = col; j <= n; ++j) sys[i][j] -= f * sys[col][j];
        }
    }
    std::vector<mpz_class> coeffs(n);
    for (int i = 0; i < n; ++i) {
        mpq_class q = sys[i][n];
        q.canonicalize();
        if (q.get_den() != 1) throw Error("recover_polynomial: non-integer coefficients");
        coeffs[i] = q.get_num();
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

GapCertificate b_epsilon(const SymplecticMatrix& a, const std::vector<SymplecticUnit>& units,
                         const EigenClassInfo& classes, double epsilon, int m_max) {
    const int dim_red = classes.reduced_dim();
    if (lattice_rank(units, 1e-8) < 2)
        throw RankDeficientError("b_epsilon: unit lattice rank < 2");

    // greedy maximal independent subset of reduced log vectors
    std::vector<int> sel;
    std::vector<Eigen::VectorXd> ortho;
    for (size_t i = 0; i < units.size(); ++i) {
        Eigen::VectorXd v(dim_red);
        for (int j = 0; j < dim_red; ++j) v(j) = units[i].log_reduced[j];
        Eigen::VectorXd w = v;
        for (const auto& o : ortho) w -= o.dot(v) / o.squaredNorm() * o;
        if (w.norm() > 1e-8) {
            sel.push_back(static_cast<int>(i));
            ortho.push_back(w);
        }
    }
    const int r = static_cast<int>(sel.size());
    Eigen::MatrixXd basis(r, dim_red);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < dim_red; ++j) basis(i, j) = units[sel[i]].log_reduced[j];

    // Gram-Schmidt data for Babai nearest plane
    Eigen::MatrixXd gs = basis;
    std::vector<Eigen::VectorXd> bstar(r);
    Eigen::MatrixXd mu = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) {
        Eigen::VectorXd v = basis.row(i);
        for (int j = 0; j < i; ++j) {
            mu(i, j) = basis.row(i).dot(bstar[j]) / bstar[j].squaredNorm();
            v -= mu(i, j) * bstar[j];
        }
        bstar[i] = v;
    }

    GapCertificate best;
    best.epsilon_requested = epsilon;
    for (int m_target = 1; m_target <= m_max; ++m_target) {
        Eigen::VectorXd target = Eigen::VectorXd::Zero(dim_red);
        target(0) = m_target;
        target(1) = -m_target;
        // Babai nearest plane on the row lattice
        Eigen::VectorXd t = target;
        std::vector<long> coeff(r, 0);
        for (int i = r - 1; i >= 0; --i) {
            double ci = t.dot(bstar[i]) / bstar[i].squaredNorm();
            long rounded = std::lround(ci);
            coeff[i] = rounded;
            t -= static_cast<double>(rounded) * basis.row(i).transpose();
        }
        // exact product of the selected units
        IntMatrix prod = IntMatrix::identity(a.dim());
        for (int i = 0; i < r; ++i) {
            if (coeff[i] == 0) continue;
            const IntMatrix& um = units[sel[i]].matrix;
            IntMatrix uinv = SymplecticMatrix(um).inverse().matrix();
            prod = prod * int_matrix_power(um, coeff[i], uinv);
        }
        std::vector<double> ratios = gap_ratios(prod, classes.precision_bits);
        double achieved = 0;
        bool hyperbolic = false;
        for (double x : ratios) {
            if (x > 0) hyperbolic = true;
            achieved = std::max(achieved, std::min(x, 1.0 - x));
        }
        if (!hyperbolic) continue;
        if (achieved <= best.epsilon_achieved) {
            best.epsilon_achieved = achieved;
            best.ratios = ratios;
            best.m_used = m_target;
            best.exponents.assign(coeff.begin(), coeff.end());
            IntPoly p = recover_polynomial(a.matrix(), prod);
            best.unit = make_unit(p, a, classes);
        }
        if (achieved <= epsilon + 1e-12) {
            best.reached = true;
            return best;
        }
    }
    best.reached = false;
    return best;
}

} // namespace catmap
