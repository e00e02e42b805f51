#include "catmap/symplectic.hpp"

#include <random>

#include "catmap/errors.hpp"

namespace catmap {

IntMatrix standard_J(int d) {
    IntMatrix j(2 * d);
    for (int i = 0; i < d; ++i) {
        j.at(i, d + i) = 1;
        j.at(d + i, i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.dim() % 2 != 0) throw OddDimensionError("is_symplectic: odd dimension");
    int d = m.dim() / 2;
    IntMatrix j = standard_J(d);
    return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix m) : inner_(std::move(m)) {
    if (inner_.dim() % 2 != 0) throw OddDimensionError("SymplecticMatrix: odd dimension");
    if (!is_symplectic(inner_)) throw NotSymplecticError("SymplecticMatrix: B^T J B != J");
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    int dd = d();
    IntMatrix j = standard_J(dd);
    IntMatrix jinv = -j; // J^{-1} = -J
    return SymplecticMatrix(jinv * inner_.transpose() * j);
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
    return SymplecticMatrix(inner_ * o.inner_);
}

IntMatrix GeneratorWord::token_matrix(const WordToken& t) const {
    int n = 2 * d;
    switch (t.kind) {
        case WordToken::Kind::J:
            return standard_J(d);
        case WordToken::Kind::Shear: {
            IntMatrix m = IntMatrix::identity(n);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m.at(d + i, j) = t.block.at(i, j);
            return m;
        }
        case WordToken::Kind::Linear: {
            IntMatrix m(n);
            IntMatrix einv_t = t.block.inverse_unimodular().transpose();
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    m.at(i, j) = t.block.at(i, j);
                    m.at(d + i, d + j) = einv_t.at(i, j);
                }
            return m;
        }
    }
    throw Error("unreachable");
}

IntMatrix GeneratorWord::product() const {
    IntMatrix acc = IntMatrix::identity(2 * d);
    for (const auto& t : tokens) acc = acc * token_matrix(t);
    return acc;
}

namespace {

mpz_class round_quotient(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den (balanced remainder); den != 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class ad = abs(den);
    if (2 * r > ad) q += 1;
    return q;
}

// unimodular E acting on coordinates t..d-1 with (E v)_free = (g, 0, ..., 0),
// g = gcd > 0 placed at coordinate t; identity elsewhere
IntMatrix gcd_collapse(const std::vector<mpz_class>& v, int t, int d) {
    IntMatrix e = IntMatrix::identity(d);
    auto row_op = [&](int dst, int src, const mpz_class& f) {
        for (int j = 0; j < d; ++j) e.at(dst, j) += f * e.at(src, j);
    };
    std::vector<mpz_class> w(v);
    if (w[t] == 0) {
        for (int i = t + 1; i < d; ++i)
            if (w[i] != 0) {
                // row_t += row_i
                row_op(t, i, 1);
                w[t] += w[i];
                break;
            }
    }
    for (int i = t + 1; i < d; ++i) {
        if (w[i] == 0) continue;
        mpz_class g, u, s;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), s.get_mpz_t(), w[t].get_mpz_t(),
                   w[i].get_mpz_t());
        mpz_class a = w[t] / g, b = w[i] / g;
        // [u s; -b a] is unimodular and sends (w_t, w_i) to (g, 0)
        std::vector<mpz_class> rt(d), ri(d);
        for (int j = 0; j < d; ++j) {
            rt[j] = u * e.at(t, j) + s * e.at(i, j);
            ri[j] = -b * e.at(t, j) + a * e.at(i, j);
        }
        for (int j = 0; j < d; ++j) {
            e.at(t, j) = rt[j];
            e.at(i, j) = ri[j];
        }
        w[i] = 0;
        w[t] = g;
    }
    if (w[t] < 0)
        for (int j = 0; j < d; ++j) e.at(t, j) = -e.at(t, j);
    return e;
}

} // namespace

GeneratorWord symplectic_word(const SymplecticMatrix& a) {
    const int d = a.d();
    const int n = 2 * d;
    IntMatrix m = a.matrix();
    GeneratorWord word{d, {}};
    GeneratorWord helper{d, {}};

    // fast paths matching the bare generators
    if (m.is_identity()) return word;
    if (m == standard_J(d)) {
        word.tokens.push_back(WordToken::j());
        return word;
    }

    // the word is assembled as the inverses of the left-applied reduction ops,
    // in application order: G_k ... G_1 M = I  =>  M = inv(G_1) ... inv(G_k)
    auto apply_op = [&](const IntMatrix& op, std::vector<WordToken> inverse_tokens) {
        m = op * m;
        for (auto& t : inverse_tokens) word.tokens.push_back(std::move(t));
    };

    auto shear_op = [&](const IntMatrix& s) {
        apply_op(helper.token_matrix(WordToken::shear(s)), {WordToken::shear(-s)});
    };
    auto linear_op = [&](const IntMatrix& e) {
        apply_op(helper.token_matrix(WordToken::linear(e)),
                 {WordToken::linear(e.inverse_unimodular())});
    };
    auto upper_shear_op = [&](const IntMatrix& s) {
        // Upper(S) = J^3 Shear(-S) J; inverse is J^3 Shear(S) J
        IntMatrix op = IntMatrix::identity(n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) op.at(i, d + j) = s.at(i, j);
        apply_op(op, {WordToken::j(), WordToken::j(), WordToken::j(), WordToken::shear(s),
                      WordToken::j()});
    };
    auto partial_fourier_op = [&](int i) {
        // J_i = L_i(-1) U_i(1) L_i(-1): (alpha_i, gamma_i) -> (gamma_i, -alpha_i)
        IntMatrix op = IntMatrix::identity(n);
        op.at(i, i) = 0;
        op.at(d + i, d + i) = 0;
        op.at(i, d + i) = 1;
        op.at(d + i, i) = -1;
        IntMatrix eii(d);
        eii.at(i, i) = 1;
        apply_op(op, {WordToken::shear(eii), WordToken::j(), WordToken::j(), WordToken::j(),
                      WordToken::shear(eii), WordToken::j(), WordToken::shear(eii)});
    };

    for (int t = 0; t < d; ++t) {
        // reduce column t to e_t: per-coordinate Euclid on (alpha, gamma)
        int guard = 0;
        while (true) {
            if (++guard > 400) throw Error("symplectic_word: column reduction stalled");
            std::vector<mpz_class> alpha(d), gamma(d);
            for (int i = 0; i < d; ++i) {
                alpha[i] = m.at(i, t);
                gamma[i] = m.at(d + i, t);
            }
            bool alpha_free_zero = true;
            for (int i = t; i < d; ++i)
                if (alpha[i] != 0) alpha_free_zero = false;
            if (alpha_free_zero) {
                int i = t;
                while (i < d && gamma[i] == 0) ++i;
                if (i == d) throw Error("symplectic_word: zero column");
                partial_fourier_op(i);
                continue;
            }
            IntMatrix e = gcd_collapse(alpha, t, d);
            if (!e.is_identity()) linear_op(e);
            const mpz_class g = m.at(t, t); // = gcd, > 0
            IntMatrix s(d);
            bool any = false;
            for (int i = t; i < d; ++i) {
                mpz_class q = round_quotient(m.at(d + i, t), g);
                if (q != 0) {
                    s.at(i, t) = -q;
                    s.at(t, i) = -q;
                    any = true;
                }
            }
            if (any) shear_op(s);
            bool gamma_zero = true;
            for (int i = t; i < d; ++i)
                if (m.at(d + i, t) != 0) gamma_zero = false;
            if (gamma_zero) {
                if (m.at(t, t) != 1)
                    throw Error("symplectic_word: non-primitive column"); // cannot happen
                break;
            }
            int i = t;
            while (i < d && m.at(d + i, t) == 0) ++i;
            partial_fourier_op(i);
        }
        // column t is e_t; column d+t = (beta, delta) with delta_t = 1.
        // one upper shear clears beta without any divisibility constraint
        std::vector<mpz_class> beta(d), delta(d);
        for (int i = 0; i < d; ++i) {
            beta[i] = m.at(i, d + t);
            delta[i] = m.at(d + i, d + t);
        }
        bool beta_zero = true;
        for (const auto& v : beta)
            if (v != 0) beta_zero = false;
        if (!beta_zero) {
            IntMatrix s(d);
            mpz_class st = -beta[t];
            for (int i = t + 1; i < d; ++i) {
                s.at(i, t) = -beta[i];
                s.at(t, i) = -beta[i];
                st += beta[i] * delta[i];
            }
            s.at(t, t) = st;
            upper_shear_op(s);
        }
        // clear delta via E = I + e_t (delta - e_t)^T, which fixes everything
        // already processed and maps delta to e_t on the momentum side
        for (int i = 0; i < d; ++i) delta[i] = m.at(d + i, d + t);
        bool delta_clean = true;
        for (int i = 0; i < d; ++i)
            if (delta[i] != (i == t ? 1 : 0)) delta_clean = false;
        if (!delta_clean) {
            IntMatrix e = IntMatrix::identity(d);
            for (int j = 0; j < d; ++j) e.at(t, j) += delta[j] - (j == t ? 1 : 0);
            linear_op(e);
        }
    }
    if (!m.is_identity()) throw Error("symplectic_word: reduction incomplete");
    return word;
}

namespace {

IntMatrix random_gl(int d, long bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    std::uniform_int_distribution<int> bit(0, 1);
    // permutation * unit lower * unit upper * diag(+-1)
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    for (int i = d - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(perm[i], perm[pick(rng)]);
    }
    IntMatrix p(d), l = IntMatrix::identity(d), u = IntMatrix::identity(d);
    for (int i = 0; i < d; ++i) p.at(i, perm[i]) = 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            l.at(i, j) = entry(rng);
            u.at(j, i) = entry(rng);
        }
    IntMatrix e = p * l * u;
    for (int i = 0; i < d; ++i)
        if (bit(rng)) {
            for (int r = 0; r < d; ++r) e.at(r, i) = -e.at(r, i);
        }
    return e;
}

} // namespace

GeneratorWord random_word(int d, int word_length, long entry_bound, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> entry(-entry_bound, entry_bound);
    GeneratorWord word{d, {}};
    for (int t = 0; t < word_length; ++t) {
        switch (kind(rng)) {
            case 0:
                word.tokens.push_back(WordToken::j());
                break;
            case 1:
            case 2: {
                IntMatrix s(d);
                for (int i = 0; i < d; ++i)
                    for (int j = i; j < d; ++j) {
                        mpz_class v(entry(rng));
                        s.at(i, j) = v;
                        s.at(j, i) = v;
                    }
                word.tokens.push_back(WordToken::shear(std::move(s)));
                break;
            }
            default:
                word.tokens.push_back(WordToken::linear(random_gl(d, entry_bound, rng)));
                break;
        }
    }
    return word;
}

SymplecticMatrix random_symplectic(int d, int word_length, long entry_bound, uint64_t seed) {
    return SymplecticMatrix(random_word(d, word_length, entry_bound, seed).product());
}

} // namespace catmap
