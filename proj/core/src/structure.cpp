#include "catmap/structure.hpp"

#include <algorithm>

#include "catmap/errors.hpp"
#include "catmap/factorization.hpp"

namespace catmap {

IntPoly reciprocal_poly(const IntPoly& rho) {
    int n = rho.degree();
    std::vector<mpz_class> rev(n + 1);
    for (int i = 0; i <= n; ++i) rev[i] = rho[n - i];
    IntPoly r(std::move(rev));
    if (r.leading() < 0) r = -r;
    if (!r.is_monic()) throw Error("reciprocal_poly: reversal is not monic up to sign");
    return r;
}

IntMatrix symplectic_gram(const LatticeBasis& basis) {
    int r = basis.rank();
    IntMatrix j = standard_J(basis.ambient_dim / 2);
    IntMatrix gram(r);
    for (int u = 0; u < r; ++u) {
        std::vector<mpz_class> jv = j.apply(basis.vectors[u]);
        for (int v = 0; v < r; ++v) {
            mpz_class dot = 0;
            for (int i = 0; i < basis.ambient_dim; ++i) dot += basis.vectors[v][i] * jv[i];
            gram.at(v, u) = dot; // omega(b_v, b_u) = b_v^T J b_u
        }
    }
    return gram;
}

StructureReport structure_report(const SymplecticMatrix& a, unsigned precision_bits) {
    StructureReport report;
    report.chi = char_poly(a.matrix());
    if (!is_squarefree(report.chi))
        throw NotSeparableError("structure_report: chi_A is not separable");

    auto factors = factor_over_Z(report.chi);
    std::vector<IntPoly> irreducibles;
    for (const auto& [p, mult] : factors) {
        if (mult != 1) throw NotSeparableError("structure_report: repeated factor");
        irreducibles.push_back(p);
    }

    // pair every non-self-reciprocal factor with its reciprocal
    std::vector<int> partner(irreducibles.size(), -1);
    std::vector<bool> self(irreducibles.size(), false);
    for (size_t i = 0; i < irreducibles.size(); ++i) {
        IntPoly rstar = reciprocal_poly(irreducibles[i]);
        if (rstar == irreducibles[i]) {
            self[i] = true;
            continue;
        }
        for (size_t j = 0; j < irreducibles.size(); ++j)
            if (j != i && irreducibles[j] == rstar) partner[i] = static_cast<int>(j);
        if (partner[i] < 0)
            throw Error("structure_report: reciprocal factor missing (chi not palindromic?)");
    }

    for (size_t i = 0; i < irreducibles.size(); ++i) {
        StructureBlock block;
        block.poly = irreducibles[i];
        block.lattice = hnf_kernel(poly_eval_matrix(irreducibles[i], a.matrix()));
        if (block.lattice.rank() != irreducibles[i].degree())
            throw Error("structure_report: kernel rank mismatch");
        IntMatrix gram = symplectic_gram(block.lattice);
        if (gram.is_zero())
            block.klass = BlockClass::Isotropic;
        else if (gram.det() != 0)
            block.klass = BlockClass::Symplectic;
        else
            throw Error("structure_report: degenerate non-isotropic block");
        block.partner = partner[i];
        // consistency with the factor pairing
        if (self[i] && block.klass != BlockClass::Symplectic)
            throw Error("structure_report: self-reciprocal factor with isotropic kernel");
        if (!self[i] && block.klass != BlockClass::Isotropic)
            throw Error("structure_report: paired factor with non-isotropic kernel");
        report.blocks.push_back(std::move(block));
    }
    for (size_t i = 0; i < irreducibles.size(); ++i)
        if (partner[i] >= 0 && static_cast<int>(i) < partner[i]) ++report.isotropic_pairs;

    SpectralProfile profile = spectral_profile(report.chi, precision_bits);
    report.m = profile.m;
    report.k = profile.k;
    report.l = profile.l;
    report.predicted_rank = report.m + report.l - report.isotropic_pairs;
    return report;
}

} // namespace catmap
