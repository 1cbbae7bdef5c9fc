// Shared oracles and fixtures for the test suites. Everything here validates
// library results through independent routes: dense polynomial arithmetic,
// exhaustive enumeration, and explicit splitting field constructions.
#pragma once

#include <optional>
#include <vector>

#include "orecomp/linalg.hpp"
#include "orecomp/ore.hpp"

namespace testutil {

using namespace orecomp;

inline FieldCtx f27() {
    std::vector<i64> mod{1, -1, 0, 1};  // t^3 - t + 1
    return FieldCtx::make(3, 1, 3, &mod);
}

// phi(a) = sum a_i theta^i, an F_p-algebra embedding of F into E when theta
// is a root of F's defining modulus inside E.
inline Elt embed_elt(const FieldCtx& F, const FieldCtx& E, const Elt& theta, const Elt& a) {
    (void)F;  // coordinates of a are plain F_p digits
    Elt acc = E.zero();
    for (size_t i = a.c.size(); i-- > 0;)
        acc = E.add(E.mul(acc, theta), E.from_int(i64(a.c[i])));
    return acc;
}

// Number of monic skew degree 1 right components of f, by exhaustive division.
inline u64 brute_right_components(const FieldCtx& F, const AdditivePoly& f) {
    u64 count = 0;
    for (u64 i = 0; i < F.q(); ++i) {
        AdditivePoly h{{F.element_at(i), F.one()}};
        skew_normalize(F, h);
        if (skew_is_zero(skew_right_rem(F, f, h))) ++count;
    }
    return count;
}

// The Frobenius action x -> x^q on the root space of f, computed in an
// explicit splitting extension E of F. Returns the matrix of the action over
// F_r together with the embedding data, or nullopt when the splitting degree
// exceeds max_e.
struct FrobeniusAction {
    FieldCtx E;
    Elt theta;                         // root of F's modulus in E
    std::vector<Elt> kernel_basis;     // F_r-basis of the root space, in E
    std::vector<std::vector<Elt>> S;   // action of x -> x^q, entries in F_r
};

inline std::optional<FrobeniusAction> splitting_frobenius(const FieldCtx& F,
                                                          const AdditivePoly& f,
                                                          unsigned max_e, u64 seed = 0xe0) {
    long n = skew_deg(f);
    require(n >= 1 && !F.is_zero(f.a[0]), "splitting_frobenius needs a separable input");
    // minimal e with x^{q^e} = x modulo f
    unsigned e = 0;
    {
        AdditivePoly xq = skew_monomial(F, long(F.d()), F.one());
        AdditivePoly rem = skew_right_rem(F, skew_x(F), f);
        for (unsigned i = 1; i <= 64; ++i) {
            rem = skew_right_rem(F, skew_compose(F, xq, rem), f);
            if (rem == skew_x(F)) {
                e = i;
                break;
            }
        }
    }
    if (e == 0 || e > max_e) return std::nullopt;

    FrobeniusAction out{FieldCtx::make(F.p(), F.d0(), F.d() * e, nullptr, seed), Elt{}, {}, {}};
    const FieldCtx& E = out.E;
    DensePoly modulus_in_e;
    for (u32 c : F.modulus()) modulus_in_e.c.push_back(E.from_int(i64(c)));
    poly_normalize(E, modulus_in_e);
    auto roots = roots_in_field(E, modulus_in_e);
    require(!roots.empty(), "modulus splits in the extension");
    out.theta = roots.front();

    AdditivePoly f_e;
    for (auto& c : f.a) f_e.a.push_back(embed_elt(F, E, out.theta, c));
    skew_normalize(E, f_e);

    // root space of f as the kernel of an F_r-linear map on E
    unsigned D = E.d();
    std::vector<std::vector<Elt>> m(D, std::vector<Elt>(D, E.zero()));
    for (unsigned col = 0; col < D; ++col) {
        Elt image = skew_eval(E, f_e, E.r_basis()[col]);
        auto coords = E.r_coords(image);
        for (unsigned row = 0; row < D; ++row) m[row][col] = coords[row];
    }
    auto kernel = fq_kernel(E, m);
    require(long(kernel.size()) == n, "separable polynomial has full root space");
    for (auto& coords : kernel) out.kernel_basis.push_back(E.from_r_coords(coords));

    // express v -> v^q on the kernel basis over F_r
    std::vector<std::vector<Elt>> basis_cols(D, std::vector<Elt>(kernel.size(), E.zero()));
    for (size_t i = 0; i < kernel.size(); ++i) {
        auto coords = E.r_coords(out.kernel_basis[i]);
        for (unsigned row = 0; row < D; ++row) basis_cols[row][i] = coords[row];
    }
    out.S.assign(size_t(n), std::vector<Elt>(size_t(n), E.zero()));
    for (size_t i = 0; i < kernel.size(); ++i) {
        Elt w = E.frob(out.kernel_basis[i], long(F.d()));
        auto coords = E.r_coords(w);
        std::vector<Elt> rhs(coords.begin(), coords.end());
        auto x = fq_solve(E, basis_cols, rhs);
        require(x.has_value(), "Frobenius stabilizes the root space");
        for (size_t rowi = 0; rowi < x->size(); ++rowi) {
            require(E.in_subfield((*x)[rowi], 1), "Frobenius matrix entries lie in F_r");
            out.S[rowi][i] = (*x)[rowi];
        }
    }
    return out;
}

// Matrix helpers over the embedded copy of F_r inside E.
inline std::vector<std::vector<Elt>> mat_mul_e(const FieldCtx& E,
                                               const std::vector<std::vector<Elt>>& a,
                                               const std::vector<std::vector<Elt>>& b) {
    size_t n = a.size();
    std::vector<std::vector<Elt>> c(n, std::vector<Elt>(n, E.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (E.is_zero(a[i][k])) continue;
            for (size_t j = 0; j < n; ++j)
                c[i][j] = E.add(c[i][j], E.mul(a[i][k], b[k][j]));
        }
    return c;
}

inline std::vector<std::vector<Elt>> mat_identity_e(const FieldCtx& E, size_t n) {
    std::vector<std::vector<Elt>> m(n, std::vector<Elt>(n, E.zero()));
    for (size_t i = 0; i < n; ++i) m[i][i] = E.one();
    return m;
}

// Evaluate a polynomial with coefficients in F (lying in F_r) at a matrix
// over E, embedding coefficients through theta.
inline std::vector<std::vector<Elt>> mat_poly_eval_e(const FieldCtx& F, const FieldCtx& E,
                                                     const Elt& theta, const DensePoly& c,
                                                     const std::vector<std::vector<Elt>>& s) {
    size_t n = s.size();
    auto acc = std::vector<std::vector<Elt>>(n, std::vector<Elt>(n, E.zero()));
    for (size_t i = c.c.size(); i-- > 0;) {
        acc = mat_mul_e(E, acc, s);
        Elt coef = embed_elt(F, E, theta, c.c[i]);
        for (size_t j = 0; j < n; ++j) acc[j][j] = E.add(acc[j][j], coef);
    }
    return acc;
}

inline size_t mat_rank_e(const FieldCtx& E, std::vector<std::vector<Elt>> m) {
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    return cols - fq_kernel(E, std::move(m)).size();
}

}  // namespace testutil
