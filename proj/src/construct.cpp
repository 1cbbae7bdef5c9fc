#include "orecomp/construct.hpp"

#include <algorithm>

namespace orecomp {

namespace {

// t^{r+1} - eps u t + u as a dense polynomial in t.
DensePoly membership_poly(const FieldCtx& F, unsigned eps, const Elt& u) {
    DensePoly P;
    P.c.assign(F.r() + 2, F.zero());
    P.c[F.r() + 1] = F.one();
    P.c[0] = u;
    if (eps == 1) P.c[1] = F.neg(u);
    poly_normalize(F, P);
    return P;
}

void check_family_shape(const FieldCtx& F, unsigned eps, const Elt& u, unsigned ell,
                        const Elt& s) {
    if (eps > 1) throw DomainError("eps must be 0 or 1");
    F.check_element(u);
    F.check_element(s);
    if (F.is_zero(u) || F.is_zero(s)) throw DomainError("u and s must be nonzero");
    if (ell == 0 || (F.r() - 1) % ell != 0)
        throw DomainError("ell must be a positive divisor of r-1");
}

// x * inner^m
DensePoly wrap_power(const FieldCtx& F, const DensePoly& inner, unsigned m) {
    return poly_mul(F, poly_x(F), poly_pow(F, inner, m));
}

// (x - P(c)) o P o (x + c): the conjugate of P under the shift by c, monic
// original again.
DensePoly shift_conjugate(const FieldCtx& F, const DensePoly& P, const Elt& c) {
    DensePoly xc = poly_from_coeffs(F, {c, F.one()});
    DensePoly out = poly_compose(F, P, xc);
    out = poly_sub(F, out, poly_const(F, poly_coeff(F, out, 0)));
    return out;
}

// The three unshifted polynomials for one parameter choice.
struct BaseTriple {
    DensePoly f, g, h;
};

DensePoly base_f(const FieldCtx& F, unsigned eps, const Elt& u, unsigned ell, const Elt& s) {
    const u64 r = F.r();
    const unsigned m = unsigned((r - 1) / ell);
    DensePoly core;
    core.c.assign(ell * (r + 1) + 1, F.zero());
    core.c[ell * (r + 1)] = F.one();
    if (eps == 1) core.c[ell] = F.neg(F.mul(u, F.pow(s, r)));
    core.c[0] = F.mul(u, F.pow(s, r + 1));
    poly_normalize(F, core);
    return wrap_power(F, core, m);
}

BaseTriple base_triple(const FieldCtx& F, const FamilyParams& p) {
    const u64 r = F.r();
    const unsigned m = unsigned((r - 1) / p.ell);
    BaseTriple out;
    out.f = base_f(F, p.eps, p.u, p.ell, p.s);
    DensePoly gc;
    gc.c.assign(p.ell + 1, F.zero());
    gc.c[p.ell] = F.one();
    gc.c[0] = F.neg(F.div(F.mul(p.u, F.pow(p.s, r)), p.t));
    out.g = wrap_power(F, gc, m);
    DensePoly hc;
    hc.c.assign(p.ell + 1, F.zero());
    hc.c[p.ell] = F.one();
    hc.c[0] = F.neg(F.mul(p.s, p.t));
    out.h = wrap_power(F, hc, m);
    return out;
}

}  // namespace

std::vector<Elt> enumerate_T(const FieldCtx& F, unsigned eps, const Elt& u) {
    if (eps > 1) throw DomainError("eps must be 0 or 1");
    F.check_element(u);
    if (F.is_zero(u)) throw DomainError("u must be nonzero");
    return roots_in_field(F, membership_poly(F, eps, u));
}

void check_family_params(const FieldCtx& F, const FamilyParams& p) {
    check_family_shape(F, p.eps, p.u, p.ell, p.s);
    F.check_element(p.t);
    F.check_element(p.w);
    if (F.is_zero(p.t)) throw DomainError("t must be nonzero");
    if (!F.is_zero(poly_eval(F, membership_poly(F, p.eps, p.u), p.t)))
        throw DomainError("t is not a root of t^{r+1} - eps u t + u");
}

Decomposition build_family(const FieldCtx& F, const FamilyParams& params) {
    check_family_params(F, params);
    BaseTriple base = base_triple(F, params);

    Decomposition out;
    out.h = shift_conjugate(F, base.h, params.w);
    out.g = shift_conjugate(F, base.g, poly_eval(F, base.h, params.w));
    out.f = shift_conjugate(F, base.f, params.w);
    require(poly_compose(F, out.g, out.h) == out.f, "family members recompose");
    return out;
}

FamilyCollision build_family_collision(const FieldCtx& F, const FamilySet& set) {
    check_family_shape(F, set.eps, set.u, set.ell, set.s);
    F.check_element(set.w);

    FamilyCollision out;
    out.set = set;
    out.f = shift_conjugate(F, base_f(F, set.eps, set.u, set.ell, set.s), set.w);

    std::vector<std::pair<DensePoly, std::pair<DensePoly, Elt>>> rows;
    for (const Elt& t : enumerate_T(F, set.eps, set.u)) {
        FamilyParams p{set.eps, set.u, set.ell, set.s, t, set.w};
        Decomposition dec = build_family(F, p);
        require(dec.f == out.f, "the composite does not depend on t");
        rows.push_back({dec.h, {dec.g, t}});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& l, const auto& r_) { return l.first < r_.first; });
    for (size_t j = 1; j < rows.size(); ++j)
        require(rows[j - 1].first != rows[j].first, "distinct t give distinct right components");
    for (auto& [h, gt] : rows) {
        out.pairs.push_back({gt.first, h});
        out.ts.push_back(gt.second);
    }
    return out;
}

FamilySet normalize_family(const FieldCtx& F, const FamilySet& set) {
    check_family_shape(F, set.eps, set.u, set.ell, set.s);
    F.check_element(set.w);
    FamilySet out = set;
    if (out.ell == F.r() - 1) out.w = F.zero();
    if (out.eps == 0) {
        // rescale to u = -1: s'^{r+1} = -u s^{r+1}
        DensePoly P;
        P.c.assign(F.r() + 2, F.zero());
        P.c[F.r() + 1] = F.one();
        P.c[0] = F.mul(set.u, F.pow(set.s, F.r() + 1));
        auto roots = roots_in_field(F, P);
        if (roots.empty())
            throw DomainError("-u s^{r+1} has no (r+1)-th root, so the family has no member");
        out.u = F.neg(F.one());
        out.s = roots.front();
    }
    return out;
}

std::optional<FamilySet> recover_params(const FieldCtx& F, const DensePoly& f) {
    const u64 r = F.r();
    if (!poly_is_monic(F, f) || !poly_is_original(F, f)) return std::nullopt;
    if (poly_deg(f) != long(r * r)) return std::nullopt;
    auto d2 = second_degree(F, f);
    if (!d2) return std::nullopt;
    const u64 D = u64(*d2);

    FamilySet set;
    set.eps = (D % r == 0) ? 1 : 0;
    const u64 gap = r * r - D;
    const u64 step = set.eps == 1 ? r : r + 1;
    if (gap % step != 0) return std::nullopt;
    const u64 ell = gap / step;
    if (ell == 0 || ell > r - 1 || (r - 1) % ell != 0) return std::nullopt;
    set.ell = unsigned(ell);
    const unsigned m = unsigned((r - 1) / ell);
    const Elt mF = F.from_int(m);

    const long idx2 = long(r * r - ell * r - ell);
    if (set.eps == 1) {
        const Elt c1 = poly_coeff(F, f, long(D));  // -m u s^r
        const Elt c2 = poly_coeff(F, f, idx2);     // m u s^{r+1}
        if (F.is_zero(c2)) return std::nullopt;
        set.s = F.neg(F.div(c2, c1));
        set.u = F.div(c1, F.neg(F.mul(mF, F.pow(set.s, r))));
    } else {
        const Elt c2 = poly_coeff(F, f, idx2);  // m u s^{r+1}, here with u = -1
        set.u = F.neg(F.one());
        DensePoly P;
        P.c.assign(r + 2, F.zero());
        P.c[r + 1] = F.one();
        P.c[0] = F.div(c2, mF);  // s^{r+1} = -c2/m
        auto roots = roots_in_field(F, P);
        if (roots.empty()) return std::nullopt;
        set.s = roots.front();
    }

    if (ell == r - 1) {
        set.w = F.zero();
    } else {
        // the coefficient below the second-degree one is linear in w with
        // slope (r^2 - ell r - ell) m u s^{r+1} != 0
        const Elt slope = F.mul(F.from_int(i64((r * r - ell * r - ell) % F.p())),
                                F.mul(mF, F.mul(set.u, F.pow(set.s, r + 1))));
        require(!F.is_zero(slope), "shift recovery has nonzero slope");
        set.w = F.div(poly_coeff(F, f, idx2 - 1), slope);
    }

    if (shift_conjugate(F, base_f(F, set.eps, set.u, set.ell, set.s), set.w) != f)
        return std::nullopt;
    return set;
}

AdditivePoly sample_with_collision_count(const FieldCtx& F, u64 i, u64 seed) {
    const u64 r = F.r();
    if (i != 0 && i != 1 && i != 2 && i != r + 1)
        throw DomainError("collision counts at this degree are 0, 1, 2 or r+1");
    if (predicted_counts(F).rows.at(i) == 0)
        throw DomainError("no trinomial attains this collision count over this field");

    Rng rng(seed);
    for (unsigned tries = 0; tries < 2'000'000; ++tries) {
        AdditivePoly f;
        f.a = {F.random_element(rng), F.random_element(rng), F.one()};
        skew_normalize(F, f);
        if (collision_count_r2(F, f) == i) return f;
    }
    throw GuardError("sampling budget exhausted");
}

AdditivePoly sample_indecomposable(const FieldCtx& F, long n, u64 seed) {
    if (n < 1) throw DomainError("skew degree must be at least 1");
    Rng rng(seed);
    for (unsigned tries = 0; tries < 1'000'000; ++tries) {
        AdditivePoly f = random_additive(F, n, rng);
        // a nonzero linear term is necessary for indecomposability at n >= 2
        if (F.is_zero(f.a[0])) f.a[0] = F.element_at(1 + rng.below(F.q() - 1));
        DensePoly c = tau(F, mclc(F, f));
        if (poly_deg(c) == n && poly_is_irreducible(F, c, 1)) return f;
    }
    throw GuardError("sampling budget exhausted");
}

}  // namespace orecomp
