// Generators for collision families: the shifted product families
//
//   f = x (x^{l(r+1)} - eps u s^r x^l + u s^{r+1})^m,   m = (r-1)/l,
//   g = x (x^l - u s^r t^{-1})^m,   h = x (x^l - s t)^m,
//
// with f = g o h for every t in T = {t : t^{r+1} - eps u t + u = 0}, their
// conjugates under x -> x + w, parameter recovery from f alone, and samplers
// for additive polynomials with a prescribed collision count or prescribed
// indecomposability.
#pragma once

#include <optional>
#include <vector>

#include "orecomp/census.hpp"

namespace orecomp {

// Parameters of a single decomposition within a family. Validity: u, s
// nonzero, l a positive divisor of r-1, t a root of t^{r+1} - eps u t + u
// (which forces t != 0).
struct FamilyParams {
    unsigned eps = 1;  // 0 or 1
    Elt u;
    unsigned ell = 1;
    Elt s;
    Elt t;
    Elt w;

    bool operator==(const FamilyParams& o) const = default;
};

// A family with t left free: the collision is {(g(t), h(t)) : t in T}.
struct FamilySet {
    unsigned eps = 1;
    Elt u;
    unsigned ell = 1;
    Elt s;
    Elt w;

    bool operator==(const FamilySet& o) const = default;
};

// One member: g o h = f, all monic original.
struct Decomposition {
    DensePoly g, h, f;

    bool operator==(const Decomposition& o) const = default;
};

// The full collision: f plus one (g, h) pair per t in T, pairs sorted by h's
// coefficient tuple, ts in matching order.
struct FamilyCollision {
    FamilySet set;
    DensePoly f;
    std::vector<std::pair<DensePoly, DensePoly>> pairs;
    std::vector<Elt> ts;
};

// All F_q-roots of t^{r+1} - eps u t + u, sorted by coordinate order.
// Size lands in {0, 1, 2, r+1} for eps = 1 and in {0, gcd(r+1, q-1)} for
// eps = 0. Rejects u = 0.
std::vector<Elt> enumerate_T(const FieldCtx& F, unsigned eps, const Elt& u);

void check_family_params(const FieldCtx& F, const FamilyParams& p);

// The decomposition for one t, shifted by w:
//   f_(w) = (x - f(w)) o f o (x + w),
//   g_(w) = (x - f(w)) o g o (x + h(w)),
//   h_(w) = (x - h(w)) o h o (x + w).
// The recomposition g_(w) o h_(w) = f_(w) is verified before returning.
Decomposition build_family(const FieldCtx& F, const FamilyParams& params);

// All decompositions of the family at once. Verifies that f is the same for
// every t and that the h components are pairwise distinct.
FamilyCollision build_family_collision(const FieldCtx& F, const FamilySet& set);

// Canonical representative of the equivalence class of parameter sets with
// the same f: for l = r-1 the shift is absorbed (w = 0); for eps = 0 the
// class is rescaled to u = -1 with the smallest s in coordinate order among
// those giving the same s^{r+1}. Rejects eps = 0 sets whose -u s^{r+1} has no
// (r+1)-th root in F_q (such sets have empty T and no collision to name).
FamilySet normalize_family(const FieldCtx& F, const FamilySet& set);

// Reads the parameters back off a monic original f of degree r^2: eps from
// whether r divides the second degree, l from its value, then u, s from the
// two named coefficients, then w from the next coefficient down. Returns the
// normalized set when rebuilding it reproduces f exactly, absent otherwise.
std::optional<FamilySet> recover_params(const FieldCtx& F, const DensePoly& f);

// Random trinomial x^{r^2} + a x^r + b x with exactly i decompositions,
// i in {0, 1, 2, r+1}, by rejection. Rejects i whose predicted census row is
// empty at this (q, r).
AdditivePoly sample_with_collision_count(const FieldCtx& F, u64 i, u64 seed);

// Random monic additive polynomial of skew degree n that is indecomposable,
// certified by the image of its minimal central left composition in F_r[y]
// being irreducible of degree n.
AdditivePoly sample_indecomposable(const FieldCtx& F, long n, u64 seed);

}  // namespace orecomp
