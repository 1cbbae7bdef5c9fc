// Counting decompositions of trinomials x^{r^m} + a x^r + b x over the (a,b)
// grid: closed-form tables, exhaustive recounts, the relations restricting the
// grid to b != 0 and to ab != 0, counts of indecomposable additive
// polynomials, and the exhaustive census of *all* (not necessarily additive)
// compositions of monic original degree-p polynomials.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orecomp/frobenius.hpp"

namespace orecomp {

// Which part of the (a,b) parameter grid a table counts.
enum class CensusVariant { all, b_nonzero, ab_nonzero };
const char* variant_name(CensusVariant v);

// rows[i] = number of grid points whose trinomial has a maximal i-collision,
// equivalently whose projective polynomial has exactly i roots in F_q.
struct CensusTable {
    u64 p = 0, r = 0, q = 0;
    unsigned m = 2;
    CensusVariant variant = CensusVariant::all;
    std::map<u64, u64> rows;

    bool operator==(const CensusTable& o) const = default;
};

// Closed-form table over the full grid at m = 2. Every division is checked
// exact; the four rows sum to q^2.
CensusTable predicted_counts(const FieldCtx& F);

// Closed-form table over the ab != 0 grid at m = 2. Three cases by the parity
// of d (where q = r^d) and of r.
CensusTable bluher_counts(const FieldCtx& F);

// The gcds gamma_{m-1} = gcd(phi_{r,m-1}, q-1) and gamma_m that control how
// the b = 0 row and the a = 0 column redistribute between collision sizes.
struct RestrictionRelations {
    unsigned m = 2;
    u64 gamma_prev = 1;  // gcd(phi_{r,m-1}, q-1)
    u64 gamma_m = 1;     // gcd(phi_{r,m},   q-1)

    bool operator==(const RestrictionRelations& o) const = default;
};
RestrictionRelations restriction_counts(const FieldCtx& F, unsigned m);

// Add the a = 0 column back to an ab_nonzero table (giving b_nonzero): the
// column splits as (q-1)(1 - 1/gamma_m) points with no root and (q-1)/gamma_m
// points with exactly gamma_m roots.
CensusTable extend_with_a_zero(const FieldCtx& F, const CensusTable& t);

// Add the b = 0 row back to a b_nonzero table (giving all): (0,0) and the
// points with no nonzero root join size 1, the rest land on gamma_{m-1} + 1.
CensusTable extend_with_b_zero(const FieldCtx& F, const CensusTable& t);

// Exhaustive recount by enumerating the grid and counting projective roots
// directly. Workers stripe the a-axis; the merged table is independent of the
// worker count. Guarded by the pair budget below.
CensusTable observed_counts(const FieldCtx& F, unsigned m, CensusVariant variant,
                            unsigned jobs = 1);

// Number of monic indecomposable additive polynomials of skew degree n over
// F_q relative to F_r: (q^n - 1)/(r^n - 1) times the number of monic
// irreducible degree-n polynomials over F_r.
u64 indecomposable_count(u64 q, u64 r, unsigned n);

// Predicted number of i-collisions, i in {2, r+1}, arising from the shifted
// product families of the construct module, keyed by i.
std::map<u64, u64> predicted_family_counts(const FieldCtx& F);

// The unique monic original g with g o h = f, if one exists. Both inputs must
// be monic original and deg h must divide deg f.
std::optional<DensePoly> decompose_given_h(const FieldCtx& F, const DensePoly& f,
                                           const DensePoly& h);

// --- exhaustive census of general compositions -------------------------------

enum class CollisionKind { frobenius, constructed_family, unexplained };
const char* kind_name(CollisionKind k);

// One composite f together with every way of writing it as g o h with both
// components monic original of degree p. pairs is sorted by h (which
// determines g); k is the common second degree of the components, absent for
// Frobenius classes where the components are p-th powers half the time.
struct CollisionClass {
    DensePoly f;
    std::vector<std::pair<DensePoly, DensePoly>> pairs;  // (g, h)
    CollisionKind kind = CollisionKind::unexplained;
    std::optional<long> k;

    bool operator==(const CollisionClass& o) const = default;
};

struct GeneralCensusReport {
    u64 p = 0, q = 0;
    std::vector<CollisionClass> classes;  // sorted by f's coefficient tuple
    u64 frobenius = 0, family = 0, unexplained = 0;

    bool operator==(const GeneralCensusReport& o) const = default;
};

// Enumerates all q^{2(p-1)} ordered pairs of monic original degree-p
// polynomials over F_q, groups the compositions, and reports every class with
// at least two members. Each class is classified as a Frobenius collision
// (zero derivative), as a shifted product family (recovered and rebuilt via
// the construct module), or as unexplained. Structural facts that hold for
// every class - a common second degree k on all components, distinct h_k
// across a class, the trace/norm relations tying h_k to the coefficients of
// f, class size at most p+1, and k = 1 or k > p/2 - are checked and violations
// reported as internal errors. Requires r = p (build the field with d0 = 1).
GeneralCensusReport general_census(const FieldCtx& F, unsigned jobs = 1);

// Pair budget for exhaustive enumerations in this module.
inline constexpr u64 kCensusPairGuard = 10'000'000;

}  // namespace orecomp
