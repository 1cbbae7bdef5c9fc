// Structure of the q-power map on the root space of an additive polynomial:
// rational Jordan form, invariant line counts, fast decomposition counting at
// composition degree two, projective root counts, and the partition-generated
// set of achievable decomposition counts.
#pragma once

#include "orecomp/ore.hpp"

namespace orecomp {

// One eigenfactor (monic irreducible over F_r, in the variable of the center
// preimage) together with the ascending sizes of its Jordan blocks.
struct JordanBlocks {
    DensePoly factor;
    std::vector<unsigned> mults;

    bool operator==(const JordanBlocks& o) const = default;
};

// Block decomposition of the q-power map acting on the root space, as an
// F_r-linear map of dimension dim = skew degree of the input.
struct RationalJordanForm {
    std::vector<JordanBlocks> blocks;  // sorted by (factor degree, coefficients)
    long dim = 0;

    bool operator==(const RationalJordanForm& o) const = default;
};

// Jordan structure of v -> v^q on the root space of f. Requires f monic with
// nonzero linear coefficient (a full-dimensional root space). Kernel
// dimensions come from degrees of common right components against powers of
// each eigenfactor pulled back through the center; block multiplicities
// follow from the kernel filtration.
RationalJordanForm find_jordan(const FieldCtx& F, const AdditivePoly& f);

// Number of lines in the root space fixed by the q-power map: eigenfactors of
// degree one contribute (r^{k}-1)/(r-1) each, where k is their block count.
u64 invariant_line_count(const FieldCtx& F, const RationalJordanForm& jordan);

// Number of monic additive right components of composition degree one, i.e.
// monic h of shape x^r - cx dividing f on the right. Requires f monic and
// nonzero; the largest pure r-power layer is split off first, so the input
// need not be separable.
u64 right_component_count(const FieldCtx& F, const AdditivePoly& f);

// Decomposition count for skew degree exactly 2, in {0, 1, 2, r+1}. Fast
// path: classifies the minimal central multiple instead of building the full
// Jordan form. Agrees with right_component_count.
u64 collision_count_r2(const FieldCtx& F, const AdditivePoly& f);

// (r^m - 1)/(r - 1), the degree of the m-th projective polynomial. Guarded
// against overflow.
u64 phi_rm(u64 r, unsigned m);

// x^{phi_rm(r,m)} + a x + b as a dense polynomial. Refuses degrees beyond the
// dense guard.
DensePoly projective_polynomial(const FieldCtx& F, unsigned m, const Elt& a, const Elt& b);

// Number of roots in F_q of x^{phi_rm(r,m)} + a x + b, for m >= 2. Computed
// through the bijection with degree-r right components of x^{r^m} + a x^r +
// b x; when the dense polynomial is small enough, a direct root count is run
// as well and must agree.
u64 projective_root_count(const FieldCtx& F, unsigned m, const Elt& a, const Elt& b);

// Achievable decomposition counts for additive polynomials of composition
// degree m, accumulated over all smaller degrees.
struct PartitionSet {
    unsigned m = 0;
    std::vector<u64> sizes;  // sorted ascending

    bool operator==(const PartitionSet& o) const = default;
};

// The recursion: each integer partition (p_1, ..., p_l) of k <= m contributes
// sum_j phi_rm(r, p_j), seeded with 0. The cardinality equals the partial sum
// of the partition numbers p(0) + ... + p(m) whenever m <= r; for m > r,
// contributions of different partitions can coincide and the set is smaller.
PartitionSet possible_collision_sizes(u64 r, unsigned m);

}  // namespace orecomp
