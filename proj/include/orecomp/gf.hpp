// Finite field tower F_p <= F_r <= F_q with r = p^d0 and q = r^d.
//
// F_q is represented once and for all as F_p[t] / (modulus), modulus monic
// irreducible of degree d0*d. The intermediate field F_r is located inside
// this representation as the fixed field of the p^d0 power map; its elements
// are ordinary field elements that happen to satisfy a^r = a. An F_r-basis
// of F_q is precomputed so elements can be flattened to F_r coordinate
// vectors and back.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orecomp/errors.hpp"
#include "orecomp/fp.hpp"
#include "orecomp/rng.hpp"

namespace orecomp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Field element: exactly k = d0*d coordinates over F_p, constant term first.
struct Elt {
    std::vector<u32> c;

    bool operator==(const Elt& o) const { return c == o.c; }
    bool operator!=(const Elt& o) const { return c != o.c; }
    bool operator<(const Elt& o) const { return c < o.c; }  // coordinate order
};

class FieldCtx {
public:
    // modulus, when given, lists constant-first F_p coefficients of a monic
    // irreducible of degree d0*d; entries may be negative and are reduced.
    // When absent a modulus is generated deterministically from the seed.
    static FieldCtx make(u32 p, unsigned d0, unsigned d,
                         const std::vector<i64>* modulus = nullptr, u64 seed = 0);

    u32 p() const { return p_; }
    unsigned d0() const { return d0_; }
    unsigned d() const { return d_; }
    unsigned k() const { return k_; }  // [F_q : F_p]
    u64 r() const { return r_; }
    u64 q() const { return q_; }
    const fp::Poly& modulus() const { return modulus_; }

    Elt zero() const { return Elt{std::vector<u32>(k_, 0)}; }
    Elt one() const;
    Elt t() const;  // the class of t, a generator of F_q as an F_p-algebra
    Elt from_int(i64 v) const;

    bool is_zero(const Elt& a) const;
    bool is_scalar(const Elt& a) const;  // lies in the prime field

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, u64 e) const;

    // a^(r^j); j may be negative, the map has order dividing d.
    Elt frob(const Elt& a, long j) const;
    // a^(p^j); order divides k.
    Elt frob_p(const Elt& a, long j) const;

    // Membership in F_{r^e}, e dividing d.
    bool in_subfield(const Elt& a, unsigned e = 1) const;

    // Coordinates of a over the precomputed F_r-basis of F_q: d elements of
    // F_r, and the inverse reconstruction.
    std::vector<Elt> r_coords(const Elt& a) const;
    Elt from_r_coords(const std::vector<Elt>& coords) const;
    const std::vector<Elt>& r_basis() const { return r_basis_; }

    // Deterministic enumeration: element_at(i) runs over all of F_q as i runs
    // over [0, q), digits of i base p filling coordinates constant-first.
    Elt element_at(u64 index) const;
    u64 element_index(const Elt& a) const;

    // All elements of F_{r^e} (e dividing d), deterministic order. Guarded.
    std::vector<Elt> subfield_elements(unsigned e) const;
    // F_p-basis of F_{r^e} inside F_q.
    std::vector<Elt> subfield_basis(unsigned e) const;

    Elt random_element(Rng& rng) const;

    void check_element(const Elt& a) const;

private:
    u32 p_ = 0;
    unsigned d0_ = 0, d_ = 0, k_ = 0;
    u64 r_ = 0, q_ = 0;
    fp::Poly modulus_;
    std::vector<fp::Poly> red_;        // t^(k+i) mod modulus, i in [0, k-1)
    std::vector<fp::Mat> frob_r_pow_;  // matrix of x -> x^(r^j), j in [0, d)
    fp::Mat frob_p_;                   // matrix of x -> x^p
    std::vector<Elt> r_subfield_basis_;  // F_p-basis of F_r, d0 elements
    std::vector<Elt> r_basis_;           // F_r-basis of F_q, d elements
    fp::Mat r_coords_inv_;  // inverse of the k x k change of basis matrix

    void build_tables(u64 seed);
};

// Guard for "enumerate this many things" requests.
inline constexpr u64 kEnumerationGuard = u64(1) << 21;

// --- text formats -----------------------------------------------------------
//
// Elements print as the bare integer when they lie in the prime field and as
// comma separated F_p coordinates (constant first) otherwise. parse_elt also
// accepts negative integers and an optional surrounding (...).
std::string elt_to_string(const FieldCtx& F, const Elt& a);
Elt parse_elt(const FieldCtx& F, const std::string& text);

// Field spec strings look like "p=3,d0=1,d=3,mod=1,-1,0,1" with mod optional
// (a seed key may replace it: "p=2,d0=1,d=4,seed=7").
FieldCtx parse_field_spec(const std::string& spec);
std::string field_spec_string(const FieldCtx& F);

}  // namespace orecomp
