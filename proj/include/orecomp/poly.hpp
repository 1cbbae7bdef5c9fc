// Dense polynomials over F_q, including factorization into irreducibles over
// any intermediate field F_{r^e} of the tower. Coefficients are stored
// constant-first with trailing zeros trimmed; zero is the empty vector.
//
// Factoring "over F_{r^e}" operates on polynomials whose coefficients lie in
// the subfield; all arithmetic still runs in the ambient F_q representation,
// which is closed on subfield elements.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orecomp/gf.hpp"

namespace orecomp {

struct DensePoly {
    std::vector<Elt> c;

    bool operator==(const DensePoly& o) const { return c == o.c; }
    bool operator!=(const DensePoly& o) const { return c != o.c; }
    bool operator<(const DensePoly& o) const { return c < o.c; }
};

// Degrees above this refuse to materialize densely; sparse representations
// must be used instead.
inline constexpr long kDenseDegreeGuard = 1 << 20;

void poly_normalize(const FieldCtx& F, DensePoly& f);
DensePoly poly_from_coeffs(const FieldCtx& F, std::vector<Elt> coeffs);

long poly_deg(const DensePoly& f);  // -1 for zero
bool poly_is_zero(const DensePoly& f);
bool poly_is_monic(const FieldCtx& F, const DensePoly& f);
// Original: zero constant term, so the graph passes through the origin.
bool poly_is_original(const FieldCtx& F, const DensePoly& f);
Elt poly_coeff(const FieldCtx& F, const DensePoly& f, long i);
Elt poly_lead(const FieldCtx& F, const DensePoly& f);

// x^n and c*x^n helpers.
DensePoly poly_monomial(const FieldCtx& F, long n, const Elt& c);
DensePoly poly_x(const FieldCtx& F);
DensePoly poly_const(const FieldCtx& F, const Elt& c);

DensePoly poly_add(const FieldCtx& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_sub(const FieldCtx& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_neg(const FieldCtx& F, const DensePoly& a);
DensePoly poly_scale(const FieldCtx& F, const Elt& c, const DensePoly& a);
DensePoly poly_mul(const FieldCtx& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_pow(const FieldCtx& F, DensePoly base, u64 e);
std::pair<DensePoly, DensePoly> poly_divmod(const FieldCtx& F, const DensePoly& a,
                                            const DensePoly& b);
DensePoly poly_mod(const FieldCtx& F, const DensePoly& a, const DensePoly& b);
DensePoly poly_monic(const FieldCtx& F, const DensePoly& f);
DensePoly poly_gcd(const FieldCtx& F, DensePoly a, DensePoly b);  // monic result
DensePoly poly_derivative(const FieldCtx& F, const DensePoly& f);

Elt poly_eval(const FieldCtx& F, const DensePoly& f, const Elt& x);
// g(h), cost O(deg g * deg(g∘h)) coefficient operations.
DensePoly poly_compose(const FieldCtx& F, const DensePoly& g, const DensePoly& h);

// Second-highest exponent with nonzero coefficient; empty when f has at most
// one term (the sentinel stands for negative infinity and never collides
// with a real exponent).
std::optional<long> second_degree(const FieldCtx& F, const DensePoly& f);

DensePoly poly_mulmod(const FieldCtx& F, const DensePoly& a, const DensePoly& b,
                      const DensePoly& m);
DensePoly poly_powmod(const FieldCtx& F, DensePoly base, u64 e, const DensePoly& m);

// --- factorization over F_{r^e} ---------------------------------------------

// Monic irreducible factors with multiplicities, sorted by degree then by
// coefficient tuple. Requires every coefficient of f in F_{r^e}, e | d.
std::vector<std::pair<DensePoly, unsigned>> poly_factor(const FieldCtx& F, const DensePoly& f,
                                                        unsigned e, u64 seed = 0x0f5eed);
bool poly_is_irreducible(const FieldCtx& F, const DensePoly& f, unsigned e);

// Distinct roots in F_q, sorted by coordinate order, each verified by
// evaluation.
std::vector<Elt> roots_in_field(const FieldCtx& F, const DensePoly& f);

// Uniformly random monic polynomial of exact degree n with coefficients in
// F_{r^e}, and rejection sampling of an irreducible one.
DensePoly random_monic(const FieldCtx& F, long n, unsigned e, Rng& rng);
DensePoly random_irreducible(const FieldCtx& F, long n, unsigned e, u64 seed);

// Flat coordinate key, usable as a deterministic map key.
std::vector<u32> poly_key(const FieldCtx& F, const DensePoly& f);

// --- text format -------------------------------------------------------------
//
// Sparse form "9:1;6:1;5:2;3:1;2:1;1:1" (terms deg:element, descending) is
// canonical; the dense comma form "c0,c1,..." is accepted on input, with
// parentheses around multi-coordinate elements. Zero prints as "0".
std::string poly_to_string(const FieldCtx& F, const DensePoly& f);
DensePoly parse_poly(const FieldCtx& F, const std::string& text);

// Splits on sep at paren depth zero; shared by the polynomial parsers.
std::vector<std::string> split_top_level(const std::string& s, char sep);

}  // namespace orecomp
