// Additive (linearized) polynomials over F_q relative to F_r: finite sums
// sum a_i x^{r^i}, stored by their skew coefficient vector. Under composition
// they form a twisted polynomial ring; composition twists coefficients by
// Frobenius powers and is not commutative.
//
// Degrees here are skew degrees: skew degree i corresponds to ordinary degree
// r^i. All algorithms below work on the coefficient vectors only, so inputs
// of astronomical ordinary degree stay cheap.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orecomp/poly.hpp"

namespace orecomp {

struct AdditivePoly {
    std::vector<Elt> a;  // a[i] is the coefficient of x^{r^i}, trailing zeros trimmed

    bool operator==(const AdditivePoly& o) const { return a == o.a; }
    bool operator!=(const AdditivePoly& o) const { return a != o.a; }
    bool operator<(const AdditivePoly& o) const { return a < o.a; }
};

void skew_normalize(const FieldCtx& F, AdditivePoly& f);
long skew_deg(const AdditivePoly& f);  // -1 for zero
bool skew_is_zero(const AdditivePoly& f);
bool skew_is_monic(const FieldCtx& F, const AdditivePoly& f);
Elt skew_coeff(const FieldCtx& F, const AdditivePoly& f, long i);

AdditivePoly skew_x(const FieldCtx& F);                       // identity for composition
AdditivePoly skew_monomial(const FieldCtx& F, long i, const Elt& c);  // c x^{r^i}

AdditivePoly skew_add(const FieldCtx& F, const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly skew_sub(const FieldCtx& F, const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly skew_scale(const FieldCtx& F, const Elt& c, const AdditivePoly& a);
AdditivePoly skew_monic(const FieldCtx& F, const AdditivePoly& f);

// g(h(x)) on skew coefficients: the coefficient of x^{r^k} is
// sum_{i+j=k} g_i * h_j^{r^i}.
AdditivePoly skew_compose(const FieldCtx& F, const AdditivePoly& g, const AdditivePoly& h);

// Coefficientwise Frobenius twist: a_i -> a_i^{r^j}. Satisfies
// x^{r^j} o f = twist(f, j) o x^{r^j}.
AdditivePoly skew_twist(const FieldCtx& F, const AdditivePoly& f, long j);

// Evaluation sum a_i v^{r^i}; an F_r-linear map in v.
Elt skew_eval(const FieldCtx& F, const AdditivePoly& f, const Elt& v);

// f = q o h + rem with skew_deg(rem) < skew_deg(h).
std::pair<AdditivePoly, AdditivePoly> skew_right_divmod(const FieldCtx& F, const AdditivePoly& f,
                                                        const AdditivePoly& h);
AdditivePoly skew_right_rem(const FieldCtx& F, const AdditivePoly& f, const AdditivePoly& h);
// f = g o q + rem with skew_deg(rem) < skew_deg(g); uses inverse Frobenius.
std::pair<AdditivePoly, AdditivePoly> skew_left_divmod(const FieldCtx& F, const AdditivePoly& f,
                                                       const AdditivePoly& g);

// Greatest common right component (monic), via the right Euclidean algorithm.
AdditivePoly gcrc(const FieldCtx& F, AdditivePoly f, AdditivePoly g);

// Least common left composition multiple (monic): the lowest skew degree L
// with L = A o f = B o g. Found as the first linear dependence among the
// right remainders of x^{r^j} o f modulo g.
AdditivePoly lclc(const FieldCtx& F, const AdditivePoly& f, const AdditivePoly& g);

// Minimal central left composition multiple f* of f: the monic central
// polynomial of least degree with f* = A o f. Central polynomials are the
// F_r-combinations of x^{q^i}; the search runs over F_r-linear dependencies
// of the remainders of x^{q^i} modulo f.
AdditivePoly mclc(const FieldCtx& F, const AdditivePoly& f);

bool skew_is_central(const FieldCtx& F, const AdditivePoly& f);

// Ring isomorphism between the center and F_r[y]: sum c_i x^{q^i} <-> sum c_i y^i.
// tau rejects non central inputs; tau_inv rejects coefficients outside F_r.
DensePoly tau(const FieldCtx& F, const AdditivePoly& f);
AdditivePoly tau_inv(const FieldCtx& F, const DensePoly& c);

// f = x^{r^t} o h with h having a nonzero linear term (separable part).
// Returns t and h; t = 0 exactly when f itself is separable.
std::pair<unsigned, AdditivePoly> squarefree_split(const FieldCtx& F, const AdditivePoly& f);

// Conversions to and from the dense representation (guarded: the dense image
// has degree r^skew_deg).
AdditivePoly to_additive(const FieldCtx& F, const DensePoly& f);
DensePoly to_dense(const FieldCtx& F, const AdditivePoly& f);

// Text format "add:a0;a1;...;an" (constant-first skew coefficients, elements
// in the field element format). Input also accepts commas as separators when
// unambiguous. Zero is "add:0".
std::string skew_to_string(const FieldCtx& F, const AdditivePoly& f);
AdditivePoly parse_additive(const FieldCtx& F, const std::string& text);

AdditivePoly random_additive(const FieldCtx& F, long n, Rng& rng, bool monic = true);

}  // namespace orecomp
