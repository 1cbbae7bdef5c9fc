#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "orecomp/frobenius.hpp"
#include "orecomp/linalg.hpp"
#include "test_helpers.hpp"

using namespace orecomp;
using testutil::f27;

namespace {

AdditivePoly trinomial(const FieldCtx& F, unsigned m, const Elt& a, const Elt& b) {
    AdditivePoly f;
    f.a.assign(size_t(m) + 1, F.zero());
    f.a[0] = b;
    f.a[1] = a;
    f.a[size_t(m)] = F.one();
    skew_normalize(F, f);
    return f;
}

// Jordan block data recomputed from the explicit matrix of the q-power map in
// a splitting extension: factor the matrix minimal polynomial over F_r, then
// read block counts from kernel dimensions of eigenfactor powers. Fully
// independent of the gcrc-based route.
struct MatrixBlocks {
    DensePoly factor;  // over the extension, coefficients in F_r
    std::vector<unsigned> mults;
};

std::vector<MatrixBlocks> jordan_via_matrix(const FieldCtx& E, size_t n,
                                            const std::vector<std::vector<Elt>>& s) {
    SpanTracker tracker(E, n * n);
    auto power = testutil::mat_identity_e(E, n);
    DensePoly minpoly;
    for (unsigned j = 0;; ++j) {
        require(j <= n, "matrix minimal polynomial degree is bounded by the dimension");
        std::vector<Elt> flat;
        for (auto& row : power) flat.insert(flat.end(), row.begin(), row.end());
        if (auto combo = tracker.add(flat)) {
            std::vector<Elt> coeffs;
            for (auto& c : *combo) coeffs.push_back(E.neg(c));
            coeffs.push_back(E.one());
            minpoly = poly_from_coeffs(E, std::move(coeffs));
            break;
        }
        power = testutil::mat_mul_e(E, power, s);
    }

    std::vector<MatrixBlocks> out;
    for (auto& [u, omega] : poly_factor(E, minpoly, 1)) {
        size_t deg_s = size_t(poly_deg(u));
        std::vector<size_t> xi(omega + 2, 0);
        DensePoly upow = poly_const(E, E.one());
        for (unsigned j = 1; j <= omega; ++j) {
            upow = poly_mul(E, upow, u);
            auto m = testutil::mat_poly_eval_e(E, E, E.zero(), upow, s);
            size_t dim_ker = n - testutil::mat_rank_e(E, m);
            require(dim_ker % deg_s == 0, "kernel dimension divisible by factor degree");
            xi[j] = dim_ker / deg_s;
        }
        xi[omega + 1] = xi[omega];
        MatrixBlocks mb{u, {}};
        for (unsigned j = 1; j <= omega; ++j) {
            long count = long(xi[j] - xi[j - 1]) - long(xi[j + 1] - xi[j]);
            require(count >= 0, "filtration concavity");
            for (long c = 0; c < count; ++c) mb.mults.push_back(j);
        }
        out.push_back(std::move(mb));
    }
    return out;
}

}  // namespace

TEST_CASE("Jordan structure of classical fixed field kernels") {
    auto F4 = FieldCtx::make(2, 1, 2, nullptr, 3);
    // x^q - x: the q-power map is the identity on a d-dimensional space
    AdditivePoly xq_x = skew_sub(F4, skew_monomial(F4, 2, F4.one()), skew_x(F4));
    RationalJordanForm j1 = find_jordan(F4, xq_x);
    CHECK(j1.dim == 2);
    REQUIRE(j1.blocks.size() == 1);
    CHECK(poly_to_string(F4, j1.blocks[0].factor) == "1:1;0:1");  // y - 1
    CHECK(j1.blocks[0].mults == std::vector<unsigned>{1, 1});
    CHECK(invariant_line_count(F4, j1) == 3);
    CHECK(right_component_count(F4, xq_x) == 3);
    CHECK(testutil::brute_right_components(F4, xq_x) == 3);

    // x^{q^2} - x over F_4: minimal polynomial (y-1)^2, two blocks of size 2
    AdditivePoly xq2_x = skew_sub(F4, skew_monomial(F4, 4, F4.one()), skew_x(F4));
    RationalJordanForm j2 = find_jordan(F4, xq2_x);
    CHECK(j2.dim == 4);
    REQUIRE(j2.blocks.size() == 1);
    CHECK(j2.blocks[0].mults == std::vector<unsigned>{2, 2});
    CHECK(invariant_line_count(F4, j2) == 3);
    CHECK(testutil::brute_right_components(F4, xq2_x) == 3);

    // x^{q^2} - x over F_9: y^2 - 1 splits, two eigenvalues with two blocks each
    auto F9 = FieldCtx::make(3, 1, 2, nullptr, 3);
    AdditivePoly xq2_x9 = skew_sub(F9, skew_monomial(F9, 4, F9.one()), skew_x(F9));
    RationalJordanForm j3 = find_jordan(F9, xq2_x9);
    CHECK(j3.dim == 4);
    REQUIRE(j3.blocks.size() == 2);
    CHECK(j3.blocks[0].mults == std::vector<unsigned>{1, 1});
    CHECK(j3.blocks[1].mults == std::vector<unsigned>{1, 1});
    CHECK(invariant_line_count(F9, j3) == 8);
    CHECK(right_component_count(F9, xq2_x9) == 8);
    CHECK(testutil::brute_right_components(F9, xq2_x9) == 8);

    // rejects: non-monic, zero linear coefficient, zero polynomial
    CHECK_THROWS_AS((void)find_jordan(F4, skew_scale(F4, F4.t(), xq_x)), DomainError);
    CHECK_THROWS_AS((void)find_jordan(F4, skew_monomial(F4, 1, F4.one())), DomainError);
    CHECK_THROWS_AS((void)find_jordan(F4, AdditivePoly{}), DomainError);
    // skew degree 0 has a trivial root space
    CHECK(find_jordan(F4, skew_x(F4)).blocks.empty());
    CHECK(invariant_line_count(F4, find_jordan(F4, skew_x(F4))) == 0);
}

TEST_CASE("Jordan block structure agrees with the explicit matrix route") {
    std::vector<FieldCtx> fields;
    fields.push_back(FieldCtx::make(2, 1, 2, nullptr, 3));
    fields.push_back(FieldCtx::make(3, 1, 2, nullptr, 3));
    fields.push_back(FieldCtx::make(2, 1, 3, nullptr, 5));

    Rng rng(0x7d);
    int verified = 0;
    for (auto& F : fields) {
        for (int trial = 0; trial < 25; ++trial) {
            long n = 1 + long(rng.below(3));
            AdditivePoly f = random_additive(F, n, rng);
            f.a[0] = F.one();
            RationalJordanForm jordan = find_jordan(F, f);
            CHECK(jordan.dim == n);

            auto action = testutil::splitting_frobenius(F, f, 6, 0x1d + trial);
            if (!action) continue;
            const FieldCtx& E = action->E;
            auto expected = jordan_via_matrix(E, size_t(n), action->S);

            REQUIRE(jordan.blocks.size() == expected.size());
            int matched = 0;
            for (auto& jb : jordan.blocks) {
                DensePoly lifted;
                for (auto& c : jb.factor.c)
                    lifted.c.push_back(testutil::embed_elt(F, E, action->theta, c));
                poly_normalize(E, lifted);
                for (auto& mb : expected)
                    if (mb.factor == lifted && mb.mults == jb.mults) ++matched;
            }
            CHECK(matched == int(jordan.blocks.size()));
            ++verified;
        }
    }
    CHECK(verified >= 50);
}

TEST_CASE("line counts for hand built block structures") {
    auto F9 = FieldCtx::make(3, 1, 2, nullptr, 3);  // r = 3
    auto lin = [&](i64 lam) {
        return poly_from_coeffs(F9, {F9.from_int(-lam), F9.one()});
    };
    auto form = [&](std::vector<std::pair<DensePoly, std::vector<unsigned>>> bs) {
        RationalJordanForm j;
        for (auto& [f, m] : bs) {
            j.blocks.push_back({f, m});
            for (unsigned e : m) j.dim += long(poly_deg(f)) * e;
        }
        return j;
    };

    // single eigenvalue in dimension three: diagonal, one 2-chain, full chain
    CHECK(invariant_line_count(F9, form({{lin(1), {1, 1, 1}}})) == 13);  // r^2+r+1
    CHECK(invariant_line_count(F9, form({{lin(1), {1, 2}}})) == 4);      // r+1
    CHECK(invariant_line_count(F9, form({{lin(1), {3}}})) == 1);

    // several eigenvalues and the irreducible case
    CHECK(invariant_line_count(F9, form({{lin(1), {2}}, {lin(2), {1}}})) == 2);
    CHECK(invariant_line_count(F9, form({{lin(0), {1}}, {lin(1), {1}}, {lin(2), {1}}})) == 3);
    CHECK(invariant_line_count(F9, form({{poly_monomial(F9, 3, F9.one()), {1}}})) == 0);
    CHECK(invariant_line_count(F9, RationalJordanForm{}) == 0);
}

TEST_CASE("decomposition counts at skew degree two: all routes agree exhaustively") {
    std::vector<FieldCtx> fields;
    fields.push_back(FieldCtx::make(2, 1, 1, nullptr, 3));
    fields.push_back(FieldCtx::make(3, 1, 1, nullptr, 3));
    fields.push_back(FieldCtx::make(2, 1, 2, nullptr, 3));
    fields.push_back(FieldCtx::make(3, 1, 2, nullptr, 3));

    for (auto& F : fields) {
        std::set<u64> seen;
        for (u64 ai = 0; ai < F.q(); ++ai)
            for (u64 bi = 0; bi < F.q(); ++bi) {
                AdditivePoly f = trinomial(F, 2, F.element_at(ai), F.element_at(bi));
                u64 fast = collision_count_r2(F, f);
                CHECK(fast == right_component_count(F, f));
                CHECK(fast == testutil::brute_right_components(F, f));
                CHECK((fast == 0 || fast == 1 || fast == 2 || fast == F.r() + 1));
                seen.insert(fast);
            }
        // the maximal case needs a proper extension of F_r to occur
        CHECK(seen.count(F.r() + 1) == (F.q() > F.r() ? 1 : 0));
    }

    auto& F = fields[3];
    CHECK_THROWS_AS((void)collision_count_r2(F, skew_x(F)), DomainError);
    CHECK_THROWS_AS((void)collision_count_r2(F, skew_monomial(F, 3, F.one())), DomainError);
    // scaling does not change the count
    AdditivePoly f = trinomial(F, 2, F.one(), F.t());
    CHECK(collision_count_r2(F, skew_scale(F, F.t(), f)) == collision_count_r2(F, f));
}

TEST_CASE("right component counts: known values and random brute force") {
    auto F4 = FieldCtx::make(2, 1, 2, nullptr, 3);
    // pure power has the single component x^r; adding a middle term gives two
    CHECK(right_component_count(F4, skew_monomial(F4, 2, F4.one())) == 1);
    for (u64 ai = 1; ai < F4.q(); ++ai) {
        AdditivePoly f = trinomial(F4, 2, F4.element_at(ai), F4.zero());
        CHECK(right_component_count(F4, f) == 2);
    }

    // distribution over all 16 trinomials at q=4, r=2: {0: 5, 1: 7, 2: 3, 3: 1}
    std::map<u64, unsigned> dist;
    for (u64 ai = 0; ai < F4.q(); ++ai)
        for (u64 bi = 0; bi < F4.q(); ++bi)
            ++dist[right_component_count(F4, trinomial(F4, 2, F4.element_at(ai), F4.element_at(bi)))];
    CHECK(dist == std::map<u64, unsigned>{{0, 5}, {1, 7}, {2, 3}, {3, 1}});

    // random higher degrees against exhaustive division, mixing in r-power layers
    std::vector<FieldCtx> fields;
    fields.push_back(F4);
    fields.push_back(FieldCtx::make(2, 1, 3, nullptr, 5));
    fields.push_back(FieldCtx::make(3, 1, 2, nullptr, 3));
    Rng rng(0x3f);
    int checked = 0;
    for (auto& F : fields) {
        for (int trial = 0; trial < 60; ++trial) {
            AdditivePoly f = random_additive(F, 1 + long(rng.below(3)), rng);
            if (rng.below(3) == 0) f.a[0] = F.zero();
            skew_normalize(F, f);
            if (skew_is_zero(f) || !skew_is_monic(F, f)) continue;
            CHECK(right_component_count(F, f) == testutil::brute_right_components(F, f));
            ++checked;
        }
    }
    CHECK(checked >= 150);

    CHECK_THROWS_AS((void)right_component_count(F4, AdditivePoly{}), DomainError);
    AdditivePoly scaled = skew_scale(F4, F4.t(), skew_x(F4));
    CHECK_THROWS_AS((void)right_component_count(F4, scaled), DomainError);
}

TEST_CASE("projective root counts through the component correspondence") {
    std::vector<FieldCtx> fields;
    fields.push_back(FieldCtx::make(2, 1, 1, nullptr, 3));
    fields.push_back(FieldCtx::make(3, 1, 1, nullptr, 3));
    fields.push_back(FieldCtx::make(2, 1, 2, nullptr, 3));
    fields.push_back(FieldCtx::make(2, 1, 3, nullptr, 5));
    fields.push_back(FieldCtx::make(3, 1, 2, nullptr, 3));

    for (auto& F : fields) {
        for (unsigned m : {2u, 3u}) {
            u64 phi = phi_rm(F.r(), m);
            for (u64 ai = 0; ai < F.q(); ++ai)
                for (u64 bi = 0; bi < F.q(); ++bi) {
                    Elt a = F.element_at(ai), b = F.element_at(bi);
                    // direct oracle: evaluate at every field element
                    u64 direct = 0;
                    for (u64 vi = 0; vi < F.q(); ++vi) {
                        Elt v = F.element_at(vi);
                        Elt val = F.add(F.add(F.pow(v, phi), F.mul(a, v)), b);
                        if (F.is_zero(val)) ++direct;
                    }
                    CHECK(projective_root_count(F, m, a, b) == direct);
                }
        }
    }

    // named example: over F_27 with a = -1, b = 1 the degree r+1 = 4 form has
    // exactly four roots
    auto F27 = f27();
    CHECK(projective_root_count(F27, 2, F27.from_int(-1), F27.one()) == 4);
    // degenerate pair (0,0) leaves only the root at the origin
    CHECK(projective_root_count(F27, 2, F27.zero(), F27.zero()) == 1);

    auto& F4 = fields[2];
    CHECK(poly_to_string(F4, projective_polynomial(F4, 2, F4.one(), F4.one())) == "3:1;1:1;0:1");
    CHECK_THROWS_AS((void)projective_root_count(F4, 1, F4.one(), F4.one()), DomainError);
    CHECK_THROWS_AS((void)projective_polynomial(F4, 64, F4.one(), F4.one()), GuardError);
    CHECK(phi_rm(3, 3) == 13);
    CHECK(phi_rm(2, 1) == 1);
    CHECK(phi_rm(5, 0) == 0);
    CHECK_THROWS_AS((void)phi_rm(1, 2), DomainError);
    CHECK_THROWS_AS((void)phi_rm(2, 63), GuardError);
}

TEST_CASE("achievable decomposition count sets from partitions") {
    CHECK(possible_collision_sizes(2, 0).sizes == std::vector<u64>{0});
    CHECK(possible_collision_sizes(7, 1).sizes == std::vector<u64>{0, 1});
    CHECK(possible_collision_sizes(2, 2).sizes == std::vector<u64>{0, 1, 2, 3});
    CHECK(possible_collision_sizes(4, 2).sizes == std::vector<u64>{0, 1, 2, 5});
    CHECK(possible_collision_sizes(3, 3).sizes == std::vector<u64>{0, 1, 2, 3, 4, 5, 13});

    // at r = 2, m = 3 two partitions produce the same size, so the set is
    // smaller than the partition count; the cardinality identity holds only
    // for m <= r
    CHECK(possible_collision_sizes(2, 3).sizes == std::vector<u64>{0, 1, 2, 3, 4, 7});

    // nesting and cardinality in the proven range
    for (u64 r : {2u, 3u, 5u, 9u}) {
        u64 expected_card = 1;  // p(0)
        u64 pk[7] = {1, 1, 2, 3, 5, 7, 11};
        for (unsigned m = 1; m <= std::min<u64>(r, 6); ++m) {
            auto prev = possible_collision_sizes(r, m - 1).sizes;
            auto cur = possible_collision_sizes(r, m).sizes;
            CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
            expected_card += pk[m];
            CHECK(cur.size() == expected_card);
        }
    }

    CHECK_THROWS_AS((void)possible_collision_sizes(1, 2), DomainError);
    CHECK_THROWS_AS((void)possible_collision_sizes(2, 65), GuardError);
}
