#include "orecomp/frobenius.hpp"

#include <map>
#include <set>

namespace orecomp {

RationalJordanForm find_jordan(const FieldCtx& F, const AdditivePoly& f) {
    long n = skew_deg(f);
    if (n < 0) throw DomainError("find_jordan: zero polynomial has no root space");
    if (!skew_is_monic(F, f)) throw DomainError("find_jordan: input must be monic");
    if (n >= 1 && F.is_zero(f.a[0]))
        throw DomainError("find_jordan: zero linear coefficient, split off the r-power layer first");

    RationalJordanForm out;
    out.dim = n;
    if (n == 0) return out;  // trivial root space

    DensePoly center_image = tau(F, mclc(F, f));
    long total = 0;
    for (auto& [u, omega] : poly_factor(F, center_image, 1)) {
        long s = poly_deg(u);
        // xi[j] = dim ker u(S)^j / s, read off gcrc degrees; xi saturates at
        // j = omega because the minimal polynomial caps the block size
        std::vector<long> xi(omega + 2, 0);
        DensePoly upow = poly_const(F, F.one());
        for (unsigned j = 1; j <= omega; ++j) {
            upow = poly_mul(F, upow, u);
            long d = skew_deg(gcrc(F, tau_inv(F, upow), f));
            require(d % s == 0, "kernel dimension is a multiple of the eigenfactor degree");
            xi[j] = d / s;
        }
        xi[omega + 1] = xi[omega];

        // nu_j = xi_j - xi_{j-1} counts blocks of size >= j, so blocks of
        // size exactly j number nu_j - nu_{j+1}
        JordanBlocks jb;
        jb.factor = u;
        for (unsigned j = 1; j <= omega; ++j) {
            long count = (xi[j] - xi[j - 1]) - (xi[j + 1] - xi[j]);
            require(count >= 0, "kernel filtration dimensions are concave");
            for (long c = 0; c < count; ++c) jb.mults.push_back(j);
        }
        require(!jb.mults.empty() && jb.mults.back() == omega,
                "largest block size equals the minimal polynomial multiplicity");
        for (unsigned m : jb.mults) total += s * long(m);
        out.blocks.push_back(std::move(jb));
    }
    require(total == n, "block dimensions sum to the root space dimension");
    return out;
}

u64 invariant_line_count(const FieldCtx& F, const RationalJordanForm& jordan) {
    u64 count = 0;
    for (auto& b : jordan.blocks) {
        if (poly_deg(b.factor) != 1) continue;
        // eigenspace of dimension k over F_r holds (r^k - 1)/(r - 1) lines
        u64 rk = 1;
        for (size_t i = 0; i < b.mults.size(); ++i) {
            require(rk <= (u64(1) << 62) / F.r(), "line count overflows");
            rk *= F.r();
        }
        count += (rk - 1) / (F.r() - 1);
    }
    return count;
}

u64 right_component_count(const FieldCtx& F, const AdditivePoly& f) {
    if (skew_is_zero(f)) throw DomainError("right_component_count: zero polynomial");
    if (!skew_is_monic(F, f)) throw DomainError("right_component_count: input must be monic");
    auto [t, core] = squarefree_split(F, f);
    u64 count = t >= 1 ? 1 : 0;  // x^r itself divides exactly when a pure layer exists
    if (skew_deg(core) >= 1) count += invariant_line_count(F, find_jordan(F, core));
    return count;
}

u64 collision_count_r2(const FieldCtx& F, const AdditivePoly& f0) {
    if (skew_deg(f0) != 2) throw DomainError("collision_count_r2: skew degree must be exactly 2");
    AdditivePoly f = skew_monic(F, f0);

    if (F.is_zero(f.a[0]))  // derivative vanishes: x^{r^2} alone is a perfect power
        return F.is_zero(f.a[1]) ? 1 : 2;

    DensePoly c = tau(F, mclc(F, f));
    if (poly_deg(c) == 1) return F.r() + 1;  // scalar action fixes every line
    require(poly_deg(c) == 2, "minimal central multiple degree is bounded by the dimension");
    auto factors = poly_factor(F, c, 1);
    if (factors.size() == 2) return 2;           // two distinct eigenvalues
    return factors[0].second == 2 ? 1 : 0;       // repeated eigenvalue vs irreducible
}

u64 phi_rm(u64 r, unsigned m) {
    if (r < 2) throw DomainError("phi_rm: r must be at least 2");
    u64 acc = 0;
    for (unsigned i = 0; i < m; ++i) {
        if (acc > ((u64(1) << 62) - 1) / r) throw GuardError("phi_rm: value exceeds the guard");
        acc = acc * r + 1;
    }
    return acc;
}

DensePoly projective_polynomial(const FieldCtx& F, unsigned m, const Elt& a, const Elt& b) {
    if (m < 2) throw DomainError("projective_polynomial: m must be at least 2");
    u64 phi = phi_rm(F.r(), m);
    if (phi > u64(kDenseDegreeGuard))
        throw GuardError("projective_polynomial: degree exceeds the dense guard");
    std::vector<Elt> c(size_t(phi) + 1, F.zero());
    c[0] = b;
    c[1] = a;
    c[size_t(phi)] = F.one();
    return poly_from_coeffs(F, std::move(c));
}

u64 projective_root_count(const FieldCtx& F, unsigned m, const Elt& a, const Elt& b) {
    if (m < 2) throw DomainError("projective_root_count: m must be at least 2");
    AdditivePoly f;
    f.a.assign(size_t(m) + 1, F.zero());
    f.a[0] = b;
    f.a[1] = a;
    f.a[size_t(m)] = F.one();
    skew_normalize(F, f);
    u64 count = right_component_count(F, f);

    // dual route on small instances: the dense root count must agree
    if (phi_rm(F.r(), m) <= 512 && F.q() <= (u64(1) << 12)) {
        u64 direct = roots_in_field(F, projective_polynomial(F, m, a, b)).size();
        require(direct == count, "component count matches the projective root count");
    }
    return count;
}

namespace {

// sum of phi_rm over the parts of every partition of k, appended to sizes
void partition_sums(u64 r, unsigned remaining, unsigned max_part, u64 acc,
                    std::set<u64>& sizes, u64& partition_count) {
    if (remaining == 0) {
        sizes.insert(acc);
        ++partition_count;
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
        partition_sums(r, remaining - part, part, acc + phi_rm(r, part), sizes, partition_count);
}

}  // namespace

PartitionSet possible_collision_sizes(u64 r, unsigned m) {
    if (r < 2) throw DomainError("possible_collision_sizes: r must be at least 2");
    if (m > 64) throw GuardError("possible_collision_sizes: m exceeds the guard");
    std::set<u64> sizes{0};
    u64 partition_total = 1;  // p(0)
    for (unsigned k = 1; k <= m; ++k) {
        u64 pk = 0;
        partition_sums(r, k, k, 0, sizes, pk);
        partition_total += pk;
    }
    // distinct partitions give distinct sums as long as m <= r; beyond that
    // the images may collide and the set is genuinely smaller
    if (m <= r)
        require(sizes.size() == partition_total,
                "size count equals the partial sum of partition numbers");
    PartitionSet out;
    out.m = m;
    out.sizes.assign(sizes.begin(), sizes.end());
    return out;
}

}  // namespace orecomp
