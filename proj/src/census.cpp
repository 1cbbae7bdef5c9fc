#include "orecomp/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "orecomp/construct.hpp"

namespace orecomp {

namespace {

u64 mul_guard(u64 a, u64 b) {
    if (b != 0 && a > UINT64_MAX / b) throw GuardError("count overflows 64 bits");
    return a * b;
}

u64 exact_div(u64 num, u64 den, const char* what) {
    if (den == 0 || num % den != 0)
        throw DomainError(std::string("inexact division in ") + what);
    return num / den;
}

u64 pow_guard(u64 base, unsigned e) {
    u64 acc = 1;
    while (e--) acc = mul_guard(acc, base);
    return acc;
}

unsigned divisor_count(u64 n) {
    unsigned count = 0;
    for (u64 d = 1; d * d <= n; ++d)
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    return count;
}

// Moebius function by trial factorization; n is tiny here.
int mobius(u64 n) {
    int mu = 1;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

const char* variant_name(CensusVariant v) {
    switch (v) {
        case CensusVariant::all: return "all";
        case CensusVariant::b_nonzero: return "b_nonzero";
        case CensusVariant::ab_nonzero: return "ab_nonzero";
    }
    return "?";
}

CensusTable predicted_counts(const FieldCtx& F) {
    const u64 q = F.q(), r = F.r();
    CensusTable t;
    t.p = F.p();
    t.r = r;
    t.q = q;
    t.m = 2;
    t.variant = CensusVariant::all;
    const u64 q2 = mul_guard(q, q);
    t.rows[0] = exact_div(mul_guard(r, q2 - 1), 2 * (r + 1), "row 0");
    t.rows[1] = exact_div(q2 - q, r, "row 1") + 1;
    t.rows[2] = exact_div(mul_guard((q - 1) * (q - 1), r - 2), 2 * (r - 1), "row 2") + (q - 1);
    t.rows[r + 1] = exact_div(mul_guard(q - 1, q - r), r * (r * r - 1), "top row");
    u64 sum = 0;
    for (const auto& [i, c] : t.rows) sum += c;
    require(sum == q2, "full-grid rows must sum to q^2");
    return t;
}

CensusTable bluher_counts(const FieldCtx& F) {
    const u64 q = F.q(), r = F.r();
    const unsigned d = F.d();
    CensusTable t;
    t.p = F.p();
    t.r = r;
    t.q = q;
    t.m = 2;
    t.variant = CensusVariant::ab_nonzero;
    const u64 qm1 = q - 1;
    if (d % 2 == 0) {
        t.rows[0] = exact_div(mul_guard(r, qm1 * qm1), 2 * (r + 1), "row 0");
        t.rows[1] = exact_div(mul_guard(q, qm1), r, "row 1");
        t.rows[2] = exact_div(mul_guard(qm1 * qm1, r - 2), 2 * (r - 1), "row 2");
        t.rows[r + 1] = exact_div(mul_guard(qm1, q - r * r), r * (r * r - 1), "top row");
    } else if (r % 2 == 1) {
        t.rows[0] = exact_div(mul_guard(q * r - 1, qm1), 2 * (r + 1), "row 0");
        t.rows[1] = exact_div(mul_guard(q, qm1), r, "row 1");
        t.rows[2] = exact_div(mul_guard(qm1, q * (r - 2) - (2 * r - 3)), 2 * (r - 1), "row 2");
        t.rows[r + 1] = exact_div(mul_guard(q - r, qm1), r * (r * r - 1), "top row");
    } else {
        t.rows[0] = exact_div(mul_guard(r, mul_guard(q, q) - 1), 2 * (r + 1), "row 0");
        t.rows[1] = exact_div(mul_guard(qm1, q - r), r, "row 1");
        t.rows[2] = exact_div(mul_guard(qm1 * qm1, r - 2), 2 * (r - 1), "row 2");
        t.rows[r + 1] = exact_div(mul_guard(q - r, qm1), r * (r * r - 1), "top row");
    }
    u64 sum = 0;
    for (const auto& [i, c] : t.rows) sum += c;
    require(sum == qm1 * qm1, "restricted rows must sum to (q-1)^2");
    return t;
}

RestrictionRelations restriction_counts(const FieldCtx& F, unsigned m) {
    if (m < 2) throw DomainError("restriction relations need m >= 2");
    RestrictionRelations rel;
    rel.m = m;
    rel.gamma_prev = std::gcd(phi_rm(F.r(), m - 1), F.q() - 1);
    rel.gamma_m = std::gcd(phi_rm(F.r(), m), F.q() - 1);
    return rel;
}

CensusTable extend_with_a_zero(const FieldCtx& F, const CensusTable& t) {
    if (t.variant != CensusVariant::ab_nonzero)
        throw DomainError("the a = 0 column extends an ab_nonzero table");
    const u64 q = F.q();
    const u64 gamma = restriction_counts(F, t.m).gamma_m;
    CensusTable out = t;
    out.variant = CensusVariant::b_nonzero;
    out.rows[0] += (q - 1) - (q - 1) / gamma;
    out.rows[gamma] += (q - 1) / gamma;
    return out;
}

CensusTable extend_with_b_zero(const FieldCtx& F, const CensusTable& t) {
    if (t.variant != CensusVariant::b_nonzero)
        throw DomainError("the b = 0 row extends a b_nonzero table");
    const u64 q = F.q();
    const u64 gamma = restriction_counts(F, t.m).gamma_prev;
    CensusTable out = t;
    out.variant = CensusVariant::all;
    out.rows[1] += (q - 1) - (q - 1) / gamma + 1;
    out.rows[gamma + 1] += (q - 1) / gamma;
    return out;
}

CensusTable observed_counts(const FieldCtx& F, unsigned m, CensusVariant variant,
                            unsigned jobs) {
    if (m < 2) throw DomainError("census needs m >= 2");
    const u64 q = F.q();
    if (mul_guard(q, q) > kCensusPairGuard) throw GuardError("census grid exceeds the pair budget");
    const u64 phi = phi_rm(F.r(), m);

    std::vector<Elt> elems(q), pows(q);
    for (u64 i = 0; i < q; ++i) {
        elems[i] = F.element_at(i);
        pows[i] = F.pow(elems[i], phi);
    }

    jobs = std::max(1u, jobs);
    if (jobs > q) jobs = unsigned(q);
    std::vector<std::map<u64, u64>> partial(jobs);

    auto worker = [&](unsigned w) {
        std::vector<u32> tally(q);
        auto& rows = partial[w];
        for (u64 ai = w; ai < q; ai += jobs) {
            std::fill(tally.begin(), tally.end(), 0);
            for (u64 vi = 0; vi < q; ++vi) {
                // root v of x^phi + a x + b pins b = -(v^phi + a v)
                Elt b = F.neg(F.add(pows[vi], F.mul(elems[ai], elems[vi])));
                ++tally[F.element_index(b)];
            }
            for (u64 bi = 0; bi < q; ++bi) {
                if (variant != CensusVariant::all && bi == 0) continue;
                if (variant == CensusVariant::ab_nonzero && ai == 0) continue;
                ++rows[tally[bi]];
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (auto& th : pool) th.join();

    CensusTable t;
    t.p = F.p();
    t.r = F.r();
    t.q = q;
    t.m = m;
    t.variant = variant;
    if (m == 2)
        for (u64 i : {u64(0), u64(1), u64(2), F.r() + 1}) t.rows[i] = 0;
    for (const auto& rows : partial)
        for (const auto& [i, c] : rows) t.rows[i] += c;
    return t;
}

u64 indecomposable_count(u64 q, u64 r, unsigned n) {
    if (r < 2 || n < 1) throw DomainError("indecomposable count needs r >= 2 and n >= 1");
    u64 check = r;
    while (check < q) check = mul_guard(check, r);
    if (check != q) throw DomainError("q must be a power of r");

    i64 acc = 0;
    for (unsigned e = 1; e <= n; ++e) {
        if (n % e != 0) continue;
        acc += i64(mobius(n / e)) * i64(pow_guard(r, e));
    }
    require(acc > 0 && acc % i64(n) == 0, "irreducible count must be a positive integer");
    const u64 irr = u64(acc) / n;

    // At n = 1 every monic x^r + ax is indecomposable, so the count is q. The
    // uniform component count below applies to separable central composites
    // only; the one with a zero eigenvalue has a single component, which skews
    // exactly the n = 1 case.
    if (n == 1) return q;

    const u64 num = pow_guard(q, n) - 1;
    const u64 den = pow_guard(r, n) - 1;
    return mul_guard(exact_div(num, den, "indecomposable count"), irr);
}

std::map<u64, u64> predicted_family_counts(const FieldCtx& F) {
    const u64 q = F.q(), r = F.r();
    const auto bl = bluher_counts(F);
    const u64 gamma = std::gcd(r + 1, q - 1);
    const u64 prefactor = 1 + mul_guard(q, divisor_count(r - 1) - 1);
    std::map<u64, u64> out;
    for (u64 i : {u64(2), r + 1}) {
        u64 base = bl.rows.at(i);
        if (gamma == i) base += (q - 1) / gamma;
        out[i] = mul_guard(prefactor, base);
    }
    return out;
}

std::optional<DensePoly> decompose_given_h(const FieldCtx& F, const DensePoly& f,
                                           const DensePoly& h) {
    if (!poly_is_monic(F, f) || !poly_is_original(F, f))
        throw DomainError("the composite must be monic original");
    if (!poly_is_monic(F, h) || !poly_is_original(F, h) || poly_deg(h) < 1)
        throw DomainError("the right component must be monic original of positive degree");
    const long e = poly_deg(h);
    const long n = poly_deg(f);
    if (n % e != 0) throw DomainError("component degree must divide the composite degree");
    const long dg = n / e;

    std::vector<DensePoly> hpow(dg + 1);
    hpow[0] = poly_const(F, F.one());
    for (long j = 1; j <= dg; ++j) hpow[j] = poly_mul(F, hpow[j - 1], h);

    DensePoly residual = f;
    DensePoly g;
    g.c.assign(dg + 1, F.zero());
    for (long j = dg; j >= 1; --j) {
        // higher powers are cleared, so h^j alone reaches degree j*e
        Elt c = poly_coeff(F, residual, j * e);
        if (F.is_zero(c)) continue;
        g.c[j] = c;
        residual = poly_sub(F, residual, poly_scale(F, c, hpow[j]));
    }
    if (!poly_is_zero(residual)) return std::nullopt;
    poly_normalize(F, g);
    require(poly_is_monic(F, g) && poly_is_original(F, g), "recovered left component shape");
    return g;
}

const char* kind_name(CollisionKind k) {
    switch (k) {
        case CollisionKind::frobenius: return "frobenius";
        case CollisionKind::constructed_family: return "constructed_family";
        case CollisionKind::unexplained: return "unexplained";
    }
    return "?";
}

namespace {

DensePoly frob_p_inverse(const FieldCtx& F, const DensePoly& f) {
    DensePoly out = f;
    for (auto& c : out.c) c = F.frob_p(c, -1);
    return out;
}

void check_frobenius_class(const FieldCtx& F, const CollisionClass& cls) {
    require(cls.pairs.size() == 2, "a zero-derivative class has exactly two members");
    const DensePoly xp = poly_monomial(F, long(F.p()), F.one());
    const std::pair<DensePoly, DensePoly>* right_power = nullptr;
    const std::pair<DensePoly, DensePoly>* left_power = nullptr;
    for (const auto& pr : cls.pairs) {
        if (pr.second == xp) right_power = &pr;
        if (pr.first == xp) left_power = &pr;
    }
    require(right_power && left_power, "zero-derivative members pair with the p-th power map");
    require(left_power->second == frob_p_inverse(F, right_power->first),
            "the two zero-derivative members differ by a coefficient twist");
}

// Structural facts every class with nonzero derivative must satisfy; the
// second degree k of the components is returned.
long check_collision_class(const FieldCtx& F, const CollisionClass& cls) {
    const u64 p = F.p();
    auto k_opt = second_degree(F, cls.pairs.front().first);
    require(k_opt.has_value(), "components of a nonzero-derivative class are not monomials");
    const long k = *k_opt;
    require(k >= 1 && k < long(p), "component second degree lies strictly between 0 and p");

    std::set<u64> gks, hks;
    const Elt a = F.neg(poly_coeff(F, cls.f, k * long(p)));
    const Elt b = F.mul(F.inv(F.from_int(k)), poly_coeff(F, cls.f, (k - 1) * long(p) + k));
    require(!F.is_zero(b), "the second coefficient relation is nondegenerate");
    for (const auto& [g, h] : cls.pairs) {
        require(second_degree(F, g) == k_opt && second_degree(F, h) == k_opt,
                "all members share one second degree");
        const Elt gk = poly_coeff(F, g, k);
        const Elt hk = poly_coeff(F, h, k);
        require(!F.is_zero(hk), "right member second coefficient is nonzero");
        gks.insert(F.element_index(gk));
        hks.insert(F.element_index(hk));
        Elt psi = F.add(F.pow(hk, p + 1), F.add(F.mul(a, hk), b));
        require(F.is_zero(psi), "h_k is a root of x^{p+1} + a x + b");
        require(gk == F.sub(F.neg(a), F.pow(hk, p)), "g_k = -a - h_k^p");
        require(gk == F.div(b, hk), "g_k = b / h_k");
    }
    require(gks.size() == cls.pairs.size() && hks.size() == cls.pairs.size(),
            "second coefficients separate the members");
    require(cls.pairs.size() <= p + 1, "class size is at most p+1");
    require(k == 1 || 2 * k > long(p), "k = 1 or k > p/2");
    return k;
}

}  // namespace

GeneralCensusReport general_census(const FieldCtx& F, unsigned jobs) {
    const u64 p = F.p(), q = F.q();
    if (F.r() != p)
        throw DomainError("the general census composes degree-p components; build the field with d0 = 1");

    u64 count = 1;
    for (u64 j = 1; j < p; ++j) count = mul_guard(count, q);
    if (count > kCensusPairGuard / count)
        throw GuardError("pair enumeration exceeds the budget");
    const u64 pairs_total = count * count;
    (void)pairs_total;

    // all monic original degree-p polynomials, indexed by base-q digits
    std::vector<DensePoly> comps(count);
    for (u64 idx = 0; idx < count; ++idx) {
        DensePoly h;
        h.c.assign(p + 1, F.zero());
        h.c[p] = F.one();
        u64 rem = idx;
        for (u64 j = 1; j < p; ++j) {
            h.c[j] = F.element_at(rem % q);
            rem /= q;
        }
        poly_normalize(F, h);
        comps[idx] = std::move(h);
    }

    jobs = std::max(1u, jobs);
    if (jobs > count) jobs = unsigned(count);
    using Key = std::vector<u32>;
    std::vector<std::map<Key, std::vector<std::pair<u32, u32>>>> partial(jobs);

    auto worker = [&](unsigned w) {
        auto& local = partial[w];
        for (u64 gi = w; gi < count; gi += jobs)
            for (u64 hi = 0; hi < count; ++hi) {
                DensePoly f = poly_compose(F, comps[gi], comps[hi]);
                local[poly_key(F, f)].push_back({u32(gi), u32(hi)});
            }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (auto& th : pool) th.join();

    std::map<Key, std::vector<std::pair<u32, u32>>> classes;
    for (auto& local : partial)
        for (auto& [key, vec] : local) {
            auto& dst = classes[key];
            dst.insert(dst.end(), vec.begin(), vec.end());
        }

    GeneralCensusReport report;
    report.p = p;
    report.q = q;
    for (auto& [key, members] : classes) {
        if (members.size() < 2) continue;
        CollisionClass cls;
        cls.f = poly_compose(F, comps[members.front().first], comps[members.front().second]);
        require(poly_key(F, cls.f) == key, "class representative matches its key");
        for (const auto& [gi, hi] : members) cls.pairs.push_back({comps[gi], comps[hi]});
        std::sort(cls.pairs.begin(), cls.pairs.end(),
                  [&](const auto& l, const auto& r_) { return l.second < r_.second; });
        for (size_t j = 1; j < cls.pairs.size(); ++j)
            require(cls.pairs[j - 1].second != cls.pairs[j].second,
                    "the right component determines the left one");

        if (poly_is_zero(poly_derivative(F, cls.f))) {
            check_frobenius_class(F, cls);
            cls.kind = CollisionKind::frobenius;
            ++report.frobenius;
        } else {
            cls.k = check_collision_class(F, cls);
            cls.kind = CollisionKind::unexplained;
            if (auto set = recover_params(F, cls.f)) {
                FamilyCollision fam = build_family_collision(F, *set);
                if (fam.f == cls.f && fam.pairs == cls.pairs)
                    cls.kind = CollisionKind::constructed_family;
            }
            ++(cls.kind == CollisionKind::constructed_family ? report.family
                                                             : report.unexplained);
        }
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace orecomp
