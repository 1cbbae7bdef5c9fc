#include "orecomp/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orecomp {

void poly_normalize(const FieldCtx& F, DensePoly& f) {
    while (!f.c.empty() && F.is_zero(f.c.back())) f.c.pop_back();
}

DensePoly poly_from_coeffs(const FieldCtx& F, std::vector<Elt> coeffs) {
    DensePoly f{std::move(coeffs)};
    poly_normalize(F, f);
    return f;
}

long poly_deg(const DensePoly& f) { return long(f.c.size()) - 1; }

bool poly_is_zero(const DensePoly& f) { return f.c.empty(); }

bool poly_is_monic(const FieldCtx& F, const DensePoly& f) {
    return !f.c.empty() && f.c.back() == F.one();
}

bool poly_is_original(const FieldCtx& F, const DensePoly& f) {
    return f.c.empty() || F.is_zero(f.c.front());
}

Elt poly_coeff(const FieldCtx& F, const DensePoly& f, long i) {
    if (i < 0 || i >= long(f.c.size())) return F.zero();
    return f.c[size_t(i)];
}

Elt poly_lead(const FieldCtx& F, const DensePoly& f) {
    if (f.c.empty()) return F.zero();
    return f.c.back();
}

DensePoly poly_monomial(const FieldCtx& F, long n, const Elt& c) {
    if (n < 0) throw DomainError("poly_monomial: negative degree");
    if (n > kDenseDegreeGuard) throw GuardError("poly_monomial: degree exceeds dense guard");
    if (F.is_zero(c)) return DensePoly{};
    DensePoly f;
    f.c.assign(size_t(n) + 1, F.zero());
    f.c.back() = c;
    return f;
}

DensePoly poly_x(const FieldCtx& F) { return poly_monomial(F, 1, F.one()); }

DensePoly poly_const(const FieldCtx& F, const Elt& c) {
    DensePoly f;
    if (!F.is_zero(c)) f.c.push_back(c);
    return f;
}

DensePoly poly_add(const FieldCtx& F, const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    out.c.assign(std::max(a.c.size(), b.c.size()), F.zero());
    for (size_t i = 0; i < out.c.size(); ++i) {
        Elt x = i < a.c.size() ? a.c[i] : F.zero();
        Elt y = i < b.c.size() ? b.c[i] : F.zero();
        out.c[i] = F.add(x, y);
    }
    poly_normalize(F, out);
    return out;
}

DensePoly poly_sub(const FieldCtx& F, const DensePoly& a, const DensePoly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

DensePoly poly_neg(const FieldCtx& F, const DensePoly& a) {
    DensePoly out = a;
    for (auto& x : out.c) x = F.neg(x);
    return out;
}

DensePoly poly_scale(const FieldCtx& F, const Elt& c, const DensePoly& a) {
    if (F.is_zero(c)) return DensePoly{};
    DensePoly out = a;
    for (auto& x : out.c) x = F.mul(c, x);
    poly_normalize(F, out);
    return out;
}

DensePoly poly_mul(const FieldCtx& F, const DensePoly& a, const DensePoly& b) {
    if (a.c.empty() || b.c.empty()) return DensePoly{};
    if (poly_deg(a) + poly_deg(b) > kDenseDegreeGuard)
        throw GuardError("poly_mul: degree exceeds dense guard");
    DensePoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    poly_normalize(F, out);
    return out;
}

DensePoly poly_pow(const FieldCtx& F, DensePoly base, u64 e) {
    DensePoly acc = poly_const(F, F.one());
    while (e) {
        if (e & 1) acc = poly_mul(F, acc, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return acc;
}

std::pair<DensePoly, DensePoly> poly_divmod(const FieldCtx& F, const DensePoly& a,
                                            const DensePoly& b) {
    if (b.c.empty()) throw DomainError("poly_divmod: division by zero polynomial");
    DensePoly r = a, q;
    long db = poly_deg(b);
    Elt lead_inv = F.inv(b.c.back());
    if (poly_deg(r) >= db) q.c.assign(size_t(poly_deg(r) - db) + 1, F.zero());
    while (poly_deg(r) >= db) {
        long shift = poly_deg(r) - db;
        Elt c = F.mul(r.c.back(), lead_inv);
        q.c[size_t(shift)] = c;
        for (long i = 0; i <= db; ++i)
            r.c[size_t(shift + i)] = F.sub(r.c[size_t(shift + i)], F.mul(c, b.c[size_t(i)]));
        poly_normalize(F, r);
    }
    poly_normalize(F, q);
    return {q, r};
}

DensePoly poly_mod(const FieldCtx& F, const DensePoly& a, const DensePoly& b) {
    return poly_divmod(F, a, b).second;
}

DensePoly poly_monic(const FieldCtx& F, const DensePoly& f) {
    if (f.c.empty()) return f;
    return poly_scale(F, F.inv(f.c.back()), f);
}

DensePoly poly_gcd(const FieldCtx& F, DensePoly a, DensePoly b) {
    while (!b.c.empty()) {
        DensePoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

DensePoly poly_derivative(const FieldCtx& F, const DensePoly& f) {
    DensePoly out;
    if (f.c.size() <= 1) return out;
    out.c.assign(f.c.size() - 1, F.zero());
    for (size_t i = 1; i < f.c.size(); ++i) {
        Elt factor = F.from_int(i64(i % F.p()));
        out.c[i - 1] = F.mul(factor, f.c[i]);
    }
    poly_normalize(F, out);
    return out;
}

Elt poly_eval(const FieldCtx& F, const DensePoly& f, const Elt& x) {
    Elt acc = F.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

DensePoly poly_compose(const FieldCtx& F, const DensePoly& g, const DensePoly& h) {
    DensePoly acc;
    for (size_t i = g.c.size(); i-- > 0;) {
        acc = poly_mul(F, acc, h);
        acc = poly_add(F, acc, poly_const(F, g.c[i]));
    }
    return acc;
}

std::optional<long> second_degree(const FieldCtx& F, const DensePoly& f) {
    long d = poly_deg(f);
    for (long i = d - 1; i >= 0; --i)
        if (!F.is_zero(f.c[size_t(i)])) return i;
    return std::nullopt;
}

DensePoly poly_mulmod(const FieldCtx& F, const DensePoly& a, const DensePoly& b,
                      const DensePoly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

DensePoly poly_powmod(const FieldCtx& F, DensePoly base, u64 e, const DensePoly& m) {
    DensePoly acc = poly_mod(F, poly_const(F, F.one()), m);
    base = poly_mod(F, base, m);
    while (e) {
        if (e & 1) acc = poly_mulmod(F, acc, base, m);
        base = poly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return acc;
}

// --- factorization -----------------------------------------------------------

namespace {

u64 subfield_size(const FieldCtx& F, unsigned e) {
    u64 s = 1;
    for (unsigned i = 0; i < e; ++i) s *= F.r();
    return s;
}

void check_coeffs_in_subfield(const FieldCtx& F, const DensePoly& f, unsigned e,
                              const char* what) {
    if (e == 0 || F.d() % e != 0) throw DomainError(std::string(what) + ": e must divide d");
    for (auto& c : f.c)
        if (!F.in_subfield(c, e))
            throw DomainError(std::string(what) + ": coefficient outside the requested subfield");
}

// p-th root within F_{r^e}: inverse of one application of the p power map.
Elt pth_root_in_subfield(const FieldCtx& F, const Elt& a, unsigned e) {
    return F.frob_p(a, long(F.d0()) * e - 1);
}

// y^{s^j} mod m via j successive s-power maps.
DensePoly frob_powmod(const FieldCtx& F, const DensePoly& start, unsigned j, u64 s,
                      const DensePoly& m) {
    DensePoly h = poly_mod(F, start, m);
    for (unsigned i = 0; i < j; ++i) h = poly_powmod(F, h, s, m);
    return h;
}

DensePoly random_subfield_poly(const FieldCtx& F, long max_deg, const std::vector<Elt>& basis,
                               Rng& rng) {
    DensePoly f;
    f.c.assign(size_t(max_deg) + 1, F.zero());
    for (auto& coef : f.c)
        for (auto& b : basis)
            if (rng.below(F.p())) {
                Elt term = b;
                u32 digit = u32(rng.below(F.p() - 1)) + 1;
                for (auto& x : term.c) x = fp::mul(x, digit, F.p());
                coef = F.add(coef, term);
            }
    poly_normalize(F, f);
    return f;
}

// Splits a squarefree product of irreducibles of equal degree dd.
void equal_degree_split(const FieldCtx& F, const DensePoly& f, long dd, unsigned e, u64 s,
                        const std::vector<Elt>& basis, Rng& rng,
                        std::vector<DensePoly>& out) {
    if (poly_deg(f) == dd) {
        out.push_back(poly_monic(F, f));
        return;
    }
    DensePoly g;
    while (true) {
        DensePoly b = random_subfield_poly(F, poly_deg(f) - 1, basis, rng);
        if (poly_deg(b) < 1 && poly_is_zero(b)) continue;
        if (F.p() == 2) {
            // trace of b over F_2 inside F_{s^dd}
            unsigned bits = (F.d0() * e) * unsigned(dd);
            DensePoly tr;
            DensePoly cur = poly_mod(F, b, f);
            for (unsigned i = 0; i < bits; ++i) {
                tr = poly_add(F, tr, cur);
                cur = poly_mulmod(F, cur, cur, f);
            }
            g = poly_gcd(F, tr, f);
        } else {
            // b^{(s^dd - 1)/2} = (norm to F_s of b)^{(s-1)/2} via an s-power chain
            DensePoly cur = poly_mod(F, b, f);
            DensePoly prod = cur;
            for (long i = 1; i < dd; ++i) {
                cur = poly_powmod(F, cur, s, f);
                prod = poly_mulmod(F, prod, cur, f);
            }
            DensePoly w = poly_powmod(F, prod, (s - 1) / 2, f);
            w = poly_sub(F, w, poly_const(F, F.one()));
            g = poly_gcd(F, w, f);
        }
        long dg = poly_deg(g);
        if (dg > 0 && dg < poly_deg(f)) break;
    }
    equal_degree_split(F, g, dd, e, s, basis, rng, out);
    equal_degree_split(F, poly_divmod(F, f, g).first, dd, e, s, basis, rng, out);
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<DensePoly> factor_squarefree(const FieldCtx& F, DensePoly f, unsigned e, u64 s,
                                         const std::vector<Elt>& basis, Rng& rng) {
    std::vector<DensePoly> out;
    DensePoly y = poly_x(F);
    DensePoly h = poly_mod(F, y, f);
    long dd = 0;
    while (2 * (dd + 1) <= poly_deg(f)) {
        ++dd;
        h = poly_powmod(F, h, s, f);
        DensePoly g = poly_gcd(F, poly_sub(F, h, y), f);
        if (poly_deg(g) > 0) {
            equal_degree_split(F, g, dd, e, s, basis, rng, out);
            f = poly_divmod(F, f, g).first;
            h = poly_mod(F, h, f);
        }
    }
    if (poly_deg(f) > 0) equal_degree_split(F, f, poly_deg(f), e, s, basis, rng, out);
    return out;
}

// Squarefree decomposition in characteristic p, recursing through p-th roots.
void squarefree_decompose(const FieldCtx& F, DensePoly f, unsigned e, unsigned mult,
                          std::vector<std::pair<DensePoly, unsigned>>& parts) {
    DensePoly fd = poly_derivative(F, f);
    if (poly_is_zero(fd)) {
        if (poly_deg(f) == 0) return;
        // f = g(y^p); take p-th roots of the p-spaced coefficients
        DensePoly g;
        g.c.assign(size_t(poly_deg(f) / F.p()) + 1, F.zero());
        for (size_t i = 0; i < f.c.size(); ++i) {
            if (F.is_zero(f.c[i])) continue;
            require(i % F.p() == 0, "vanishing derivative implies p-spaced support");
            g.c[i / F.p()] = pth_root_in_subfield(F, f.c[i], e);
        }
        poly_normalize(F, g);
        squarefree_decompose(F, g, e, mult * F.p(), parts);
        return;
    }
    DensePoly a = poly_gcd(F, f, fd);
    DensePoly w = poly_divmod(F, f, a).first;
    unsigned i = 1;
    while (poly_deg(w) > 0) {
        DensePoly y = poly_gcd(F, w, a);
        DensePoly z = poly_divmod(F, w, y).first;
        if (poly_deg(z) > 0) parts.emplace_back(z, mult * i);
        w = std::move(y);
        a = poly_divmod(F, a, w).first;
        ++i;
    }
    if (poly_deg(a) > 0) squarefree_decompose(F, a, e, mult, parts);
}

}  // namespace

std::vector<std::pair<DensePoly, unsigned>> poly_factor(const FieldCtx& F, const DensePoly& f,
                                                        unsigned e, u64 seed) {
    check_coeffs_in_subfield(F, f, e, "poly_factor");
    if (poly_is_zero(f)) throw DomainError("poly_factor: zero polynomial");
    u64 s = subfield_size(F, e);
    auto basis = F.subfield_basis(e);
    Rng rng(seed);
    std::vector<std::pair<DensePoly, unsigned>> parts;
    squarefree_decompose(F, poly_monic(F, f), e, 1, parts);
    std::map<DensePoly, unsigned> found;
    for (auto& [part, mult] : parts)
        for (auto& irr : factor_squarefree(F, part, e, s, basis, rng)) found[irr] += mult;
    std::vector<std::pair<DensePoly, unsigned>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = poly_deg(a.first), db = poly_deg(b.first);
        if (da != db) return da < db;
        return a.first.c < b.first.c;
    });
    return out;
}

bool poly_is_irreducible(const FieldCtx& F, const DensePoly& f, unsigned e) {
    check_coeffs_in_subfield(F, f, e, "poly_is_irreducible");
    long n = poly_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    u64 s = subfield_size(F, e);
    DensePoly m = poly_monic(F, f);
    DensePoly y = poly_mod(F, poly_x(F), m);
    if (frob_powmod(F, y, unsigned(n), s, m) != y) return false;
    for (long l = 2; l <= n; ++l) {
        if (n % l != 0 || !fp::is_prime(u64(l))) continue;
        DensePoly h = frob_powmod(F, y, unsigned(n / l), s, m);
        if (poly_deg(poly_gcd(F, poly_sub(F, h, y), m)) != 0) return false;
    }
    return true;
}

namespace {

void collect_roots(const FieldCtx& F, const DensePoly& g, Rng& rng, std::vector<Elt>& roots) {
    if (poly_deg(g) <= 0) return;
    if (poly_deg(g) == 1) {
        DensePoly m = poly_monic(F, g);
        roots.push_back(F.neg(m.c[0]));
        return;
    }
    DensePoly split;
    while (true) {
        Elt delta = F.random_element(rng);
        if (F.p() == 2) {
            // gcd with the F_2-trace of delta*y
            DensePoly dy = poly_mod(F, poly_monomial(F, 1, delta), g);
            DensePoly tr;
            DensePoly cur = dy;
            for (unsigned i = 0; i < F.k(); ++i) {
                tr = poly_add(F, tr, cur);
                cur = poly_mulmod(F, cur, cur, g);
            }
            split = poly_gcd(F, tr, g);
        } else {
            DensePoly shifted = poly_add(F, poly_x(F), poly_const(F, delta));
            DensePoly w = poly_powmod(F, shifted, (F.q() - 1) / 2, g);
            w = poly_sub(F, w, poly_const(F, F.one()));
            split = poly_gcd(F, w, g);
        }
        long ds = poly_deg(split);
        if (ds > 0 && ds < poly_deg(g)) break;
    }
    collect_roots(F, split, rng, roots);
    collect_roots(F, poly_divmod(F, g, split).first, rng, roots);
}

}  // namespace

std::vector<Elt> roots_in_field(const FieldCtx& F, const DensePoly& f) {
    if (poly_is_zero(f)) throw DomainError("roots_in_field: zero polynomial");
    DensePoly m = poly_monic(F, f);
    std::vector<Elt> roots;
    if (poly_deg(m) == 0) return roots;
    DensePoly y = poly_mod(F, poly_x(F), m);
    DensePoly yq = poly_powmod(F, poly_x(F), F.q(), m);
    DensePoly g = poly_gcd(F, poly_sub(F, yq, y), m);
    Rng rng(0x726f6f7473ull);  // fixed seed; the sorted output is canonical anyway
    collect_roots(F, g, rng, roots);
    std::sort(roots.begin(), roots.end());
    for (auto& root : roots)
        require(F.is_zero(poly_eval(F, f, root)), "claimed root evaluates to zero");
    return roots;
}

DensePoly random_monic(const FieldCtx& F, long n, unsigned e, Rng& rng) {
    if (n < 0) throw DomainError("random_monic: negative degree");
    auto basis = F.subfield_basis(e);
    DensePoly f = random_subfield_poly(F, n ? n - 1 : 0, basis, rng);
    f.c.resize(size_t(n) + 1, F.zero());
    f.c[size_t(n)] = F.one();
    return f;
}

DensePoly random_irreducible(const FieldCtx& F, long n, unsigned e, u64 seed) {
    if (n < 1) throw DomainError("random_irreducible: degree must be positive");
    Rng rng(seed);
    while (true) {
        DensePoly f = random_monic(F, n, e, rng);
        if (poly_is_irreducible(F, f, e)) return f;
    }
}

std::vector<u32> poly_key(const FieldCtx& F, const DensePoly& f) {
    std::vector<u32> key;
    key.reserve(f.c.size() * F.k());
    for (auto& c : f.c) key.insert(key.end(), c.c.begin(), c.c.end());
    return key;
}

// --- text format -------------------------------------------------------------

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string poly_to_string(const FieldCtx& F, const DensePoly& f) {
    if (poly_is_zero(f)) return "0";
    std::string s;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (F.is_zero(f.c[i])) continue;
        if (!s.empty()) s += ';';
        s += std::to_string(i) + ":" + elt_to_string(F, f.c[i]);
    }
    return s;
}

DensePoly parse_poly(const FieldCtx& F, const std::string& text) {
    std::string body = text;
    body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
    if (body.empty()) throw DomainError("parse_poly: empty input");
    if (body.find(':') == std::string::npos) {
        // dense comma form
        auto toks = split_top_level(body, ',');
        std::vector<Elt> coeffs;
        for (auto& t : toks) coeffs.push_back(parse_elt(F, t));
        return poly_from_coeffs(F, std::move(coeffs));
    }
    std::vector<Elt> coeffs;
    for (auto& term : split_top_level(body, ';')) {
        auto colon = term.find(':');
        if (colon == std::string::npos) throw DomainError("parse_poly: term missing ':' in '" + term + "'");
        std::string deg_str = term.substr(0, colon);
        std::string elt_str = term.substr(colon + 1);
        size_t pos = 0;
        long deg;
        try {
            deg = std::stol(deg_str, &pos);
        } catch (const std::exception&) {
            throw DomainError("parse_poly: bad exponent '" + deg_str + "'");
        }
        if (pos != deg_str.size() || deg < 0) throw DomainError("parse_poly: bad exponent '" + deg_str + "'");
        if (deg > kDenseDegreeGuard) throw GuardError("parse_poly: exponent exceeds dense guard");
        Elt c = parse_elt(F, elt_str);
        if (long(coeffs.size()) <= deg) coeffs.resize(size_t(deg) + 1, F.zero());
        if (!F.is_zero(coeffs[size_t(deg)]))
            throw DomainError("parse_poly: duplicate exponent " + std::to_string(deg));
        coeffs[size_t(deg)] = c;
    }
    return poly_from_coeffs(F, std::move(coeffs));
}

}  // namespace orecomp
