#include "orecomp/ore.hpp"

#include <algorithm>

#include "orecomp/linalg.hpp"

namespace orecomp {

void skew_normalize(const FieldCtx& F, AdditivePoly& f) {
    while (!f.a.empty() && F.is_zero(f.a.back())) f.a.pop_back();
}

long skew_deg(const AdditivePoly& f) { return long(f.a.size()) - 1; }

bool skew_is_zero(const AdditivePoly& f) { return f.a.empty(); }

bool skew_is_monic(const FieldCtx& F, const AdditivePoly& f) {
    return !f.a.empty() && f.a.back() == F.one();
}

Elt skew_coeff(const FieldCtx& F, const AdditivePoly& f, long i) {
    if (i < 0 || i >= long(f.a.size())) return F.zero();
    return f.a[size_t(i)];
}

AdditivePoly skew_x(const FieldCtx& F) { return AdditivePoly{{F.one()}}; }

AdditivePoly skew_monomial(const FieldCtx& F, long i, const Elt& c) {
    if (i < 0) throw DomainError("skew_monomial: negative skew degree");
    if (F.is_zero(c)) return AdditivePoly{};
    AdditivePoly f;
    f.a.assign(size_t(i) + 1, F.zero());
    f.a.back() = c;
    return f;
}

AdditivePoly skew_add(const FieldCtx& F, const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly out;
    out.a.assign(std::max(a.a.size(), b.a.size()), F.zero());
    for (size_t i = 0; i < out.a.size(); ++i) {
        Elt x = i < a.a.size() ? a.a[i] : F.zero();
        Elt y = i < b.a.size() ? b.a[i] : F.zero();
        out.a[i] = F.add(x, y);
    }
    skew_normalize(F, out);
    return out;
}

AdditivePoly skew_sub(const FieldCtx& F, const AdditivePoly& a, const AdditivePoly& b) {
    AdditivePoly nb = b;
    for (auto& x : nb.a) x = F.neg(x);
    return skew_add(F, a, nb);
}

AdditivePoly skew_scale(const FieldCtx& F, const Elt& c, const AdditivePoly& a) {
    if (F.is_zero(c)) return AdditivePoly{};
    AdditivePoly out = a;
    for (auto& x : out.a) x = F.mul(c, x);
    skew_normalize(F, out);
    return out;
}

AdditivePoly skew_monic(const FieldCtx& F, const AdditivePoly& f) {
    if (f.a.empty()) return f;
    return skew_scale(F, F.inv(f.a.back()), f);
}

AdditivePoly skew_compose(const FieldCtx& F, const AdditivePoly& g, const AdditivePoly& h) {
    if (g.a.empty() || h.a.empty()) return AdditivePoly{};
    AdditivePoly out;
    out.a.assign(g.a.size() + h.a.size() - 1, F.zero());
    for (size_t i = 0; i < g.a.size(); ++i) {
        if (F.is_zero(g.a[i])) continue;
        for (size_t j = 0; j < h.a.size(); ++j) {
            if (F.is_zero(h.a[j])) continue;
            out.a[i + j] = F.add(out.a[i + j], F.mul(g.a[i], F.frob(h.a[j], long(i))));
        }
    }
    skew_normalize(F, out);
    return out;
}

AdditivePoly skew_twist(const FieldCtx& F, const AdditivePoly& f, long j) {
    AdditivePoly out = f;
    for (auto& x : out.a) x = F.frob(x, j);
    return out;
}

Elt skew_eval(const FieldCtx& F, const AdditivePoly& f, const Elt& v) {
    Elt acc = F.zero();
    for (size_t i = 0; i < f.a.size(); ++i) {
        if (F.is_zero(f.a[i])) continue;
        acc = F.add(acc, F.mul(f.a[i], F.frob(v, long(i))));
    }
    return acc;
}

std::pair<AdditivePoly, AdditivePoly> skew_right_divmod(const FieldCtx& F, const AdditivePoly& f,
                                                        const AdditivePoly& h) {
    if (skew_is_zero(h)) throw DomainError("skew_right_divmod: zero divisor");
    long m = skew_deg(h);
    AdditivePoly q, r = f;
    if (skew_deg(r) >= m) q.a.assign(size_t(skew_deg(r) - m) + 1, F.zero());
    while (skew_deg(r) >= m) {
        long k = skew_deg(r) - m;
        // (c x^{r^k}) o h has leading coefficient c * h_m^{r^k}
        Elt c = F.div(r.a.back(), F.frob(h.a.back(), k));
        q.a[size_t(k)] = c;
        for (long j = 0; j <= m; ++j) {
            Elt term = F.mul(c, F.frob(h.a[size_t(j)], k));
            r.a[size_t(k + j)] = F.sub(r.a[size_t(k + j)], term);
        }
        skew_normalize(F, r);
    }
    skew_normalize(F, q);
    return {q, r};
}

AdditivePoly skew_right_rem(const FieldCtx& F, const AdditivePoly& f, const AdditivePoly& h) {
    return skew_right_divmod(F, f, h).second;
}

std::pair<AdditivePoly, AdditivePoly> skew_left_divmod(const FieldCtx& F, const AdditivePoly& f,
                                                       const AdditivePoly& g) {
    if (skew_is_zero(g)) throw DomainError("skew_left_divmod: zero divisor");
    long m = skew_deg(g);
    AdditivePoly q, r = f;
    if (skew_deg(r) >= m) q.a.assign(size_t(skew_deg(r) - m) + 1, F.zero());
    while (skew_deg(r) >= m) {
        long k = skew_deg(r) - m;
        // g o (c x^{r^k}) has leading coefficient g_m * c^{r^m}
        Elt c = F.frob(F.div(r.a.back(), g.a.back()), -m);
        q.a[size_t(k)] = c;
        for (long j = 0; j <= m; ++j) {
            Elt term = F.mul(g.a[size_t(j)], F.frob(c, j));
            r.a[size_t(j + k)] = F.sub(r.a[size_t(j + k)], term);
        }
        skew_normalize(F, r);
    }
    skew_normalize(F, q);
    return {q, r};
}

AdditivePoly gcrc(const FieldCtx& F, AdditivePoly f, AdditivePoly g) {
    while (!skew_is_zero(g)) {
        AdditivePoly r = skew_right_rem(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return skew_monic(F, f);
}

AdditivePoly lclc(const FieldCtx& F, const AdditivePoly& f, const AdditivePoly& g) {
    if (skew_is_zero(f) || skew_is_zero(g)) return AdditivePoly{};
    long m = skew_deg(g);
    if (m == 0) return skew_monic(F, f);
    // remainders of x^{r^j} o f modulo g, flattened over F_q
    SpanTracker tracker(F, size_t(m));
    std::vector<AdditivePoly> lifts;  // x^{r^j} o f
    for (long j = 0;; ++j) {
        require(j <= m + 1, "lclc dependence must occur by skew degree of g");
        AdditivePoly lift = skew_compose(F, skew_monomial(F, j, F.one()), f);
        AdditivePoly rem = skew_right_rem(F, lift, g);
        std::vector<Elt> v(size_t(m), F.zero());
        for (long i = 0; i < std::min(m, skew_deg(rem) + 1); ++i) v[size_t(i)] = rem.a[size_t(i)];
        lifts.push_back(std::move(lift));
        auto combo = tracker.add(v);
        if (!combo) continue;
        AdditivePoly L = lifts.back();
        for (size_t i = 0; i < combo->size(); ++i)
            L = skew_sub(F, L, skew_scale(F, (*combo)[i], lifts[i]));
        return skew_monic(F, L);
    }
}

AdditivePoly mclc(const FieldCtx& F, const AdditivePoly& f) {
    if (skew_is_zero(f)) throw DomainError("mclc: zero polynomial");
    long n = skew_deg(f);
    if (n == 0) return skew_x(F);
    size_t dim = size_t(n) * F.d();
    SpanTracker tracker(F, dim);
    AdditivePoly xq = skew_monomial(F, long(F.d()), F.one());  // x^q
    AdditivePoly rem = skew_right_rem(F, skew_x(F), f);        // x^{q^0} mod f
    std::vector<Elt> central;  // y-coefficients of the result, ascending
    for (long k = 0;; ++k) {
        require(k <= long(dim), "mclc dependence must occur within n*d steps");
        std::vector<Elt> v(dim, F.zero());
        for (long i = 0; i <= skew_deg(rem); ++i) {
            auto coords = F.r_coords(rem.a[size_t(i)]);
            for (unsigned j = 0; j < F.d(); ++j) v[size_t(i) * F.d() + j] = coords[j];
        }
        auto combo = tracker.add(v);
        if (combo) {
            // x^{q^k} = sum c_i x^{q^i} modulo f, all c_i in F_r
            central = std::move(*combo);
            for (auto& c : central) {
                c = F.neg(c);  // as coefficients of the monic central polynomial
                require(F.in_subfield(c, 1), "mclc dependence coefficients lie in F_r");
            }
            central.push_back(F.one());
            break;
        }
        rem = skew_right_rem(F, skew_compose(F, xq, rem), f);
    }
    DensePoly tiny = poly_from_coeffs(F, central);
    return tau_inv(F, tiny);
}

bool skew_is_central(const FieldCtx& F, const AdditivePoly& f) {
    for (size_t i = 0; i < f.a.size(); ++i) {
        if (F.is_zero(f.a[i])) continue;
        if (i % F.d() != 0 || !F.in_subfield(f.a[i], 1)) return false;
    }
    return true;
}

DensePoly tau(const FieldCtx& F, const AdditivePoly& f) {
    if (!skew_is_central(F, f)) throw DomainError("tau: polynomial is not central");
    std::vector<Elt> c;
    if (!f.a.empty()) c.assign(f.a.size() / F.d() + 1, F.zero());
    for (size_t i = 0; i < f.a.size(); ++i)
        if (!F.is_zero(f.a[i])) c[i / F.d()] = f.a[i];
    return poly_from_coeffs(F, std::move(c));
}

AdditivePoly tau_inv(const FieldCtx& F, const DensePoly& c) {
    for (auto& x : c.c)
        if (!F.in_subfield(x, 1)) throw DomainError("tau_inv: coefficient outside F_r");
    AdditivePoly f;
    if (!c.c.empty()) f.a.assign((c.c.size() - 1) * F.d() + 1, F.zero());
    for (size_t i = 0; i < c.c.size(); ++i) f.a[i * F.d()] = c.c[i];
    skew_normalize(F, f);
    return f;
}

std::pair<unsigned, AdditivePoly> squarefree_split(const FieldCtx& F, const AdditivePoly& f) {
    if (skew_is_zero(f)) throw DomainError("squarefree_split: zero polynomial");
    unsigned t = 0;
    while (F.is_zero(f.a[t])) ++t;
    AdditivePoly h;
    h.a.assign(f.a.size() - t, F.zero());
    for (size_t j = 0; j + t < f.a.size(); ++j) h.a[j] = F.frob(f.a[j + t], -long(t));
    skew_normalize(F, h);
    require(skew_compose(F, skew_monomial(F, long(t), F.one()), h) == f,
            "squarefree_split recomposes");
    return {t, h};
}

AdditivePoly to_additive(const FieldCtx& F, const DensePoly& f) {
    AdditivePoly out;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (F.is_zero(f.c[i])) continue;
        // express i as r^j
        u64 m = i, j = 0;
        while (m > 1 && m % F.r() == 0) {
            m /= F.r();
            ++j;
        }
        if (m != 1)
            throw DomainError("to_additive: exponent " + std::to_string(i) +
                              " is not a power of r");
        if (out.a.size() <= j) out.a.resize(size_t(j) + 1, F.zero());
        out.a[size_t(j)] = f.c[i];
    }
    return out;
}

DensePoly to_dense(const FieldCtx& F, const AdditivePoly& f) {
    if (f.a.empty()) return DensePoly{};
    u64 deg = 1;
    for (long i = 0; i < skew_deg(f); ++i) {
        deg *= F.r();
        if (deg > u64(kDenseDegreeGuard))
            throw GuardError("to_dense: ordinary degree exceeds the dense guard");
    }
    DensePoly out;
    out.c.assign(size_t(deg) + 1, F.zero());
    u64 pos = 1;
    for (size_t i = 0; i < f.a.size(); ++i) {
        out.c[size_t(pos)] = f.a[i];
        pos *= F.r();
    }
    poly_normalize(F, out);
    return out;
}

std::string skew_to_string(const FieldCtx& F, const AdditivePoly& f) {
    if (f.a.empty()) return "add:0";
    std::string s = "add:";
    for (size_t i = 0; i < f.a.size(); ++i) {
        if (i) s += ';';
        s += elt_to_string(F, f.a[i]);
    }
    return s;
}

AdditivePoly parse_additive(const FieldCtx& F, const std::string& text) {
    std::string body = text;
    body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
    if (body.rfind("add:", 0) != 0) throw DomainError("parse_additive: missing 'add:' prefix");
    body = body.substr(4);
    if (body.empty()) throw DomainError("parse_additive: empty coefficient list");
    char sep = body.find(';') != std::string::npos ? ';' : ',';
    AdditivePoly f;
    for (auto& tok : split_top_level(body, sep)) f.a.push_back(parse_elt(F, tok));
    skew_normalize(F, f);
    return f;
}

AdditivePoly random_additive(const FieldCtx& F, long n, Rng& rng, bool monic) {
    if (n < 0) throw DomainError("random_additive: negative skew degree");
    AdditivePoly f;
    f.a.assign(size_t(n) + 1, F.zero());
    for (long i = 0; i < n; ++i) f.a[size_t(i)] = F.random_element(rng);
    f.a[size_t(n)] = monic ? F.one() : F.random_element(rng);
    skew_normalize(F, f);
    return f;
}

}  // namespace orecomp
