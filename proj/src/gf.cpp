#include "orecomp/gf.hpp"

#include <algorithm>
#include <sstream>

namespace orecomp {

namespace {

u64 checked_pow(u64 base, unsigned exp, const char* what) {
    u64 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (acc > (u64(1) << 62) / base) throw GuardError(std::string(what) + ": size overflow");
        acc *= base;
    }
    return acc;
}

}  // namespace

FieldCtx FieldCtx::make(u32 p, unsigned d0, unsigned d, const std::vector<i64>* modulus, u64 seed) {
    if (!fp::is_prime(p)) throw DomainError("make: characteristic must be prime");
    if (d0 == 0 || d == 0) throw DomainError("make: extension degrees must be positive");
    FieldCtx F;
    F.p_ = p;
    F.d0_ = d0;
    F.d_ = d;
    F.k_ = d0 * d;
    if (F.k_ > 64) throw GuardError("make: extension degree over F_p limited to 64");
    F.r_ = checked_pow(p, d0, "make r");
    F.q_ = checked_pow(F.r_, d, "make q");

    if (modulus) {
        fp::Poly m(modulus->size());
        for (size_t i = 0; i < m.size(); ++i) m[i] = fp::norm((*modulus)[i], p);
        fp::trim(m);
        if (fp::deg(m) != int(F.k_)) throw DomainError("make: modulus degree must equal d0*d");
        if (m.back() != 1) throw DomainError("make: modulus must be monic");
        if (!fp::is_irreducible(m, p)) throw DomainError("make: modulus is reducible");
        F.modulus_ = m;
    } else {
        Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
        fp::Poly m(F.k_ + 1, 0);
        do {
            for (unsigned i = 0; i < F.k_; ++i) m[i] = u32(rng.below(p));
            m[F.k_] = 1;
        } while (!fp::is_irreducible(m, p));
        F.modulus_ = m;
    }
    F.build_tables(seed);
    return F;
}

void FieldCtx::build_tables(u64) {
    // reduction table for products: t^(k+i) mod modulus
    red_.resize(k_ ? k_ - 1 : 0);
    fp::Poly cur(k_ + 1, 0);
    cur[k_] = 1;
    for (unsigned i = 0; i + 1 < k_; ++i) {
        red_[i] = fp::poly_mod(cur, modulus_, p_);
        red_[i].resize(k_, 0);
        cur.insert(cur.begin(), 0);
    }

    // matrix of x -> x^p: column j holds coordinates of t^(j*p)
    fp::Poly tp = fp::powmod(fp::Poly{0, 1}, p_, modulus_, p_);
    frob_p_.assign(k_, std::vector<u32>(k_, 0));
    fp::Poly col{1};
    for (unsigned j = 0; j < k_; ++j) {
        for (size_t i = 0; i < col.size(); ++i) frob_p_[i][j] = col[i];
        if (j + 1 < k_) col = fp::mulmod(col, tp, modulus_, p_);
    }

    // x -> x^r and its powers
    fp::Mat mr = fp::mat_pow(frob_p_, d0_, p_);
    frob_r_pow_.resize(d_);
    frob_r_pow_[0] = fp::identity(k_);
    for (unsigned j = 1; j < d_; ++j) frob_r_pow_[j] = fp::mat_mul(frob_r_pow_[j - 1], mr, p_);

    // F_p-basis of F_r: kernel of (M_r - I)
    fp::Mat mr_minus_i = mr;
    for (unsigned i = 0; i < k_; ++i) mr_minus_i[i][i] = fp::sub(mr_minus_i[i][i], 1, p_);
    auto ker = fp::kernel(mr_minus_i, p_);
    require(ker.size() == d0_, "F_r dimension over F_p");
    r_subfield_basis_.clear();
    for (auto& v : ker) r_subfield_basis_.push_back(Elt{v});

    // Greedy F_r-basis of F_q: grow the F_p-span of {w_j * b_i} by power
    // basis candidates until it fills F_q.
    r_basis_.clear();
    fp::Mat span;  // rows: F_p-vectors already in the span, kept reduced
    auto span_rank = [&]() { return span.size(); };
    auto add_vector = [&](const std::vector<u32>& v) {
        span.push_back(v);
        auto piv = fp::rref(span, p_);
        while (span.size() > piv.size()) span.pop_back();
    };
    for (unsigned cand = 0; cand < k_ && r_basis_.size() < d_; ++cand) {
        Elt b = zero();
        b.c[cand] = 1;
        size_t before = span_rank();
        fp::Mat saved = span;
        for (auto& w : r_subfield_basis_) add_vector(mul(w, b).c);
        if (span_rank() == before + d0_) {
            r_basis_.push_back(b);
        } else {
            span = std::move(saved);  // candidate not independent over F_r
        }
    }
    require(r_basis_.size() == d_, "F_r-basis of F_q");

    // change of basis: columns are w_j * b_i, i major
    fp::Mat basis_cols(k_, std::vector<u32>(k_, 0));
    unsigned col_idx = 0;
    for (unsigned i = 0; i < d_; ++i)
        for (unsigned j = 0; j < d0_; ++j, ++col_idx) {
            Elt prod = mul(r_subfield_basis_[j], r_basis_[i]);
            for (unsigned row = 0; row < k_; ++row) basis_cols[row][col_idx] = prod.c[row];
        }
    auto inv_m = fp::inverse(basis_cols, p_);
    require(inv_m.has_value(), "r-coordinate change of basis invertible");
    r_coords_inv_ = std::move(*inv_m);
}

Elt FieldCtx::one() const {
    Elt e = zero();
    e.c[0] = 1 % p_;
    return e;
}

Elt FieldCtx::t() const {
    Elt e = zero();
    if (k_ < 2) throw DomainError("t: prime field has no generator t");
    e.c[1] = 1;
    return e;
}

Elt FieldCtx::from_int(i64 v) const {
    Elt e = zero();
    e.c[0] = fp::norm(v, p_);
    return e;
}

bool FieldCtx::is_zero(const Elt& a) const {
    for (auto x : a.c)
        if (x) return false;
    return true;
}

bool FieldCtx::is_scalar(const Elt& a) const {
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i]) return false;
    return true;
}

void FieldCtx::check_element(const Elt& a) const {
    if (a.c.size() != k_) throw DomainError("element has wrong coordinate length for this field");
    for (auto x : a.c)
        if (x >= p_) throw DomainError("element coordinate out of range");
}

Elt FieldCtx::add(const Elt& a, const Elt& b) const {
    Elt c = zero();
    for (unsigned i = 0; i < k_; ++i) c.c[i] = fp::add(a.c[i], b.c[i], p_);
    return c;
}

Elt FieldCtx::sub(const Elt& a, const Elt& b) const {
    Elt c = zero();
    for (unsigned i = 0; i < k_; ++i) c.c[i] = fp::sub(a.c[i], b.c[i], p_);
    return c;
}

Elt FieldCtx::neg(const Elt& a) const {
    Elt c = zero();
    for (unsigned i = 0; i < k_; ++i) c.c[i] = fp::neg(a.c[i], p_);
    return c;
}

Elt FieldCtx::mul(const Elt& a, const Elt& b) const {
    std::vector<u64> conv(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (!a.c[i]) continue;
        for (unsigned j = 0; j < k_; ++j) conv[i + j] += u64(a.c[i]) * b.c[j];
    }
    Elt out = zero();
    for (unsigned i = 0; i < k_; ++i) out.c[i] = u32(conv[i] % p_);
    for (unsigned i = k_; i < 2 * k_ - 1; ++i) {
        u32 c = u32(conv[i] % p_);
        if (!c) continue;
        const fp::Poly& red = red_[i - k_];
        for (size_t j = 0; j < red.size(); ++j)
            out.c[j] = fp::add(out.c[j], fp::mul(c, red[j], p_), p_);
    }
    return out;
}

Elt FieldCtx::inv(const Elt& a) const {
    if (is_zero(a)) throw DomainError("inv: zero element");
    fp::Poly ap(a.c);
    fp::trim(ap);
    fp::Poly r = fp::inv_mod(ap, modulus_, p_);
    r.resize(k_, 0);
    return Elt{r};
}

Elt FieldCtx::pow(Elt a, u64 e) const {
    Elt acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

Elt FieldCtx::frob(const Elt& a, long j) const {
    long jm = j % long(d_);
    if (jm < 0) jm += d_;
    if (jm == 0) return a;
    return Elt{fp::mat_vec(frob_r_pow_[size_t(jm)], a.c, p_)};
}

Elt FieldCtx::frob_p(const Elt& a, long j) const {
    long jm = j % long(k_);
    if (jm < 0) jm += k_;
    Elt out = a;
    for (long i = 0; i < jm; ++i) out = Elt{fp::mat_vec(frob_p_, out.c, p_)};
    return out;
}

bool FieldCtx::in_subfield(const Elt& a, unsigned e) const {
    return frob(a, long(e)) == a;
}

std::vector<Elt> FieldCtx::r_coords(const Elt& a) const {
    std::vector<u32> lambda = fp::mat_vec(r_coords_inv_, a.c, p_);
    std::vector<Elt> coords(d_, zero());
    for (unsigned i = 0; i < d_; ++i)
        for (unsigned j = 0; j < d0_; ++j) {
            u32 l = lambda[i * d0_ + j];
            if (!l) continue;
            Elt term = r_subfield_basis_[j];
            for (auto& x : term.c) x = fp::mul(x, l, p_);
            coords[i] = add(coords[i], term);
        }
    return coords;
}

Elt FieldCtx::from_r_coords(const std::vector<Elt>& coords) const {
    if (coords.size() != d_) throw DomainError("from_r_coords: expected d coordinates");
    Elt acc = zero();
    for (unsigned i = 0; i < d_; ++i) acc = add(acc, mul(coords[i], r_basis_[i]));
    return acc;
}

Elt FieldCtx::element_at(u64 index) const {
    if (index >= q_) throw DomainError("element_at: index out of range");
    Elt e = zero();
    for (unsigned i = 0; i < k_; ++i) {
        e.c[i] = u32(index % p_);
        index /= p_;
    }
    return e;
}

u64 FieldCtx::element_index(const Elt& a) const {
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
    return idx;
}

std::vector<Elt> FieldCtx::subfield_basis(unsigned e) const {
    if (e == 0 || d_ % e != 0) throw DomainError("subfield_basis: e must divide d");
    fp::Mat m = frob_r_pow_[e % d_];  // identity when e == d
    for (unsigned i = 0; i < k_; ++i) m[i][i] = fp::sub(m[i][i], 1, p_);
    auto ker = fp::kernel(m, p_);
    require(ker.size() == size_t(d0_) * e, "subfield dimension");
    std::vector<Elt> basis;
    basis.reserve(ker.size());
    for (auto& v : ker) basis.push_back(Elt{v});
    return basis;
}

std::vector<Elt> FieldCtx::subfield_elements(unsigned e) const {
    auto basis = subfield_basis(e);
    u64 count = checked_pow(p_, unsigned(basis.size()), "subfield_elements");
    if (count > kEnumerationGuard) throw GuardError("subfield_elements: subfield too large to enumerate");
    std::vector<Elt> out;
    out.reserve(count);
    for (u64 idx = 0; idx < count; ++idx) {
        Elt acc = zero();
        u64 rest = idx;
        for (auto& b : basis) {
            u32 digit = u32(rest % p_);
            rest /= p_;
            if (digit) {
                Elt term = b;
                for (auto& x : term.c) x = fp::mul(x, digit, p_);
                acc = add(acc, term);
            }
        }
        out.push_back(acc);
    }
    return out;
}

Elt FieldCtx::random_element(Rng& rng) const {
    Elt e = zero();
    for (unsigned i = 0; i < k_; ++i) e.c[i] = u32(rng.below(p_));
    return e;
}

// --- text formats -----------------------------------------------------------

std::string elt_to_string(const FieldCtx& F, const Elt& a) {
    if (F.is_scalar(a)) return std::to_string(a.c[0]);
    std::string s;
    for (unsigned i = 0; i < F.k(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.c[i]);
    }
    return s;
}

Elt parse_elt(const FieldCtx& F, const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    if (body.empty()) throw DomainError("parse_elt: empty element");
    std::vector<i64> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw DomainError("parse_elt: empty coordinate in '" + text + "'");
        size_t pos = 0;
        i64 v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw DomainError("parse_elt: bad coordinate '" + tok + "'");
        }
        if (pos != tok.size()) throw DomainError("parse_elt: bad coordinate '" + tok + "'");
        vals.push_back(v);
    }
    if (vals.size() != 1 && vals.size() != F.k())
        throw DomainError("parse_elt: expected 1 or k coordinates in '" + text + "'");
    Elt e = F.zero();
    for (size_t i = 0; i < vals.size(); ++i) e.c[i] = fp::norm(vals[i], F.p());
    return e;
}

FieldCtx parse_field_spec(const std::string& spec) {
    std::optional<u32> p;
    std::optional<unsigned> d0, d;
    std::optional<std::vector<i64>> mod;
    u64 seed = 0;
    bool in_mod = false;
    std::stringstream ss(spec);
    std::string tok;
    auto parse_i64 = [](const std::string& s, const char* what) {
        size_t pos = 0;
        i64 v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw DomainError(std::string("field spec: bad ") + what + " '" + s + "'");
        }
        if (pos != s.size()) throw DomainError(std::string("field spec: bad ") + what + " '" + s + "'");
        return v;
    };
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (!in_mod) throw DomainError("field spec: unexpected token '" + tok + "'");
            mod->push_back(parse_i64(tok, "modulus coefficient"));
            continue;
        }
        in_mod = false;
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "p") p = u32(parse_i64(val, "p"));
        else if (key == "d0") d0 = unsigned(parse_i64(val, "d0"));
        else if (key == "d") d = unsigned(parse_i64(val, "d"));
        else if (key == "seed") seed = u64(parse_i64(val, "seed"));
        else if (key == "mod") {
            mod.emplace();
            mod->push_back(parse_i64(val, "modulus coefficient"));
            in_mod = true;
        } else throw DomainError("field spec: unknown key '" + key + "'");
    }
    if (!p || !d0 || !d) throw DomainError("field spec: p, d0 and d are required");
    return FieldCtx::make(*p, *d0, *d, mod ? &*mod : nullptr, seed);
}

std::string field_spec_string(const FieldCtx& F) {
    std::string s = "p=" + std::to_string(F.p()) + ",d0=" + std::to_string(F.d0()) +
                    ",d=" + std::to_string(F.d()) + ",mod=";
    const fp::Poly& m = F.modulus();
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

}  // namespace orecomp
