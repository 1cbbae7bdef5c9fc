// Arithmetic in F_p, dense polynomials over F_p and small F_p matrices.
// These are the building blocks for the extension field layer; p is a
// runtime prime that fits comfortably in 32 bits.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orecomp/errors.hpp"

namespace orecomp::fp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u32 norm(i64 v, u32 p) {
    i64 m = v % static_cast<i64>(p);
    return static_cast<u32>(m < 0 ? m + p : m);
}

inline u32 add(u32 a, u32 b, u32 p) { u64 s = u64(a) + b; return u32(s >= p ? s - p : s); }
inline u32 sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : u32(u64(a) + p - b); }
inline u32 neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 mul(u32 a, u32 b, u32 p) { return u32((u64(a) * b) % p); }

inline u32 pow(u32 a, u64 e, u32 p) {
    u32 acc = 1 % p;
    while (e) {
        if (e & 1) acc = mul(acc, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return acc;
}

inline u32 inv(u32 a, u32 p) {
    if (a == 0) throw DomainError("fp::inv: zero has no inverse");
    return pow(a, u64(p) - 2, p);  // p prime
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, coefficients constant-first, trailing zeros
// trimmed; the zero polynomial is the empty vector.

using Poly = std::vector<u32>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return int(f.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b, u32 p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        u32 x = i < a.size() ? a[i] : 0;
        u32 y = i < b.size() ? b[i] : 0;
        c[i] = add(x, y, p);
    }
    trim(c);
    return c;
}

inline Poly poly_sub(const Poly& a, const Poly& b, u32 p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        u32 x = i < a.size() ? a[i] : 0;
        u32 y = i < b.size() ? b[i] : 0;
        c[i] = sub(x, y, p);
    }
    trim(c);
    return c;
}

inline Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
    trim(c);
    return c;
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, u32 p) {
    if (b.empty()) throw DomainError("fp::poly_divmod: division by zero polynomial");
    Poly r = a, q;
    int db = deg(b);
    u32 lc_inv = inv(b.back(), p);
    if (deg(r) >= db) q.assign(deg(r) - db + 1, 0);
    while (deg(r) >= db) {
        int shift = deg(r) - db;
        u32 c = mul(r.back(), lc_inv, p);
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + i] = sub(r[shift + i], mul(c, b[i], p), p);
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Poly poly_mod(const Poly& a, const Poly& b, u32 p) { return poly_divmod(a, b, p).second; }

inline Poly monic(const Poly& f, u32 p) {
    if (f.empty()) return f;
    Poly g = f;
    u32 c = inv(g.back(), p);
    for (auto& x : g) x = mul(x, c, p);
    return g;
}

inline Poly poly_gcd(Poly a, Poly b, u32 p) {
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u32 p) {
    return poly_mod(poly_mul(a, b, p), m, p);
}

inline Poly powmod(Poly base, u64 e, const Poly& m, u32 p) {
    Poly acc{1 % p};
    base = poly_mod(base, m, p);
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

// Inverse of a modulo m, m with invertible leading coefficient, gcd(a, m) = 1.
inline Poly inv_mod(const Poly& a, const Poly& m, u32 p) {
    // iterative extended Euclid keeping only the cofactor of a
    Poly r0 = m, r1 = poly_mod(a, m, p);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1, p);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (deg(r0) != 0) throw DomainError("fp::inv_mod: element not invertible");
    u32 c = inv(r0[0], p);
    for (auto& x : s0) x = mul(x, c, p);
    trim(s0);
    return s0;
}

// Irreducibility over F_p: y^{p^n} = y mod f and gcd(y^{p^{n/l}} - y, f) = 1
// for every prime l dividing n.
inline bool is_irreducible(const Poly& f, u32 p) {
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    Poly y{0, 1};
    auto frob_iter = [&](int count) {
        Poly h = poly_mod(y, f, p);
        for (int i = 0; i < count; ++i) h = powmod(h, p, f, p);
        return h;
    };
    if (frob_iter(n) != poly_mod(y, f, p)) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime_l = is_prime(u64(l));
        if (!prime_l) continue;
        Poly h = frob_iter(n / l);
        Poly g = poly_gcd(poly_sub(h, y, p), f, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Small dense matrices over F_p, row-major.

using Mat = std::vector<std::vector<u32>>;

inline Mat identity(size_t n) {
    Mat m(n, std::vector<u32>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline std::vector<u32> mat_vec(const Mat& m, const std::vector<u32>& v, u32 p) {
    std::vector<u32> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        u64 acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += u64(m[i][j]) * v[j];
        out[i] = u32(acc % p);
    }
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b, u32 p) {
    size_t n = a.size(), m = b[0].size(), l = b.size();
    Mat c(n, std::vector<u32>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < l; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                c[i][j] = add(c[i][j], mul(a[i][k], b[k][j], p), p);
        }
    return c;
}

inline Mat mat_pow(Mat m, u64 e, u32 p) {
    Mat acc = identity(m.size());
    while (e) {
        if (e & 1) acc = mat_mul(acc, m, p);
        m = mat_mul(m, m, p);
        e >>= 1;
    }
    return acc;
}

// Row reduce in place, returns the pivot column of each pivot row.
inline std::vector<size_t> rref(Mat& m, u32 p) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        u32 c = inv(m[rank][col], p);
        for (size_t j = col; j < cols; ++j) m[rank][j] = mul(m[rank][j], c, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            u32 f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = sub(m[i][j], mul(f, m[rank][j], p), p);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

// Solve A x = b; A is rows x cols, returns one solution if consistent.
inline std::optional<std::vector<u32>> solve(const Mat& a, const std::vector<u32>& b, u32 p) {
    if (a.empty()) return std::vector<u32>{};
    size_t rows = a.size(), cols = a[0].size();
    Mat aug(rows, std::vector<u32>(cols + 1, 0));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug, p);
    std::vector<u32> x(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // inconsistent row
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

// Basis of the right kernel of A.
inline std::vector<std::vector<u32>> kernel(Mat a, u32 p) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    auto pivots = rref(a, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u32>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<u32> v(cols, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = neg(a[i][free_col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Mat> inverse(const Mat& a, u32 p) {
    size_t n = a.size();
    Mat aug(n, std::vector<u32>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug, p);
    if (pivots.size() != n) return std::nullopt;
    Mat inv_m(n, std::vector<u32>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv_m[i][j] = aug[i][n + j];
    return inv_m;
}

}  // namespace orecomp::fp
