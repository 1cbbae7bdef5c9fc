#include "orecomp/linalg.hpp"

namespace orecomp {

std::optional<std::vector<Elt>> SpanTracker::add(const std::vector<Elt>& v) {
    require(v.size() == dim_, "SpanTracker vector dimension");
    const FieldCtx& F = *F_;
    std::vector<Elt> w = v;
    std::vector<Elt> combo(count_ + 1, F.zero());
    combo[count_] = F.one();
    for (auto& row : rows_) {
        Elt c = w[row.pivot];
        if (F.is_zero(c)) continue;
        for (size_t j = 0; j < dim_; ++j) w[j] = F.sub(w[j], F.mul(c, row.v[j]));
        for (size_t j = 0; j < row.combo.size(); ++j)
            combo[j] = F.sub(combo[j], F.mul(c, row.combo[j]));
    }
    size_t pivot = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (!F.is_zero(w[j])) {
            pivot = j;
            break;
        }
    if (pivot == dim_) {
        // dependent: v = -sum_{i<count} combo_i v_i  (combo_count stayed 1)
        std::vector<Elt> out(count_, F.zero());
        for (size_t i = 0; i < count_; ++i) out[i] = F.neg(combo[i]);
        ++count_;
        return out;
    }
    Elt inv = F.inv(w[pivot]);
    for (auto& x : w) x = F.mul(inv, x);
    for (auto& x : combo) x = F.mul(inv, x);
    combo.resize(count_ + 1, F.zero());
    rows_.push_back(Row{std::move(w), std::move(combo), pivot});
    ++count_;
    return std::nullopt;
}

namespace {

// Row reduce in place; returns pivot columns.
std::vector<size_t> rref(const FieldCtx& F, std::vector<std::vector<Elt>>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && F.is_zero(m[sel][col])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        Elt inv = F.inv(m[rank][col]);
        for (size_t j = col; j < cols; ++j) m[rank][j] = F.mul(inv, m[rank][j]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            Elt c = m[i][col];
            if (F.is_zero(c)) continue;
            for (size_t j = col; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(c, m[rank][j]));
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Elt>> fq_kernel(const FieldCtx& F, std::vector<std::vector<Elt>> m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    auto pivots = rref(F, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elt>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elt> v(cols, F.zero());
        v[free_col] = F.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Elt>> fq_solve(const FieldCtx& F, std::vector<std::vector<Elt>> m,
                                         std::vector<Elt> b) {
    if (m.empty()) return std::vector<Elt>{};
    size_t cols = m[0].size();
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref(F, m);
    std::vector<Elt> x(cols, F.zero());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;
        x[pivots[i]] = m[i][cols];
    }
    return x;
}

}  // namespace orecomp
