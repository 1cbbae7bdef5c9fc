// Small dense linear algebra over F_q (or any subfield of it closed under the
// ambient arithmetic: reducing vectors whose entries lie in F_{r^e} keeps all
// intermediate values inside F_{r^e}).
#pragma once

#include <optional>
#include <vector>

#include "orecomp/gf.hpp"

namespace orecomp {

// Incremental independence tracker. Vectors are absorbed one at a time; the
// first dependent vector is reported as a combination of the vectors absorbed
// before it, in insertion order.
class SpanTracker {
public:
    SpanTracker(const FieldCtx& F, size_t dim) : F_(&F), dim_(dim) {}

    size_t rank() const { return rows_.size(); }
    size_t inserted() const { return count_; }

    // Returns the coefficients c_i with v = sum c_i * v_i over previously
    // inserted vectors when v is dependent; nullopt when v was independent
    // (in which case it joins the basis).
    std::optional<std::vector<Elt>> add(const std::vector<Elt>& v);

private:
    struct Row {
        std::vector<Elt> v;      // reduced, pivot entry normalized to 1
        std::vector<Elt> combo;  // expression of v over the inserted vectors
        size_t pivot;
    };
    const FieldCtx* F_;
    size_t dim_;
    std::vector<Row> rows_;
    size_t count_ = 0;
};

// Basis of the right kernel of a rows x cols matrix.
std::vector<std::vector<Elt>> fq_kernel(const FieldCtx& F, std::vector<std::vector<Elt>> m);

// One solution of m x = b if consistent.
std::optional<std::vector<Elt>> fq_solve(const FieldCtx& F, std::vector<std::vector<Elt>> m,
                                         std::vector<Elt> b);

}  // namespace orecomp
