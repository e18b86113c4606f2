#pragma once

#include <optional>
#include <vector>

#include "p2mnf/exactlin.hpp"

namespace p2mnf {

// Builder for linear systems whose unknowns are matrices and whose equations
// are sums of terms  +/- L * X * R  set to zero.  Row-major vectorization on
// both sides; omitted L or R means an identity of the matching size.
class LinSys {
public:
    explicit LinSys(FieldSpec field) : field_(field) {}

    int add_var(int rows, int cols);
    void begin_eq(int rows, int cols);
    void add_term(int var, const ExactMat* left, const ExactMat* right,
                  bool negate = false);

    int var_dim() const { return var_dim_; }
    int eq_dim() const { return eq_dim_; }

    ExactMat matrix() const;
    int rank() const;
    int nullity() const { return var_dim() - rank(); }
    int corank() const { return eq_dim() - rank(); }

private:
    struct Var {
        int rows, cols, offset;
    };
    struct Term {
        int var;
        std::optional<ExactMat> left, right;
        bool negate;
    };
    struct Block {
        int rows, cols, offset;
        std::vector<Term> terms;
    };

    FieldSpec field_;
    std::vector<Var> vars_;
    std::vector<Block> blocks_;
    int var_dim_ = 0;
    int eq_dim_ = 0;
    mutable std::optional<int> rank_;
};

}  // namespace p2mnf
