#include "p2mnf/linsys.hpp"

namespace p2mnf {

int LinSys::add_var(int rows, int cols) {
    vars_.push_back({rows, cols, var_dim_});
    var_dim_ += rows * cols;
    return int(vars_.size()) - 1;
}

void LinSys::begin_eq(int rows, int cols) {
    blocks_.push_back({rows, cols, eq_dim_, {}});
    eq_dim_ += rows * cols;
    rank_.reset();
}

void LinSys::add_term(int var, const ExactMat* left, const ExactMat* right,
                      bool negate) {
    if (blocks_.empty()) throw MathError("InternalError", "add_term before begin_eq");
    Block& b = blocks_.back();
    const Var& v = vars_.at(std::size_t(var));
    int lrows = left ? left->rows() : v.rows;
    int lcols = left ? left->cols() : v.rows;
    int rrows = right ? right->rows() : v.cols;
    int rcols = right ? right->cols() : v.cols;
    if (lrows != b.rows || lcols != v.rows || rrows != v.cols || rcols != b.cols)
        throw MathError("ShapeMismatch", "term shape does not match equation block");
    b.terms.push_back(Term{var,
                           left ? std::optional<ExactMat>(*left) : std::nullopt,
                           right ? std::optional<ExactMat>(*right) : std::nullopt,
                           negate});
    rank_.reset();
}

ExactMat LinSys::matrix() const {
    ExactMat m = ExactMat::zeros(field_, eq_dim_, var_dim_);
    for (const Block& b : blocks_) {
        for (const Term& t : b.terms) {
            const Var& v = vars_[std::size_t(t.var)];
            // coefficient of X[p][q] in block entry (i,j) is L[i][p] * R[q][j]
            for (int i = 0; i < b.rows; ++i) {
                int p_lo = t.left ? 0 : i, p_hi = t.left ? v.rows : i + 1;
                for (int p = p_lo; p < p_hi; ++p) {
                    for (int j = 0; j < b.cols; ++j) {
                        int q_lo = t.right ? 0 : j, q_hi = t.right ? v.cols : j + 1;
                        for (int q = q_lo; q < q_hi; ++q) {
                            int row = b.offset + i * b.cols + j;
                            int col = v.offset + p * v.cols + q;
                            if (t.left && t.right)
                                m.add_product(row, col, *t.left, i, p, *t.right, q, j,
                                              t.negate);
                            else if (t.left)
                                m.add_entry(row, col, *t.left, i, p, t.negate);
                            else if (t.right)
                                m.add_entry(row, col, *t.right, q, j, t.negate);
                            else
                                m.add_unit(row, col, t.negate);
                        }
                    }
                }
            }
        }
    }
    return m;
}

int LinSys::rank() const {
    if (!rank_) rank_ = matrix().rank();
    return *rank_;
}

}  // namespace p2mnf
