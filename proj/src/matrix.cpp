#include "pmds/matrix.hpp"

#include <algorithm>
#include <string>

namespace pmds {

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(rows * cols, 0) {
    if (!field_) throw InvalidArgumentError("matrix without a field");
    if (rows_ == 0 || cols_ == 0) throw InvalidArgumentError("matrix dimensions must be >= 1");
}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols,
                   std::initializer_list<std::uint32_t> values)
    : MatrixGF(std::move(field), rows, cols, std::vector<std::uint32_t>(values)) {}

MatrixGF::MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols,
                   std::vector<std::uint32_t> values)
    : field_(std::move(field)), rows_(rows), cols_(cols), values_(std::move(values)) {
    if (!field_) throw InvalidArgumentError("matrix without a field");
    if (rows_ == 0 || cols_ == 0) throw InvalidArgumentError("matrix dimensions must be >= 1");
    if (values_.size() != rows_ * cols_) {
        throw InvalidArgumentError("matrix value count does not match dimensions");
    }
    for (auto v : values_) field_->check_value(v);
}

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::size_t MatrixGF::index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InvalidArgumentError("matrix index out of range");
    return r * cols_ + c;
}

void MatrixGF::set(std::size_t r, std::size_t c, std::uint32_t v) {
    field_->check_value(v);
    values_[index(r, c)] = v;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.values_ == b.values_;
}

RrefResult rref(const MatrixGF& m) {
    const Field& f = *m.field();
    std::vector<std::uint32_t> v = m.values();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t p = lead;
        while (p < rows && v[p * cols + col] == 0) ++p;
        if (p == rows) continue;
        if (p != lead) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(v[p * cols + c], v[lead * cols + c]);
            }
        }
        const std::uint32_t piv_inv = f.inv(v[lead * cols + col]);
        for (std::size_t c = col; c < cols; ++c) {
            v[lead * cols + c] = f.mul(v[lead * cols + c], piv_inv);
        }
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == lead) continue;
            const std::uint32_t factor = v[rr * cols + col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                v[rr * cols + c] = f.sub(v[rr * cols + c], f.mul(factor, v[lead * cols + c]));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    const std::size_t rank = pivots.size();
    return {MatrixGF(m.field(), rows, cols, std::move(v)), rank, std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

Elem det(const MatrixGF& m) {
    if (m.rows() != m.cols()) throw InvalidArgumentError("determinant of a non-square matrix");
    const Field& f = *m.field();
    const std::size_t n = m.rows();
    std::vector<std::uint32_t> v = m.values();
    std::uint32_t d = 1;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && v[p * n + col] == 0) ++p;
        if (p == n) return Elem(0, m.field());
        if (p != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(v[p * n + c], v[col * n + c]);
            negate = !negate;
        }
        const std::uint32_t piv = v[col * n + col];
        d = f.mul(d, piv);
        const std::uint32_t piv_inv = f.inv(piv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint32_t factor = f.mul(v[r * n + col], piv_inv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < n; ++c) {
                v[r * n + c] = f.sub(v[r * n + c], f.mul(factor, v[col * n + c]));
            }
        }
    }
    if (negate) d = f.neg(d);
    return Elem(d, m.field());
}

MatrixGF select_columns(const MatrixGF& m, std::span<const std::size_t> idx) {
    if (idx.empty()) throw InvalidArgumentError("empty column selection");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= m.cols()) throw InvalidArgumentError("column index out of range");
        if (i > 0 && idx[i] <= idx[i - 1]) {
            throw InvalidArgumentError("column indices must be strictly increasing");
        }
    }
    MatrixGF out(m.field(), m.rows(), idx.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) out.set(r, c, m.at(r, idx[c]));
    }
    return out;
}

MatrixGF select_rows(const MatrixGF& m, std::span<const std::size_t> idx) {
    if (idx.empty()) throw InvalidArgumentError("empty row selection");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= m.rows()) throw InvalidArgumentError("row index out of range");
        if (i > 0 && idx[i] <= idx[i - 1]) {
            throw InvalidArgumentError("row indices must be strictly increasing");
        }
    }
    MatrixGF out(m.field(), idx.size(), m.cols());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(idx[r], c));
    }
    return out;
}

SolveResult solve(const MatrixGF& a, std::span<const std::uint32_t> b) {
    if (b.size() != a.rows()) throw InvalidArgumentError("solve: right-hand side length mismatch");
    MatrixGF aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        a.field()->check_value(b[r]);
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    // Inconsistent iff the RHS column is a pivot.
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == a.cols()) {
        return {SolveStatus::Inconsistent, {}, 0};
    }
    std::vector<std::uint32_t> x(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        x[rr.pivot_cols[i]] = rr.matrix.at(i, a.cols());
    }
    const std::size_t dim = a.cols() - rr.rank;
    return {dim == 0 ? SolveStatus::Unique : SolveStatus::Underdetermined, std::move(x), dim};
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
    require_same_field(*a.field(), *b.field());
    if (a.cols() != b.rows()) throw InvalidArgumentError("matrix product dimension mismatch");
    const Field& f = *a.field();
    MatrixGF out(a.field(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::uint32_t acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc = f.add(acc, f.mul(a.at(r, t), b.at(t, c)));
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

std::vector<std::uint32_t> row_times_matrix(std::span<const std::uint32_t> v, const MatrixGF& m) {
    if (v.size() != m.rows()) throw InvalidArgumentError("row-vector product dimension mismatch");
    const Field& f = *m.field();
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
        }
    }
    return out;
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF out(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    }
    return out;
}

MatrixGF hstack(const MatrixGF& left, const MatrixGF& right) {
    require_same_field(*left.field(), *right.field());
    if (left.rows() != right.rows()) throw InvalidArgumentError("hstack: row count mismatch");
    MatrixGF out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left.at(r, c));
        for (std::size_t c = 0; c < right.cols(); ++c) {
            out.set(r, left.cols() + c, right.at(r, c));
        }
    }
    return out;
}

MatrixGF vstack(const MatrixGF& top, const MatrixGF& bottom) {
    require_same_field(*top.field(), *bottom.field());
    if (top.cols() != bottom.cols()) throw InvalidArgumentError("vstack: column count mismatch");
    MatrixGF out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        for (std::size_t c = 0; c < bottom.cols(); ++c) {
            out.set(top.rows() + r, c, bottom.at(r, c));
        }
    }
    return out;
}

MatrixGF inverse(const MatrixGF& m) {
    if (m.rows() != m.cols()) throw InvalidArgumentError("inverse of a non-square matrix");
    RrefResult rr = rref(hstack(m, MatrixGF::identity(m.field(), m.rows())));
    // The augmented matrix always has full row rank; the left block is
    // invertible exactly when all pivots fall inside it.
    if (rr.pivot_cols[m.rows() - 1] != m.rows() - 1) {
        throw InvalidArgumentError("matrix is singular");
    }
    std::vector<std::size_t> right(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) right[i] = m.cols() + i;
    return select_columns(rr.matrix, right);
}

MatrixGF nullspace(const MatrixGF& m) {
    const Field& f = *m.field();
    RrefResult rr = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == c) {
                ++p;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    if (free_cols.empty()) {
        throw InvalidArgumentError("null space is trivial");
    }
    MatrixGF out(m.field(), free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        out.set(i, fc, 1);
        for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p) {
            out.set(i, rr.pivot_cols[p], f.neg(rr.matrix.at(p, fc)));
        }
    }
    return out;
}

}  // namespace pmds
