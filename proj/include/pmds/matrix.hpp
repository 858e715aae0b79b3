#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "pmds/field.hpp"

namespace pmds {

/// Dense matrix over a single finite field, entries stored row-major as
/// canonical representatives. All linear-algebra operations are pure:
/// inputs are never modified and results are returned as new matrices.
class MatrixGF {
public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols);
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols,
             std::initializer_list<std::uint32_t> values);
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols,
             std::vector<std::uint32_t> values);

    static MatrixGF identity(FieldPtr field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return values_[index(r, c)]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v);
    Elem elem(std::size_t r, std::size_t c) const { return Elem(at(r, c), field_); }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {values_.data() + r * cols_, cols_};
    }
    const std::vector<std::uint32_t>& values() const noexcept { return values_; }

    friend bool operator==(const MatrixGF& a, const MatrixGF& b);
    friend bool operator!=(const MatrixGF& a, const MatrixGF& b) { return !(a == b); }

private:
    std::size_t index(std::size_t r, std::size_t c) const;

    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> values_;
};

struct RrefResult {
    MatrixGF matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivoting takes the first nonzero entry in
/// column order; there is no magnitude to prefer in a finite field.
RrefResult rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

/// Exact determinant of a square matrix via Gaussian elimination.
Elem det(const MatrixGF& m);

/// Submatrix on the listed columns (indices strictly increasing, nonempty).
MatrixGF select_columns(const MatrixGF& m, std::span<const std::size_t> idx);
MatrixGF select_rows(const MatrixGF& m, std::span<const std::size_t> idx);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status;
    /// A solution with all free variables set to zero (when consistent).
    std::vector<std::uint32_t> solution;
    /// Dimension of the solution space (when consistent).
    std::size_t solution_space_dim = 0;
};

/// Solves A x = b, reporting one solution plus the solution-space dimension,
/// or inconsistency.
SolveResult solve(const MatrixGF& a, std::span<const std::uint32_t> b);

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);
std::vector<std::uint32_t> row_times_matrix(std::span<const std::uint32_t> v, const MatrixGF& m);

MatrixGF transpose(const MatrixGF& m);
MatrixGF hstack(const MatrixGF& left, const MatrixGF& right);
MatrixGF vstack(const MatrixGF& top, const MatrixGF& bottom);

/// Inverse of a square invertible matrix.
MatrixGF inverse(const MatrixGF& m);

/// Basis of the right null space { x : M x = 0 }, one vector per row,
/// ordered by ascending free-column index.
MatrixGF nullspace(const MatrixGF& m);

}  // namespace pmds
