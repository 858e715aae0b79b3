#pragma once

#include <optional>
#include <utility>

#include "pmds/matrix.hpp"

namespace pmds {

/// Result of an exhaustive MDS check. When the code is not MDS the witness
/// is the lexicographically smallest set of k columns whose square
/// submatrix is singular.
struct MdsReport {
    bool is_mds = false;
    std::optional<std::vector<std::size_t>> witness;
};

/// True iff every rows x rows column-submatrix of G is invertible,
/// i.e. the row space of G is an MDS code. G must have full row rank.
MdsReport is_mds_generator(const MatrixGF& g);

namespace detail {
/// Subset scan without the full-row-rank precondition; a rank-deficient
/// matrix simply reports its first column subset as the singular witness.
MdsReport mds_scan(const MatrixGF& g);
}  // namespace detail

/// A minor that evaluated to zero: (row indices, column indices).
using MinorWitness = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

struct SuperregularReport {
    bool is_superregular = false;
    std::optional<MinorWitness> witness;
};

/// True iff every square minor of X, of every size, is nonzero.
/// (I | X) generates an MDS code exactly when X is superregular.
SuperregularReport is_superregular(const MatrixGF& x);

/// Row-scaling transform on a systematic generator (I | X): returns
/// (I | diag(alphas) X). The output generates an MDS code iff the input
/// does. All alphas must be nonzero and G must be systematic in its
/// first block of columns.
MatrixGF systematic_mds_equivalence(const MatrixGF& g, std::span<const std::uint32_t> alphas);

enum class RsVariant { Plain, Extended, DoublyExtended };

/// Generator matrix of an [n,k] (doubly-)extended Reed-Solomon code.
/// Rows are the evaluations of x^0..x^(k-1) at the first points of the
/// field's canonical element order, extended with the unit column
/// (0,..,0,1)^T and, for the doubly extended variant, (0,..,0,1,0)^T.
///
/// Bounds: plain needs n <= q, extended n <= q+1, doubly extended
/// n = q+2 with q = 2^h and k in {3, q-1}. The output is re-checked with
/// is_mds_generator before being returned.
MatrixGF rs_generator(const FieldPtr& field, std::size_t k, std::size_t n, RsVariant variant);

/// Row-equivalent matrix with an identity on the pivot columns
/// (default: the first linearly independent column set in order).
MatrixGF systematic_form(const MatrixGF& g,
                         std::optional<std::vector<std::size_t>> pivot_cols = std::nullopt);

/// (n-k) x n full-rank H with G H^T = 0. For G = (I | P) this is the
/// standard dual construction (-P^T | I). Errors when G is square
/// (empty dual) or rank deficient.
MatrixGF parity_check(const MatrixGF& g);

}  // namespace pmds
