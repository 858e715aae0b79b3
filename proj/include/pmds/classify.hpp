#pragma once

#include <string>
#include <variant>

#include "pmds/construct.hpp"

namespace pmds {

/// Decomposition of an s=1 generator matrix into its block standard form:
/// interior blocks B_i = (I | x), the bottom block A, rank-one couplers
/// M_i, the nonzero multipliers alpha, and the shared tail entries. The
/// block placed in the "last" role is recorded so results can be mapped
/// back to the original column order.
struct StandardForm {
    PmdsParams params;  // in standard block order (last-role block last)
    FieldPtr field;

    std::vector<MatrixGF> blocks;        // B_1..B_{m-1}: ell x (ell+r_i), systematic
    std::optional<MatrixGF> a_block;     // A: (ell-1) x (ell+r_m); absent when ell = 1
    std::vector<MatrixGF> couplers;      // M_1..M_{m-1}: ell x (ell+r_m), rank 1

    /// alphas[i] has ell entries for i < m-1 and ell-1 entries for the
    /// last block (empty when ell = 1); all nonzero.
    std::vector<std::vector<std::uint32_t>> alphas;

    /// x values of the last block: row j is x_(j+1); the final row is the
    /// shared tail replicated through every coupler.
    MatrixGF x_last;  // ell x r_m

    /// block_order[std_position] = original block index.
    std::vector<std::size_t> block_order;
    std::size_t last_role_block = 0;

    std::span<const std::uint32_t> tail() const { return x_last.row(x_last.rows() - 1); }

    /// Reassembles the standard-order generator matrix.
    MatrixGF assemble() const;

    /// (B_i | alpha^(i)): the [ell+r_i+1, ell] seed whose MDS property
    /// block i must satisfy.
    MatrixGF b_hat(std::size_t i) const;

    /// (I | 1 | X) with X rows (tail, x_1, .., x_(ell-1)): the de-scaled
    /// [ell+r_m+1, ell] seed of the last block.
    MatrixGF a_hat() const;

    /// std_to_original[c] = original column of standard column c.
    std::vector<std::size_t> std_to_original_columns() const;
};

enum class ClassifyFailureKind {
    StandardizationImpossible,
    ZeroAlpha,
    BlockSeedNotMds,
    LastSeedNotMds,
};

struct ClassifyFailure {
    ClassifyFailureKind kind = ClassifyFailureKind::StandardizationImpossible;
    std::string detail;
    std::size_t block = 0;  // standard-order block index, where applicable
    std::optional<MdsReport> mds_witness;
};

/// Reduces G to standard form, trying the natural last block first and
/// then every other block in the last role. Failure to standardize
/// already proves the code is not partial-MDS.
std::variant<StandardForm, ClassifyFailure> standardize(const MatrixGF& g,
                                                        const PmdsParams& params);

struct ClassificationVerdict {
    bool is_pmds = false;
    std::optional<StandardForm> standard_form;
    std::optional<ClassifyFailure> failure;
};

/// The fast structural test for s=1: standardize, then check that every
/// (B_i | alpha^(i)) and the de-scaled last seed generate MDS codes.
/// Equivalent to pmds_oracle, at a fraction of the cost.
ClassificationVerdict classify_s1(const MatrixGF& g, const PmdsParams& params);

struct AgreementReport {
    bool agree = false;
    bool classify_is_pmds = false;
    bool oracle_is_pmds = false;
};

/// Runs classify_s1 and pmds_oracle on the same input; disagreement is a
/// build-breaking defect.
AgreementReport classify_equals_oracle(const MatrixGF& g, const PmdsParams& params);

/// A matrix with unknown entries to be filled during completion search.
struct TemplateMatrix {
    MatrixGF base;  // wildcard slots hold 0
    std::vector<std::pair<std::size_t, std::size_t>> wildcards;  // row-major order
};

struct CompletionResult {
    bool found = false;
    std::optional<MatrixGF> completion;
    std::uint64_t assignments_tried = 0;
};

/// Exhaustively fills wildcards in canonical element order (row-major
/// slot order, first slot most significant) and returns the first
/// assignment passing pmds_oracle, or reports that none exists. Throws
/// BudgetExceededError when q^wildcards would exceed the budget.
CompletionResult completion_search(const TemplateMatrix& tmpl, const PmdsParams& params,
                                   std::uint64_t budget);

/// Reorders the blocks of a generator matrix; new_order[i] names the
/// original block placed at position i. Returns the permuted matrix and
/// matching parameters.
std::pair<MatrixGF, PmdsParams> permute_blocks(const MatrixGF& g, const PmdsParams& params,
                                               std::span<const std::size_t> new_order);

}  // namespace pmds
