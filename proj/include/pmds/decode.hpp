#pragma once

#include "pmds/classify.hpp"

namespace pmds {

/// Block-structured parity-check matrix of an s=1 code in standard form:
/// local duals on the diagonal, the last block's dual extended by one row,
/// and one coupling row per interior block that carries the global parity.
struct StructuredParityCheck {
    PmdsParams params;  // standard block order
    FieldPtr field;

    std::vector<MatrixGF> block_duals;  // B_i-perp: r_i x (r_i+ell)
    /// First r_m rows: parity of the whole last-block local code; last row
    /// completes the dual of A and meets the shared row nontrivially.
    MatrixGF a_dual;  // (r_m+1) x (r_m+ell)
    /// Nonzero (last) row of each X_i, solving M_i A-perp^T = -B_i X_i^T.
    std::vector<std::vector<std::uint32_t>> coupling_rows;

    MatrixGF h;  // assembled (n-k) x n

    /// Column mapping inherited from the standard form.
    std::vector<std::size_t> std_to_original;
};

/// Builds the structured parity-check matrix from a standard form.
StructuredParityCheck build_structured_h(const StandardForm& form);

/// A length-n word whose erased positions carry no value. Symbols are in
/// the code's original column order.
struct ReceivedWord {
    FieldPtr field;
    std::vector<std::optional<std::uint32_t>> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    ErasurePattern pattern() const;
};

struct DecodeStats {
    /// Multiplications and divisions spent inside the linear solves
    /// (elimination and back-substitution, including the augmented column).
    std::uint64_t solver_multiplications = 0;
    /// All multiplications, including syndrome accumulation and the final
    /// consistency check.
    std::uint64_t total_multiplications = 0;
    bool used_global_row = false;
    std::size_t blocks_solved = 0;
};

/// Erasure decoding along the block structure: blocks within their local
/// budget are solved from their own dual rows; the one block exceeding it
/// by the single global parity is solved with the coupling row appended.
/// The pattern must lie within the guaranteed family (overflow <= 1);
/// otherwise PatternOutsideFamilyError directs the caller to
/// decode_generic. A word that is not a corrupted codeword raises
/// DecodeFailureError.
std::vector<std::uint32_t> decode_erasures(const StructuredParityCheck& spc,
                                           const ReceivedWord& rw, DecodeStats* stats = nullptr);

struct GenericDecodeResult {
    bool correctable = false;
    std::vector<std::uint32_t> codeword;
    /// k minus the rank of the surviving columns, when uncorrectable.
    std::size_t rank_deficit = 0;
};

/// Rank-based fallback decoder for any generator matrix and pattern:
/// solves for the message on the surviving columns. Succeeds exactly when
/// the pattern is correctable.
GenericDecodeResult decode_generic(const MatrixGF& g, const ReceivedWord& rw);

/// message x G.
std::vector<std::uint32_t> encode(const MatrixGF& g, std::span<const std::uint32_t> message);

/// Encodes against the assembled standard form and maps the codeword back
/// to the original column order.
std::vector<std::uint32_t> encode(const StandardForm& form,
                                  std::span<const std::uint32_t> message);

}  // namespace pmds
