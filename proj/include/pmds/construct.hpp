#pragma once

#include "pmds/pmds_core.hpp"

namespace pmds {

enum class SeedRole { Interior, Last };

/// Seed MDS generator for one block of the s=1 construction: a systematic
/// [ell+r+1, ell] generator (I | N) derived from a (doubly-)extended
/// Reed-Solomon code, row-scaled so that the last column of N (interior
/// role) or its first column (last role) is all ones. For ell = 1 the
/// seed is the all-ones repetition row, which works over every field.
MatrixGF seed_from_rs(const FieldPtr& field, std::size_t ell, std::size_t r, SeedRole role);

/// Seeds for the one-global-parity construction: per-block MDS generators
/// shaped so the assembled code is partial-MDS.
struct S1Blueprint {
    PmdsParams params;             // s = 1
    FieldPtr field;
    std::vector<MatrixGF> interior_seeds;  // ell x (ell+r_i+1), i = 0..m-2
    MatrixGF last_seed;                    // ell x (ell+r_{m-1}+1)

    /// Canonical blueprint built from seed_from_rs.
    static S1Blueprint canonical(const PmdsParams& params, const FieldPtr& field);

    /// Checks the structural invariants: systematic seeds, all-ones
    /// column in the right position, and the MDS property of each seed.
    void validate() const;
};

/// Assembles the generator matrix of an [n, m*ell-1, ell; r_1..r_m]
/// partial-MDS code from a validated blueprint. The output is
/// (m*ell-1) x n and deterministic in its inputs.
MatrixGF assemble_s1(const S1Blueprint& blueprint);

/// assemble_s1 over the canonical Reed-Solomon blueprint. Errors when the
/// field is smaller than field_size_bound_s1 allows.
MatrixGF build_s1(const PmdsParams& params, const FieldPtr& field);

/// The explicit locality-1, s=1 pattern: row i carries ones on block i
/// and on the last block. Works over every field.
MatrixGF build_ell1_s1(const PmdsParams& params, const FieldPtr& field);

/// Locality-1 construction for any number of global parities: expands an
/// [m, m-s]-MDS generator by repeating column j into r_j+1 copies.
/// Requires q >= m-1, or q >= m-2 when m = q+2 with q = 2^h and
/// m-s in {3, q-1}.
MatrixGF build_ell1_general_s(std::size_t m, std::size_t s, const std::vector<std::size_t>& r,
                              const FieldPtr& field);

}  // namespace pmds
