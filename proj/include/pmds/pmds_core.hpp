#pragma once

#include <functional>
#include <optional>

#include "pmds/mds.hpp"

namespace pmds {

/// Parameters of a partial-MDS code: m disjoint locality blocks, shared
/// locality ell, per-block local redundancies r[0..m-1], and code
/// dimension k. Derived: n = sum(r_i + ell), s = m*ell - k.
class PmdsParams {
public:
    static PmdsParams make(std::size_t m, std::size_t ell, std::vector<std::size_t> r,
                           std::size_t k);

    std::size_t m() const noexcept { return m_; }
    std::size_t ell() const noexcept { return ell_; }
    std::size_t k() const noexcept { return k_; }
    const std::vector<std::size_t>& r() const noexcept { return r_; }

    std::size_t n() const noexcept { return n_; }
    std::size_t s() const noexcept { return m_ * ell_ - k_; }
    std::size_t max_r() const;

    /// Block i spans columns [block_begin(i), block_begin(i) + block_size(i)).
    std::size_t block_begin(std::size_t i) const;
    std::size_t block_size(std::size_t i) const { return r_.at(i) + ell_; }
    std::size_t block_of(std::size_t col) const;

    /// Global column indices of block i, in order.
    std::vector<std::size_t> block_columns(std::size_t i) const;

private:
    PmdsParams() = default;
    std::size_t m_ = 0, ell_ = 0, k_ = 0, n_ = 0;
    std::vector<std::size_t> r_;
};

/// A set of erased coordinate positions, kept sorted and unique.
class ErasurePattern {
public:
    ErasurePattern() = default;
    /// Validates: indices unique and < n.
    static ErasurePattern make(std::vector<std::size_t> erased, std::size_t n);

    const std::vector<std::size_t>& erased() const noexcept { return erased_; }
    std::size_t size() const noexcept { return erased_.size(); }
    bool contains(std::size_t idx) const;

    /// Number of erased coordinates inside each block.
    std::vector<std::size_t> per_block_counts(const PmdsParams& params) const;

    /// Total erasures beyond the per-block budgets: sum of
    /// max(0, count_i - r_i). The pattern is inside the guaranteed
    /// correction family exactly when this is <= s.
    std::size_t overflow(const PmdsParams& params) const;

    /// Columns of [0, n) not erased, in order.
    std::vector<std::size_t> surviving(std::size_t n) const;

    friend bool operator==(const ErasurePattern& a, const ErasurePattern& b) {
        return a.erased_ == b.erased_;
    }

private:
    std::vector<std::size_t> erased_;
};

enum class PmdsFailureStage { None, BlockMds, PuncturedMds };

/// Witness that some block's restriction is not an [r_i + ell, ell]-MDS code.
struct BlockWitness {
    std::size_t block = 0;
    std::size_t row_space_dim = 0;  // actual dimension of the block's row space
    std::optional<MdsReport> mds;   // present when the dimension was right but MDS failed
};

/// Witness that one puncture choice leaves a non-MDS code: the erased
/// columns (r_i per block, global indices) and the failing column subset.
/// The subset indices refer to the punctured matrix, i.e. to the
/// surviving columns in order.
struct PunctureWitness {
    std::vector<std::size_t> erased;
    MdsReport mds;
};

struct PmdsVerdict {
    bool is_pmds = false;
    PmdsFailureStage failing_stage = PmdsFailureStage::None;
    std::optional<BlockWitness> block_witness;
    std::optional<PunctureWitness> puncture_witness;
};

/// Brute-force ground truth, straight from the definition: checks that
/// every block restriction spans an ell-dimensional [r_i+ell, ell]-MDS
/// row space, and that every choice of exactly r_i erasures per block
/// leaves an [m*ell, k]-MDS code. Failure witnesses are reported for the
/// lexicographically first failing puncture.
PmdsVerdict pmds_oracle(const MatrixGF& g, const PmdsParams& params);

/// True iff the surviving columns of G still have rank k, i.e. erased
/// coordinates are uniquely recoverable.
bool pattern_correctable(const MatrixGF& g, const ErasurePattern& pattern);

/// Visits every erasure pattern with at most r_i erasures per block plus
/// at most s extra anywhere, deduplicated, in lexicographic order
/// (shorter prefixes first).
void for_each_family_pattern(const PmdsParams& params,
                             const std::function<void(const ErasurePattern&)>& fn);

/// Materialized form of for_each_family_pattern.
std::vector<ErasurePattern> pmds_pattern_family(const PmdsParams& params);

enum class MrCounterexampleKind { FamilyPatternUncorrectable, OverflowPatternCorrectable };

struct MrReport {
    bool is_mr = false;
    std::optional<ErasurePattern> counterexample;
    MrCounterexampleKind kind = MrCounterexampleKind::FamilyPatternUncorrectable;
};

/// Maximal-recoverability check over all 2^n erasure patterns: every
/// family pattern must be correctable, and every pattern whose total size
/// exceeds the affected blocks' budgets plus s must be uncorrectable.
/// Assumes g already passed pmds_oracle.
MrReport mr_check(const MatrixGF& g, const PmdsParams& params);

struct TrivialCaseReport {
    bool oracle_pmds = false;
    bool plain_mds = false;
    bool agree = false;
};

/// For k = ell the partial-MDS property collapses to plain MDS; runs both
/// checks and reports whether they agree.
TrivialCaseReport trivial_case_check(const MatrixGF& g, const PmdsParams& params);

/// How the existence of an [n,k]-MDS code over a given field was decided.
enum class MdsExistenceRoute {
    Impossible,      // k > n
    FullSpace,       // k = n
    Repetition,      // k = 1
    ParityCheck,     // k = n-1
    ReedSolomon,     // n <= q
    Extended,        // n <= q+1
    DoublyExtended,  // n = q+2, q = 2^h, k in {3, q-1}
    None,            // no construction within the Reed-Solomon bounds
};

struct MdsExistence {
    bool exists = false;
    MdsExistenceRoute route = MdsExistenceRoute::None;
    std::size_t n = 0, k = 0;
};

/// Decides [n,k]-MDS existence over the field constructively: trivial
/// families for k in {1, n-1, n}, otherwise the (doubly-)extended
/// Reed-Solomon bounds. A negative answer assumes the MDS conjecture.
MdsExistence mds_code_exists(const FieldPtr& field, std::size_t k, std::size_t n);

struct NecessaryConditionsReport {
    MdsExistence local;   // [ell + max_r + s, ell]-MDS
    MdsExistence global;  // [m*ell, m*ell - s]-MDS
    bool pass = false;
    /// True when a failed condition relies on the MDS conjecture.
    bool conjecture_conditional = false;
};

/// Necessary conditions for a PMDS code with the given parameters to
/// exist over the field; necessary but in general not sufficient.
NecessaryConditionsReport necessary_conditions_general_s(const PmdsParams& params,
                                                         const FieldPtr& field);

struct FieldBound {
    std::size_t min_q = 0;
    /// The impossibility below min_q assumes the MDS conjecture.
    bool conjecture_conditional = false;
    /// The bound was lowered by one by the doubly-extended exception.
    bool doubly_extended_case = false;
};

/// Smallest field size admitting an s=1 code with the given locality and
/// largest per-block redundancy.
FieldBound field_size_bound_s1(std::size_t ell, std::size_t max_r);

/// Field-size lower bound for s > 1 (requires ell, m, s all > 1);
/// the sharpest of the applicable cases.
FieldBound field_size_bound_general_s(const PmdsParams& params);

}  // namespace pmds
