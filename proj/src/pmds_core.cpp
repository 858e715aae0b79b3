#include "pmds/pmds_core.hpp"

#include <algorithm>
#include <string>

namespace pmds {

namespace {

constexpr std::size_t kMaxExhaustiveLength = 20;

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t t = idx.size();
    for (std::size_t i = t; i-- > 0;) {
        if (idx[i] + (t - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

PmdsParams PmdsParams::make(std::size_t m, std::size_t ell, std::vector<std::size_t> r,
                            std::size_t k) {
    if (m < 1) throw InvalidArgumentError("need at least one block");
    if (ell < 1) throw InvalidArgumentError("locality must be >= 1");
    if (r.size() != m) throw InvalidArgumentError("need one local redundancy per block");
    for (auto ri : r) {
        if (ri < 1) throw InvalidArgumentError("every block redundancy must be >= 1");
    }
    if (k < ell || k > m * ell) {
        throw InvalidArgumentError("dimension must satisfy ell <= k <= m*ell");
    }
    PmdsParams p;
    p.m_ = m;
    p.ell_ = ell;
    p.k_ = k;
    p.r_ = std::move(r);
    p.n_ = 0;
    for (auto ri : p.r_) p.n_ += ri + ell;
    return p;
}

std::size_t PmdsParams::max_r() const { return *std::max_element(r_.begin(), r_.end()); }

std::size_t PmdsParams::block_begin(std::size_t i) const {
    if (i >= m_) throw InvalidArgumentError("block index out of range");
    std::size_t begin = 0;
    for (std::size_t j = 0; j < i; ++j) begin += block_size(j);
    return begin;
}

std::size_t PmdsParams::block_of(std::size_t col) const {
    std::size_t begin = 0;
    for (std::size_t i = 0; i < m_; ++i) {
        begin += block_size(i);
        if (col < begin) return i;
    }
    throw InvalidArgumentError("column index out of range");
}

std::vector<std::size_t> PmdsParams::block_columns(std::size_t i) const {
    const std::size_t begin = block_begin(i);
    std::vector<std::size_t> cols(block_size(i));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = begin + j;
    return cols;
}

ErasurePattern ErasurePattern::make(std::vector<std::size_t> erased, std::size_t n) {
    std::sort(erased.begin(), erased.end());
    for (std::size_t i = 0; i < erased.size(); ++i) {
        if (erased[i] >= n) throw InvalidArgumentError("erased index out of range");
        if (i > 0 && erased[i] == erased[i - 1]) {
            throw InvalidArgumentError("duplicate erased index");
        }
    }
    ErasurePattern p;
    p.erased_ = std::move(erased);
    return p;
}

bool ErasurePattern::contains(std::size_t idx) const {
    return std::binary_search(erased_.begin(), erased_.end(), idx);
}

std::vector<std::size_t> ErasurePattern::per_block_counts(const PmdsParams& params) const {
    std::vector<std::size_t> counts(params.m(), 0);
    for (auto e : erased_) ++counts[params.block_of(e)];
    return counts;
}

std::size_t ErasurePattern::overflow(const PmdsParams& params) const {
    auto counts = per_block_counts(params);
    std::size_t over = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > params.r()[i]) over += counts[i] - params.r()[i];
    }
    return over;
}

std::vector<std::size_t> ErasurePattern::surviving(std::size_t n) const {
    std::vector<std::size_t> out;
    out.reserve(n - erased_.size());
    std::size_t pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (pos < erased_.size() && erased_[pos] == c) {
            ++pos;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

PmdsVerdict pmds_oracle(const MatrixGF& g, const PmdsParams& params) {
    const std::size_t k = params.k(), n = params.n(), m = params.m(), ell = params.ell();
    if (g.rows() != k || g.cols() != n) {
        throw InvalidArgumentError("generator dimensions do not match the parameters");
    }
    if (rank(g) < k) throw InvalidArgumentError("generator is rank-deficient");

    // Condition (a): each block restriction spans an ell-dimensional
    // [r_i + ell, ell]-MDS row space.
    for (std::size_t i = 0; i < m; ++i) {
        MatrixGF block = select_columns(g, params.block_columns(i));
        RrefResult rr = rref(block);
        if (rr.rank != ell) {
            return {false, PmdsFailureStage::BlockMds,
                    BlockWitness{i, rr.rank, std::nullopt}, std::nullopt};
        }
        std::vector<std::size_t> basis_rows(ell);
        for (std::size_t j = 0; j < ell; ++j) basis_rows[j] = j;
        MdsReport rep = detail::mds_scan(select_rows(rr.matrix, basis_rows));
        if (!rep.is_mds) {
            return {false, PmdsFailureStage::BlockMds, BlockWitness{i, rr.rank, rep},
                    std::nullopt};
        }
    }

    // Condition (b): every choice of exactly r_i erasures per block leaves
    // an [m*ell, k]-MDS code. Punctures advance in lexicographic order of
    // their global erased-index lists.
    std::vector<std::vector<std::size_t>> choice(m);
    for (std::size_t i = 0; i < m; ++i) {
        choice[i].resize(params.r()[i]);
        for (std::size_t j = 0; j < choice[i].size(); ++j) choice[i][j] = j;
    }
    for (;;) {
        std::vector<std::size_t> erased;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t begin = params.block_begin(i);
            for (auto local : choice[i]) erased.push_back(begin + local);
        }
        ErasurePattern pattern = ErasurePattern::make(erased, n);
        MatrixGF punctured = select_columns(g, pattern.surviving(n));
        MdsReport rep = detail::mds_scan(punctured);
        if (!rep.is_mds) {
            return {false, PmdsFailureStage::PuncturedMds, std::nullopt,
                    PunctureWitness{std::move(erased), rep}};
        }
        // Odometer over per-block combinations, last block fastest.
        std::size_t i = m;
        while (i-- > 0) {
            if (next_combination(choice[i], params.block_size(i))) break;
            for (std::size_t j = 0; j < choice[i].size(); ++j) choice[i][j] = j;
            if (i == 0) return {true, PmdsFailureStage::None, std::nullopt, std::nullopt};
        }
    }
}

bool pattern_correctable(const MatrixGF& g, const ErasurePattern& pattern) {
    const std::size_t k = g.rows();
    auto kept = pattern.surviving(g.cols());
    if (kept.size() < k) return false;
    return rank(select_columns(g, kept)) == k;
}

void for_each_family_pattern(const PmdsParams& params,
                             const std::function<void(const ErasurePattern&)>& fn) {
    const std::size_t n = params.n(), s = params.s();
    std::vector<std::size_t> current;
    std::vector<std::size_t> counts(params.m(), 0);
    std::size_t overflow_used = 0;

    const std::function<void(std::size_t)> recurse = [&](std::size_t start) {
        fn(ErasurePattern::make(current, n));
        for (std::size_t j = start; j < n; ++j) {
            const std::size_t b = params.block_of(j);
            const std::size_t extra = counts[b] >= params.r()[b] ? 1 : 0;
            if (overflow_used + extra > s) continue;
            ++counts[b];
            overflow_used += extra;
            current.push_back(j);
            recurse(j + 1);
            current.pop_back();
            overflow_used -= extra;
            --counts[b];
        }
    };
    recurse(0);
}

std::vector<ErasurePattern> pmds_pattern_family(const PmdsParams& params) {
    std::vector<ErasurePattern> out;
    for_each_family_pattern(params, [&](const ErasurePattern& p) { out.push_back(p); });
    return out;
}

MrReport mr_check(const MatrixGF& g, const PmdsParams& params) {
    const std::size_t n = params.n(), s = params.s();
    if (n > kMaxExhaustiveLength) {
        throw InvalidArgumentError("mr_check enumerates all 2^n patterns; n is too large");
    }

    std::vector<std::size_t> current;
    std::vector<std::size_t> counts(params.m(), 0);
    std::optional<MrReport> failure;

    // Every subset of coordinates, in lexicographic order, stopping at the
    // first counterexample of either kind.
    const std::function<void(std::size_t)> recurse = [&](std::size_t start) {
        if (failure) return;
        ErasurePattern pattern = ErasurePattern::make(current, n);
        std::size_t overflow = 0;
        std::size_t affected_budget = 0;
        for (std::size_t i = 0; i < params.m(); ++i) {
            if (counts[i] > params.r()[i]) overflow += counts[i] - params.r()[i];
            if (counts[i] > 0) affected_budget += params.r()[i];
        }
        const bool in_family = overflow <= s;
        const bool over_budget = pattern.size() > affected_budget + s;
        if (in_family && !pattern_correctable(g, pattern)) {
            failure = MrReport{false, pattern, MrCounterexampleKind::FamilyPatternUncorrectable};
            return;
        }
        if (over_budget && pattern_correctable(g, pattern)) {
            failure = MrReport{false, pattern, MrCounterexampleKind::OverflowPatternCorrectable};
            return;
        }
        for (std::size_t j = start; j < n && !failure; ++j) {
            ++counts[params.block_of(j)];
            current.push_back(j);
            recurse(j + 1);
            current.pop_back();
            --counts[params.block_of(j)];
        }
    };
    recurse(0);
    if (failure) return *failure;
    return {true, std::nullopt, MrCounterexampleKind::FamilyPatternUncorrectable};
}

TrivialCaseReport trivial_case_check(const MatrixGF& g, const PmdsParams& params) {
    if (params.k() != params.ell()) {
        throw InvalidArgumentError("trivial_case_check requires k = ell");
    }
    TrivialCaseReport rep;
    rep.oracle_pmds = pmds_oracle(g, params).is_pmds;
    rep.plain_mds = is_mds_generator(g).is_mds;
    rep.agree = rep.oracle_pmds == rep.plain_mds;
    return rep;
}

MdsExistence mds_code_exists(const FieldPtr& field, std::size_t k, std::size_t n) {
    const std::uint32_t q = field->order();
    MdsExistence e;
    e.k = k;
    e.n = n;
    if (k > n) {
        e.exists = false;
        e.route = MdsExistenceRoute::Impossible;
        return e;
    }
    e.exists = true;
    if (k == n) {
        e.route = MdsExistenceRoute::FullSpace;
    } else if (k == 1) {
        e.route = MdsExistenceRoute::Repetition;
    } else if (k == n - 1) {
        e.route = MdsExistenceRoute::ParityCheck;
    } else if (n <= q) {
        e.route = MdsExistenceRoute::ReedSolomon;
    } else if (n <= q + 1) {
        e.route = MdsExistenceRoute::Extended;
    } else if (n == q + 2 && field->characteristic() == 2 && (k == 3 || k == q - 1)) {
        e.route = MdsExistenceRoute::DoublyExtended;
    } else {
        e.exists = false;
        e.route = MdsExistenceRoute::None;
    }
    return e;
}

NecessaryConditionsReport necessary_conditions_general_s(const PmdsParams& params,
                                                         const FieldPtr& field) {
    NecessaryConditionsReport rep;
    const std::size_t s = params.s();
    rep.local = mds_code_exists(field, params.ell(), params.ell() + params.max_r() + s);
    rep.global = mds_code_exists(field, params.m() * params.ell() - s, params.m() * params.ell());
    rep.pass = rep.local.exists && rep.global.exists;
    // A constructive "yes" is unconditional; a "no" within the
    // Reed-Solomon bounds assumes the MDS conjecture.
    rep.conjecture_conditional =
        (!rep.local.exists && rep.local.route == MdsExistenceRoute::None) ||
        (!rep.global.exists && rep.global.route == MdsExistenceRoute::None);
    return rep;
}

namespace {

/// True when value = 2^h + 1 for some h > 1 with ell in {3, 2^h - 1}.
bool doubly_extended_exception_s1(std::size_t ell, std::size_t sum) {
    for (unsigned h = 2; h <= 30; ++h) {
        const std::size_t pow2 = std::size_t{1} << h;
        if (pow2 + 1 == sum && (ell == 3 || ell == pow2 - 1)) return true;
    }
    return false;
}

/// True when n = 2^h + 2 for some h >= 1 with dim in {3, 2^h - 1}.
bool doubly_extended_exception(std::size_t dim, std::size_t n) {
    for (unsigned h = 1; h <= 30; ++h) {
        const std::size_t pow2 = std::size_t{1} << h;
        if (pow2 + 2 == n && (dim == 3 || dim == pow2 - 1)) return true;
    }
    return false;
}

}  // namespace

FieldBound field_size_bound_s1(std::size_t ell, std::size_t max_r) {
    if (ell < 1) throw InvalidArgumentError("locality must be >= 1");
    if (ell == 1) {
        return {2, false, false};
    }
    if (doubly_extended_exception_s1(ell, max_r + ell)) {
        return {max_r + ell - 1, true, true};
    }
    return {max_r + ell, true, false};
}

FieldBound field_size_bound_general_s(const PmdsParams& params) {
    const std::size_t s = params.s();
    if (params.ell() == 1) {
        throw InvalidArgumentError(
            "bound requires ell > 1; for ell = 1 use the concatenation construction bound "
            "(q >= m-1, or m-2 in the doubly-extended case)");
    }
    if (s <= 1) {
        throw InvalidArgumentError("bound requires s > 1; for s = 1 use field_size_bound_s1");
    }
    if (params.m() <= 1) throw InvalidArgumentError("bound requires m > 1");

    const std::size_t a = params.ell() + params.max_r() + s;  // local side
    const std::size_t b = params.m() * params.ell();          // global side
    FieldBound bound{std::max(a, b) - 2, true, false};
    if (a <= b && !doubly_extended_exception(params.ell(), a)) {
        bound.min_q = std::max(bound.min_q, a - 1);
    }
    if (b <= a && !doubly_extended_exception(params.m() * params.ell() - s, b)) {
        bound.min_q = std::max(bound.min_q, b - 1);
    }
    return bound;
}

}  // namespace pmds
