#include "pmds/classify.hpp"

namespace pmds {

namespace {

MatrixGF apply_column_map(const MatrixGF& g, const std::vector<std::size_t>& col_of) {
    MatrixGF out(g.field(), g.rows(), col_of.size());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < col_of.size(); ++c) out.set(r, c, g.at(r, col_of[c]));
    }
    return out;
}

/// One standardization attempt with the block at `role` placed last.
std::variant<StandardForm, ClassifyFailure> standardize_with_role(const MatrixGF& g,
                                                                  const PmdsParams& params,
                                                                  std::size_t role) {
    const Field& f = *g.field();
    const std::size_t m = params.m(), ell = params.ell(), k = params.k();

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i) {
        if (i != role) order.push_back(i);
    }
    order.push_back(role);

    auto [gp, p] = permute_blocks(g, params, order);
    const std::size_t r_m = p.r().back();

    // Puncture to the first ell columns of every block; the first
    // m*ell - 1 of those columns must be invertible for the reduction
    // matrix S to exist.
    std::vector<std::size_t> gc_cols;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < ell; ++j) gc_cols.push_back(p.block_begin(i) + j);
    }
    MatrixGF t = apply_column_map(gp, {gc_cols.begin(), gc_cols.begin() + k});
    if (rank(t) < k) {
        return ClassifyFailure{ClassifyFailureKind::StandardizationImpossible,
                               "puncturing every block to its first columns leaves a singular "
                               "matrix, so that puncture is not MDS",
                               role, std::nullopt};
    }
    MatrixGF reduced = inverse(t) * gp;

    // Multiplier column: the last of the punctured columns.
    std::vector<std::uint32_t> alpha(k);
    for (std::size_t row = 0; row < k; ++row) {
        alpha[row] = reduced.at(row, gc_cols[k]);
        if (alpha[row] == 0) {
            return ClassifyFailure{ClassifyFailureKind::ZeroAlpha,
                                   "multiplier in row " + std::to_string(row) +
                                       " vanishes, so some punctured minor is singular",
                                   role, std::nullopt};
        }
    }

    // Interior blocks: the redundancy columns must live entirely inside the
    // block's own row group, otherwise the block spans more than ell
    // dimensions.
    std::vector<MatrixGF> blocks;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t begin = p.block_begin(i), r_i = p.r()[i];
        MatrixGF b(g.field(), ell, ell + r_i);
        for (std::size_t j = 0; j < ell; ++j) b.set(j, j, 1);
        for (std::size_t c = 0; c < r_i; ++c) {
            for (std::size_t row = 0; row < k; ++row) {
                const std::uint32_t v = reduced.at(row, begin + ell + c);
                const bool in_group = row >= i * ell && row < (i + 1) * ell;
                if (!in_group && v != 0) {
                    return ClassifyFailure{
                        ClassifyFailureKind::StandardizationImpossible,
                        "block " + std::to_string(i) + " spans more than ell dimensions",
                        i, std::nullopt};
                }
                if (in_group) b.set(row - i * ell, ell + c, v);
            }
        }
        blocks.push_back(std::move(b));
    }

    // Last block: above the bottom rows, every redundancy entry must be the
    // row's multiplier times a shared tail, i.e. the coupler block has rank
    // one. The reference row is the last row of the last interior group.
    const std::size_t last_begin = p.block_begin(m - 1);
    const std::size_t rho = (m - 1) * ell - 1;
    MatrixGF x_last(g.field(), ell, r_m);
    for (std::size_t c = 0; c < r_m; ++c) {
        x_last.set(ell - 1, c, f.div(reduced.at(rho, last_begin + ell + c), alpha[rho]));
    }
    for (std::size_t row = 0; row < (m - 1) * ell; ++row) {
        for (std::size_t c = 0; c < r_m; ++c) {
            const std::uint32_t expect = f.mul(alpha[row], x_last.at(ell - 1, c));
            if (reduced.at(row, last_begin + ell + c) != expect) {
                return ClassifyFailure{
                    ClassifyFailureKind::StandardizationImpossible,
                    "last block spans more than ell dimensions (coupler rank exceeds 1)",
                    m - 1, std::nullopt};
            }
        }
    }
    for (std::size_t j = 1; j < ell; ++j) {
        const std::size_t row = (m - 1) * ell + j - 1;
        for (std::size_t c = 0; c < r_m; ++c) {
            x_last.set(j - 1, c, f.div(reduced.at(row, last_begin + ell + c), alpha[row]));
        }
    }

    StandardForm form{p, g.field(), std::move(blocks), std::nullopt, {}, {}, x_last, order, role};

    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<std::uint32_t> a(ell);
        for (std::size_t j = 0; j < ell; ++j) a[j] = alpha[i * ell + j];
        form.alphas.push_back(std::move(a));
        MatrixGF coupler(g.field(), ell, ell + r_m);
        for (std::size_t j = 0; j < ell; ++j) {
            coupler.set(j, ell - 1, form.alphas[i][j]);
            for (std::size_t c = 0; c < r_m; ++c) {
                coupler.set(j, ell + c, f.mul(form.alphas[i][j], x_last.at(ell - 1, c)));
            }
        }
        form.couplers.push_back(std::move(coupler));
    }
    std::vector<std::uint32_t> a_m(ell - 1);
    for (std::size_t j = 0; j + 1 < ell; ++j) a_m[j] = alpha[(m - 1) * ell + j];
    form.alphas.push_back(std::move(a_m));

    if (ell > 1) {
        MatrixGF a(g.field(), ell - 1, ell + r_m);
        for (std::size_t j = 0; j + 1 < ell; ++j) {
            a.set(j, j, 1);
            a.set(j, ell - 1, form.alphas[m - 1][j]);
            for (std::size_t c = 0; c < r_m; ++c) {
                a.set(j, ell + c, f.mul(form.alphas[m - 1][j], x_last.at(j, c)));
            }
        }
        form.a_block = std::move(a);
    }
    return form;
}

}  // namespace

MatrixGF StandardForm::assemble() const {
    const std::size_t m = params.m(), ell = params.ell(), k = params.k();
    MatrixGF g(field, k, params.n());
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t row0 = i * ell;
        const std::size_t col0 = params.block_begin(i);
        for (std::size_t r = 0; r < ell; ++r) {
            for (std::size_t c = 0; c < params.block_size(i); ++c) {
                g.set(row0 + r, col0 + c, blocks[i].at(r, c));
            }
        }
        const std::size_t last0 = params.block_begin(m - 1);
        for (std::size_t r = 0; r < ell; ++r) {
            for (std::size_t c = 0; c < params.block_size(m - 1); ++c) {
                g.set(row0 + r, last0 + c, couplers[i].at(r, c));
            }
        }
    }
    if (a_block) {
        const std::size_t last0 = params.block_begin(m - 1);
        for (std::size_t r = 0; r + 1 < ell; ++r) {
            for (std::size_t c = 0; c < params.block_size(m - 1); ++c) {
                g.set((m - 1) * ell + r, last0 + c, a_block->at(r, c));
            }
        }
    }
    return g;
}

MatrixGF StandardForm::b_hat(std::size_t i) const {
    const std::size_t ell = params.ell();
    MatrixGF out(field, ell, blocks.at(i).cols() + 1);
    for (std::size_t r = 0; r < ell; ++r) {
        for (std::size_t c = 0; c < blocks[i].cols(); ++c) out.set(r, c, blocks[i].at(r, c));
        out.set(r, blocks[i].cols(), alphas[i][r]);
    }
    return out;
}

MatrixGF StandardForm::a_hat() const {
    const std::size_t ell = params.ell(), r_m = params.r().back();
    MatrixGF out(field, ell, ell + 1 + r_m);
    for (std::size_t r = 0; r < ell; ++r) {
        out.set(r, r, 1);
        out.set(r, ell, 1);
        // Row 0 carries the shared tail; row j the de-scaled x_j.
        const std::size_t src = r == 0 ? ell - 1 : r - 1;
        for (std::size_t c = 0; c < r_m; ++c) out.set(r, ell + 1 + c, x_last.at(src, c));
    }
    return out;
}

std::vector<std::size_t> StandardForm::std_to_original_columns() const {
    // Recover the original block layout from the recorded order.
    std::vector<std::size_t> orig_r(params.m());
    for (std::size_t i = 0; i < params.m(); ++i) orig_r[block_order[i]] = params.r()[i];
    std::vector<std::size_t> orig_begin(params.m(), 0);
    for (std::size_t i = 1; i < params.m(); ++i) {
        orig_begin[i] = orig_begin[i - 1] + orig_r[i - 1] + params.ell();
    }
    std::vector<std::size_t> map;
    map.reserve(params.n());
    for (std::size_t i = 0; i < params.m(); ++i) {
        const std::size_t ob = block_order[i];
        for (std::size_t c = 0; c < params.block_size(i); ++c) {
            map.push_back(orig_begin[ob] + c);
        }
    }
    return map;
}

std::variant<StandardForm, ClassifyFailure> standardize(const MatrixGF& g,
                                                        const PmdsParams& params) {
    if (params.s() != 1) throw InvalidArgumentError("standardize requires s = 1");
    if (params.m() < 2) throw InvalidArgumentError("standardize requires m >= 2");
    if (g.rows() != params.k() || g.cols() != params.n()) {
        throw InvalidArgumentError("generator dimensions do not match the parameters");
    }
    if (rank(g) < params.k()) throw InvalidArgumentError("generator is rank-deficient");

    // Natural last block first; then every other block in the last role.
    auto first = standardize_with_role(g, params, params.m() - 1);
    if (std::holds_alternative<StandardForm>(first)) return first;
    for (std::size_t role = 0; role + 1 < params.m(); ++role) {
        auto attempt = standardize_with_role(g, params, role);
        if (std::holds_alternative<StandardForm>(attempt)) return attempt;
    }
    return first;
}

ClassificationVerdict classify_s1(const MatrixGF& g, const PmdsParams& params) {
    auto reduced = standardize(g, params);
    if (std::holds_alternative<ClassifyFailure>(reduced)) {
        return {false, std::nullopt, std::get<ClassifyFailure>(reduced)};
    }
    StandardForm form = std::get<StandardForm>(std::move(reduced));
    for (std::size_t i = 0; i + 1 < params.m(); ++i) {
        MdsReport rep = is_mds_generator(form.b_hat(i));
        if (!rep.is_mds) {
            return {false, std::nullopt,
                    ClassifyFailure{ClassifyFailureKind::BlockSeedNotMds,
                                    "block seed " + std::to_string(i) + " is not MDS", i, rep}};
        }
    }
    MdsReport rep = is_mds_generator(form.a_hat());
    if (!rep.is_mds) {
        return {false, std::nullopt,
                ClassifyFailure{ClassifyFailureKind::LastSeedNotMds,
                                "last block seed is not MDS", params.m() - 1, rep}};
    }
    return {true, std::move(form), std::nullopt};
}

AgreementReport classify_equals_oracle(const MatrixGF& g, const PmdsParams& params) {
    AgreementReport rep;
    rep.classify_is_pmds = classify_s1(g, params).is_pmds;
    rep.oracle_is_pmds = pmds_oracle(g, params).is_pmds;
    rep.agree = rep.classify_is_pmds == rep.oracle_is_pmds;
    return rep;
}

CompletionResult completion_search(const TemplateMatrix& tmpl, const PmdsParams& params,
                                   std::uint64_t budget) {
    const std::size_t w = tmpl.wildcards.size();
    if (w > 8) throw InvalidArgumentError("completion search supports at most 8 wildcards");
    for (std::size_t i = 1; i < w; ++i) {
        if (tmpl.wildcards[i] <= tmpl.wildcards[i - 1]) {
            throw InvalidArgumentError("wildcard positions must be distinct, row-major ordered");
        }
    }
    const std::uint32_t q = tmpl.base.field()->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < w; ++i) {
        if (total > budget / q + 1) total = budget + 1;  // saturate, avoid overflow
        else total *= q;
    }
    if (total > budget) {
        throw BudgetExceededError("completion search needs " + std::to_string(total) +
                                  " assignments, budget is " + std::to_string(budget));
    }

    MatrixGF candidate = tmpl.base;
    std::vector<std::uint32_t> assign(w, 0);
    CompletionResult result;
    for (;;) {
        for (std::size_t i = 0; i < w; ++i) {
            candidate.set(tmpl.wildcards[i].first, tmpl.wildcards[i].second, assign[i]);
        }
        ++result.assignments_tried;
        // A rank-deficient fill cannot generate a dimension-k code.
        if (rank(candidate) == params.k() && pmds_oracle(candidate, params).is_pmds) {
            result.found = true;
            result.completion = candidate;
            return result;
        }
        // Odometer in canonical element order, last wildcard fastest, so
        // assignments advance in lexicographic tuple order.
        std::size_t i = w;
        while (i > 0 && assign[i - 1] == q - 1) {
            assign[i - 1] = 0;
            --i;
        }
        if (i == 0) return result;
        ++assign[i - 1];
    }
}

std::pair<MatrixGF, PmdsParams> permute_blocks(const MatrixGF& g, const PmdsParams& params,
                                               std::span<const std::size_t> new_order) {
    if (new_order.size() != params.m()) {
        throw InvalidArgumentError("block permutation must name every block once");
    }
    std::vector<bool> seen(params.m(), false);
    std::vector<std::size_t> r_new;
    std::vector<std::size_t> col_of;
    for (auto b : new_order) {
        if (b >= params.m() || seen[b]) {
            throw InvalidArgumentError("block permutation must name every block once");
        }
        seen[b] = true;
        r_new.push_back(params.r()[b]);
        for (auto c : params.block_columns(b)) col_of.push_back(c);
    }
    PmdsParams p = PmdsParams::make(params.m(), params.ell(), std::move(r_new), params.k());
    return {apply_column_map(g, col_of), std::move(p)};
}

}  // namespace pmds
