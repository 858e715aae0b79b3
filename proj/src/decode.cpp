#include "pmds/decode.hpp"

#include <algorithm>

namespace pmds {

namespace {

/// Gaussian elimination on an augmented system (rows x (unknowns+1)).
/// Returns the unique solution, nullopt when inconsistent, and throws when
/// the coefficient part is rank-deficient (no unique solution). Counts
/// multiplications and divisions into *mults when given.
std::optional<std::vector<std::uint32_t>> solve_augmented(const Field& f,
                                                          std::vector<std::uint32_t> aug,
                                                          std::size_t rows, std::size_t unknowns,
                                                          std::uint64_t* mults) {
    const std::size_t w = unknowns + 1;
    auto count = [&](std::uint64_t c) {
        if (mults) *mults += c;
    };
    std::size_t lead = 0;
    for (std::size_t col = 0; col < unknowns && lead < rows; ++col) {
        std::size_t p = lead;
        while (p < rows && aug[p * w + col] == 0) ++p;
        if (p == rows) {
            throw DecodeFailureError("erasure system has no unique solution");
        }
        if (p != lead) {
            for (std::size_t c = col; c < w; ++c) std::swap(aug[p * w + c], aug[lead * w + c]);
        }
        const std::uint32_t piv_inv = f.inv(aug[lead * w + col]);
        count(1);
        for (std::size_t c = col; c < w; ++c) {
            aug[lead * w + c] = f.mul(aug[lead * w + c], piv_inv);
            count(1);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            const std::uint32_t factor = aug[r * w + col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < w; ++c) {
                aug[r * w + c] = f.sub(aug[r * w + c], f.mul(factor, aug[lead * w + c]));
                count(1);
            }
        }
        ++lead;
    }
    if (lead < unknowns) {
        throw DecodeFailureError("erasure system has no unique solution");
    }
    // Leftover equations must have vanished; otherwise the word is not a
    // corrupted codeword.
    for (std::size_t r = lead; r < rows; ++r) {
        if (aug[r * w + unknowns] != 0) return std::nullopt;
    }
    std::vector<std::uint32_t> x(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) x[i] = aug[i * w + unknowns];
    return x;
}

}  // namespace

ErasurePattern ReceivedWord::pattern() const {
    std::vector<std::size_t> erased;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!symbols[i]) erased.push_back(i);
    }
    return ErasurePattern::make(std::move(erased), symbols.size());
}

StructuredParityCheck build_structured_h(const StandardForm& form) {
    const Field& f = *form.field;
    const PmdsParams& p = form.params;
    const std::size_t m = p.m(), ell = p.ell(), r_m = p.r().back(), n = p.n();
    const std::size_t dual_rows = n - p.k();

    StructuredParityCheck spc{p,
                              form.field,
                              {},
                              MatrixGF(form.field, r_m + 1, r_m + ell),
                              {},
                              MatrixGF(form.field, dual_rows, n),
                              form.std_to_original_columns()};

    for (std::size_t i = 0; i + 1 < m; ++i) {
        spc.block_duals.push_back(parity_check(form.blocks[i]));
    }

    // Shared row w = (0,..,0, 1, tail): the row every coupler repeats.
    MatrixGF w_row(form.field, 1, ell + r_m);
    w_row.set(0, ell - 1, 1);
    for (std::size_t c = 0; c < r_m; ++c) w_row.set(0, ell + c, form.tail()[c]);

    // Local dual of the whole last block (w stacked over A), then one row
    // orthogonal to A but not to w, making a_dual a full dual of A whose
    // first r_m rows already check the local code.
    MatrixGF local_gen = form.a_block ? vstack(w_row, *form.a_block) : w_row;
    MatrixGF h_loc = parity_check(local_gen);
    std::vector<std::uint32_t> v;
    std::uint32_t w_dot_v = 0;
    if (form.a_block) {
        MatrixGF a_dual_full = parity_check(*form.a_block);
        for (std::size_t r = 0; r < a_dual_full.rows() && w_dot_v == 0; ++r) {
            std::uint32_t dot = 0;
            for (std::size_t c = 0; c < ell + r_m; ++c) {
                dot = f.add(dot, f.mul(w_row.at(0, c), a_dual_full.at(r, c)));
            }
            if (dot != 0) {
                v.assign(a_dual_full.row(r).begin(), a_dual_full.row(r).end());
                w_dot_v = dot;
            }
        }
    } else {
        // ell = 1: A is empty, any vector qualifies; take the unit vector
        // hitting w's leading 1.
        v.assign(ell + r_m, 0);
        v[0] = 1;
        w_dot_v = w_row.at(0, 0);
    }
    if (w_dot_v == 0) {
        throw Error("structured parity check: no completing dual row; form is invalid");
    }
    for (std::size_t r = 0; r < r_m; ++r) {
        for (std::size_t c = 0; c < ell + r_m; ++c) spc.a_dual.set(r, c, h_loc.at(r, c));
    }
    for (std::size_t c = 0; c < ell + r_m; ++c) spc.a_dual.set(r_m, c, v[c]);

    // Coupling rows: B_i x_i^T = -(w.v) alpha^(i); with B_i = (I | x) the
    // canonical solution puts -(w.v) alpha^(i) on the identity columns.
    const std::uint32_t neg_wv = f.neg(w_dot_v);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<std::uint32_t> x(ell + p.r()[i], 0);
        for (std::size_t j = 0; j < ell; ++j) x[j] = f.mul(neg_wv, form.alphas[i][j]);
        spc.coupling_rows.push_back(std::move(x));
    }

    // Assemble H.
    std::size_t row0 = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t col0 = p.block_begin(i);
        for (std::size_t r = 0; r < spc.block_duals[i].rows(); ++r) {
            for (std::size_t c = 0; c < spc.block_duals[i].cols(); ++c) {
                spc.h.set(row0 + r, col0 + c, spc.block_duals[i].at(r, c));
            }
        }
        row0 += spc.block_duals[i].rows();
    }
    const std::size_t last_col0 = p.block_begin(m - 1);
    for (std::size_t r = 0; r <= r_m; ++r) {
        for (std::size_t c = 0; c < r_m + ell; ++c) {
            spc.h.set(row0 + r, last_col0 + c, spc.a_dual.at(r, c));
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t col0 = p.block_begin(i);
        for (std::size_t c = 0; c < spc.coupling_rows[i].size(); ++c) {
            spc.h.set(row0 + r_m, col0 + c, spc.coupling_rows[i][c]);
        }
    }
    return spc;
}

std::vector<std::uint32_t> decode_erasures(const StructuredParityCheck& spc,
                                           const ReceivedWord& rw, DecodeStats* stats) {
    const Field& f = *spc.field;
    const PmdsParams& p = spc.params;
    const std::size_t m = p.m(), r_m = p.r().back(), n = p.n();
    if (rw.size() != n) throw InvalidArgumentError("received word length mismatch");
    if (rw.field && !rw.field->same_as(f)) {
        throw FieldMismatchError("received word uses a different field");
    }

    DecodeStats local_stats;
    DecodeStats& st = stats ? *stats : local_stats;
    st = DecodeStats{};

    // Bring the word into standard column order.
    std::vector<std::optional<std::uint32_t>> sym(n);
    for (std::size_t c = 0; c < n; ++c) sym[c] = rw.symbols[spc.std_to_original[c]];

    std::vector<std::size_t> counts(m, 0);
    for (std::size_t c = 0; c < n; ++c) {
        if (!sym[c]) ++counts[p.block_of(c)];
    }
    std::size_t overflow_block = m;  // m = none
    for (std::size_t i = 0; i < m; ++i) {
        if (counts[i] <= p.r()[i]) continue;
        if (counts[i] == p.r()[i] + 1 && overflow_block == m) {
            overflow_block = i;
        } else {
            throw PatternOutsideFamilyError(
                "erasure pattern exceeds the per-block budgets plus one global parity");
        }
    }

    auto block_dual_row = [&](std::size_t i, std::size_t r, std::size_t c) {
        return i + 1 < m ? spc.block_duals[i].at(r, c) : spc.a_dual.at(r, c);
    };

    // Solve one block from `eq_rows` local dual rows (plus, for the
    // overflow block, the assembled global row appended by the caller).
    auto solve_block = [&](std::size_t i, bool with_global) {
        const std::size_t begin = p.block_begin(i), size = p.block_size(i);
        std::vector<std::size_t> unknown_local;
        for (std::size_t c = 0; c < size; ++c) {
            if (!sym[begin + c]) unknown_local.push_back(c);
        }
        if (unknown_local.empty()) return;
        const std::size_t local_eqs = i + 1 < m ? p.r()[i] : r_m;
        const std::size_t rows = local_eqs + (with_global ? 1 : 0);
        const std::size_t w = unknown_local.size() + 1;
        std::vector<std::uint32_t> aug(rows * w, 0);
        for (std::size_t e = 0; e < local_eqs; ++e) {
            for (std::size_t u = 0; u < unknown_local.size(); ++u) {
                aug[e * w + u] = block_dual_row(i, e, unknown_local[u]);
            }
            std::uint32_t rhs = 0;
            for (std::size_t c = 0; c < size; ++c) {
                if (!sym[begin + c]) continue;
                rhs = f.add(rhs, f.mul(block_dual_row(i, e, c), *sym[begin + c]));
                ++st.total_multiplications;
            }
            aug[e * w + unknown_local.size()] = f.neg(rhs);
        }
        if (with_global) {
            // The last H row: coupling rows over interior blocks, the final
            // a_dual row over the last block. Everything outside this block
            // is known by now.
            const std::size_t e = local_eqs;
            auto global_coeff = [&](std::size_t col) -> std::uint32_t {
                const std::size_t b = p.block_of(col);
                const std::size_t local = col - p.block_begin(b);
                if (b + 1 < m) return spc.coupling_rows[b][local];
                return spc.a_dual.at(r_m, local);
            };
            std::uint32_t rhs = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (col >= begin && col < begin + size) continue;
                const std::uint32_t coeff = global_coeff(col);
                if (coeff == 0 || *sym[col] == 0) continue;
                rhs = f.add(rhs, f.mul(coeff, *sym[col]));
                ++st.total_multiplications;
            }
            for (std::size_t c = 0; c < size; ++c) {
                if (sym[begin + c]) {
                    if (const std::uint32_t coeff = global_coeff(begin + c); coeff != 0) {
                        rhs = f.add(rhs, f.mul(coeff, *sym[begin + c]));
                        ++st.total_multiplications;
                    }
                }
            }
            for (std::size_t u = 0; u < unknown_local.size(); ++u) {
                aug[e * w + u] = global_coeff(begin + unknown_local[u]);
            }
            aug[e * w + unknown_local.size()] = f.neg(rhs);
            st.used_global_row = true;
        }
        std::uint64_t solver_mults = 0;
        auto solution = solve_augmented(f, std::move(aug), rows, unknown_local.size(),
                                        &solver_mults);
        st.solver_multiplications += solver_mults;
        st.total_multiplications += solver_mults;
        if (!solution) {
            throw DecodeFailureError("received word is not a corrupted codeword");
        }
        for (std::size_t u = 0; u < unknown_local.size(); ++u) {
            sym[begin + unknown_local[u]] = (*solution)[u];
        }
        ++st.blocks_solved;
    };

    for (std::size_t i = 0; i < m; ++i) {
        if (i != overflow_block && counts[i] > 0) solve_block(i, false);
    }
    if (overflow_block < m) solve_block(overflow_block, true);

    // Full-syndrome consistency check; catches corruption that the solved
    // equations alone would miss.
    for (std::size_t r = 0; r < spc.h.rows(); ++r) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            acc = f.add(acc, f.mul(spc.h.at(r, c), *sym[c]));
            ++st.total_multiplications;
        }
        if (acc != 0) throw DecodeFailureError("received word is not a corrupted codeword");
    }

    std::vector<std::uint32_t> out(n);
    for (std::size_t c = 0; c < n; ++c) out[spc.std_to_original[c]] = *sym[c];
    return out;
}

GenericDecodeResult decode_generic(const MatrixGF& g, const ReceivedWord& rw) {
    if (rw.size() != g.cols()) throw InvalidArgumentError("received word length mismatch");
    const ErasurePattern pattern = rw.pattern();
    const std::vector<std::size_t> kept = pattern.surviving(g.cols());
    if (kept.size() < g.rows()) {
        return {false, {}, g.rows() - (kept.empty() ? 0 : rank(select_columns(g, kept)))};
    }
    MatrixGF g_kept = select_columns(g, kept);
    std::vector<std::uint32_t> vals(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) vals[i] = *rw.symbols[kept[i]];
    SolveResult res = solve(transpose(g_kept), vals);
    if (res.status == SolveStatus::Inconsistent) {
        throw DecodeFailureError("received word is not a corrupted codeword");
    }
    if (res.status == SolveStatus::Underdetermined) {
        return {false, {}, res.solution_space_dim};
    }
    return {true, encode(g, res.solution), 0};
}

std::vector<std::uint32_t> encode(const MatrixGF& g, std::span<const std::uint32_t> message) {
    if (message.size() != g.rows()) throw InvalidArgumentError("message length must equal k");
    for (auto v : message) g.field()->check_value(v);
    return row_times_matrix(message, g);
}

std::vector<std::uint32_t> encode(const StandardForm& form,
                                  std::span<const std::uint32_t> message) {
    std::vector<std::uint32_t> std_word = encode(form.assemble(), message);
    std::vector<std::size_t> map = form.std_to_original_columns();
    std::vector<std::uint32_t> out(std_word.size());
    for (std::size_t c = 0; c < std_word.size(); ++c) out[map[c]] = std_word[c];
    return out;
}

}  // namespace pmds
