#include "pmds/construct.hpp"

#include <string>

namespace pmds {

namespace {

/// Picks the Reed-Solomon variant for an [n_seed, ell] seed over the field,
/// or throws when no variant fits the bounds.
RsVariant pick_variant(const FieldPtr& field, std::size_t ell, std::size_t n_seed) {
    const std::uint32_t q = field->order();
    if (n_seed <= q) return RsVariant::Plain;
    if (n_seed <= q + 1) return RsVariant::Extended;
    if (n_seed == q + 2 && field->characteristic() == 2 && (ell == 3 || ell == q - 1)) {
        return RsVariant::DoublyExtended;
    }
    throw InvalidArgumentError("no [" + std::to_string(n_seed) + "," + std::to_string(ell) +
                               "] MDS seed within the Reed-Solomon bounds over " +
                               field->literal());
}

MatrixGF all_ones_row(const FieldPtr& field, std::size_t cols) {
    MatrixGF m(field, 1, cols);
    for (std::size_t c = 0; c < cols; ++c) m.set(0, c, 1);
    return m;
}

}  // namespace

MatrixGF seed_from_rs(const FieldPtr& field, std::size_t ell, std::size_t r, SeedRole role) {
    if (ell < 1 || r < 1) throw InvalidArgumentError("seed needs ell >= 1 and r >= 1");
    const std::size_t n_seed = ell + r + 1;
    if (ell == 1) {
        return all_ones_row(field, n_seed);
    }
    MatrixGF sys = systematic_form(rs_generator(field, ell, n_seed, pick_variant(field, ell, n_seed)));
    // A systematic MDS generator has no zero entries right of the identity,
    // so the normalizing column is invertible entry by entry.
    const std::size_t target_col = role == SeedRole::Interior ? n_seed - 1 : ell;
    std::vector<std::uint32_t> alphas(ell);
    for (std::size_t j = 0; j < ell; ++j) alphas[j] = field->inv(sys.at(j, target_col));
    return systematic_mds_equivalence(sys, alphas);
}

S1Blueprint S1Blueprint::canonical(const PmdsParams& params, const FieldPtr& field) {
    if (params.s() != 1) throw InvalidArgumentError("blueprint requires s = 1");
    S1Blueprint bp{params, field, {}, seed_from_rs(field, params.ell(), params.r().back(),
                                                   SeedRole::Last)};
    for (std::size_t i = 0; i + 1 < params.m(); ++i) {
        bp.interior_seeds.push_back(
            seed_from_rs(field, params.ell(), params.r()[i], SeedRole::Interior));
    }
    return bp;
}

void S1Blueprint::validate() const {
    if (!field) throw InvalidArgumentError("blueprint without a field");
    if (params.s() != 1) throw InvalidArgumentError("blueprint requires s = 1");
    if (params.m() < 2) throw InvalidArgumentError("blueprint requires m >= 2");
    if (interior_seeds.size() != params.m() - 1) {
        throw InvalidArgumentError("need one interior seed per block but the last");
    }
    const std::size_t ell = params.ell();
    auto check_seed = [&](const MatrixGF& seed, std::size_t r, std::size_t ones_col,
                          const std::string& name) {
        if (!seed.field()->same_as(*field)) {
            throw InvalidArgumentError(name + " seed uses a different field");
        }
        if (seed.rows() != ell || seed.cols() != ell + r + 1) {
            throw InvalidArgumentError(name + " seed has wrong dimensions");
        }
        for (std::size_t i = 0; i < ell; ++i) {
            for (std::size_t j = 0; j < ell; ++j) {
                if (seed.at(i, j) != (i == j ? 1u : 0u)) {
                    throw InvalidArgumentError(name + " seed is not systematic");
                }
            }
            if (seed.at(i, ones_col) != 1) {
                throw InvalidArgumentError(name + " seed lacks the all-ones column");
            }
        }
        if (!is_mds_generator(seed).is_mds) {
            throw InvalidArgumentError(name + " seed does not generate an MDS code");
        }
    };
    for (std::size_t i = 0; i < interior_seeds.size(); ++i) {
        check_seed(interior_seeds[i], params.r()[i], ell + params.r()[i],
                   "block " + std::to_string(i));
    }
    check_seed(last_seed, params.r().back(), ell, "last block");
}

MatrixGF assemble_s1(const S1Blueprint& bp) {
    bp.validate();
    const PmdsParams& p = bp.params;
    const std::size_t ell = p.ell(), m = p.m(), k = p.k(), r_m = p.r().back();
    MatrixGF g(bp.field, k, p.n());

    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t row0 = i * ell, col0 = p.block_begin(i);
        for (std::size_t rr = 0; rr < ell; ++rr) {
            for (std::size_t cc = 0; cc < p.block_size(i); ++cc) {
                g.set(row0 + rr, col0 + cc, bp.interior_seeds[i].at(rr, cc));
            }
        }
    }

    // Last block: the seed (I | ones | X) supplies the shared row
    // (0,..,0, 1, X row 0) for every interior row group and the rows
    // (e_j, 1, X row j) for the bottom group.
    const std::size_t last0 = p.block_begin(m - 1);
    for (std::size_t rr = 0; rr < (m - 1) * ell; ++rr) {
        g.set(rr, last0 + ell - 1, 1);
        for (std::size_t t = 0; t < r_m; ++t) {
            g.set(rr, last0 + ell + t, bp.last_seed.at(0, ell + 1 + t));
        }
    }
    for (std::size_t j = 1; j < ell; ++j) {
        const std::size_t row = (m - 1) * ell + (j - 1);
        g.set(row, last0 + j - 1, 1);
        g.set(row, last0 + ell - 1, 1);
        for (std::size_t t = 0; t < r_m; ++t) {
            g.set(row, last0 + ell + t, bp.last_seed.at(j, ell + 1 + t));
        }
    }
    return g;
}

MatrixGF build_s1(const PmdsParams& params, const FieldPtr& field) {
    if (params.s() != 1) throw InvalidArgumentError("build_s1 requires s = 1");
    if (params.m() < 2) throw InvalidArgumentError("build_s1 requires m >= 2");
    const FieldBound bound = field_size_bound_s1(params.ell(), params.max_r());
    if (field->order() < bound.min_q) {
        throw InvalidArgumentError("field too small: an s=1 code with ell=" +
                                   std::to_string(params.ell()) + " and max r=" +
                                   std::to_string(params.max_r()) + " needs q >= " +
                                   std::to_string(bound.min_q));
    }
    return assemble_s1(S1Blueprint::canonical(params, field));
}

MatrixGF build_ell1_s1(const PmdsParams& params, const FieldPtr& field) {
    if (params.ell() != 1) throw InvalidArgumentError("build_ell1_s1 requires ell = 1");
    if (params.s() != 1) throw InvalidArgumentError("build_ell1_s1 requires s = 1");
    if (params.m() < 2) throw InvalidArgumentError("build_ell1_s1 requires m >= 2");
    const std::size_t m = params.m();
    MatrixGF g(field, m - 1, params.n());
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t c = 0; c < params.block_size(i); ++c) {
            g.set(i, params.block_begin(i) + c, 1);
        }
        for (std::size_t c = 0; c < params.block_size(m - 1); ++c) {
            g.set(i, params.block_begin(m - 1) + c, 1);
        }
    }
    return g;
}

MatrixGF build_ell1_general_s(std::size_t m, std::size_t s, const std::vector<std::size_t>& r,
                              const FieldPtr& field) {
    if (m < 2) throw InvalidArgumentError("need m >= 2");
    if (s < 1 || s >= m) throw InvalidArgumentError("need 1 <= s < m");
    if (r.size() != m) throw InvalidArgumentError("need one redundancy per block");
    const std::uint32_t q = field->order();
    const std::size_t k = m - s;

    const MatrixGF outer = [&]() -> MatrixGF {
        if (q >= m - 1) {
            return rs_generator(field, k, m, m <= q ? RsVariant::Plain : RsVariant::Extended);
        }
        if (q + 2 == m && field->characteristic() == 2 && (k == 3 || k == q - 1)) {
            return rs_generator(field, k, m, RsVariant::DoublyExtended);
        }
        throw InvalidArgumentError("field too small: need q >= m-1 = " + std::to_string(m - 1) +
                                   " (or q = m-2 in the doubly-extended case)");
    }();

    std::size_t n = 0;
    for (auto rj : r) n += rj + 1;
    MatrixGF g(field, k, n);
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t copy = 0; copy <= r[j]; ++copy, ++col) {
            for (std::size_t row = 0; row < k; ++row) g.set(row, col, outer.at(row, j));
        }
    }
    return g;
}

}  // namespace pmds
