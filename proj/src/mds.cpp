#include "pmds/mds.hpp"

#include <algorithm>
#include <string>

namespace pmds {

namespace {

/// Advances a strictly increasing index tuple to its lexicographic
/// successor among subsets of {0..n-1}; false when exhausted.
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

/// Reusable elimination buffer for many small determinant tests.
class MinorTester {
public:
    explicit MinorTester(const MatrixGF& m) : m_(m), f_(*m.field()) {}

    /// True iff the square submatrix on (rows, cols) is invertible.
    bool invertible(std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
        const std::size_t t = rows.size();
        buf_.resize(t * t);
        for (std::size_t r = 0; r < t; ++r) {
            for (std::size_t c = 0; c < t; ++c) buf_[r * t + c] = m_.at(rows[r], cols[c]);
        }
        for (std::size_t col = 0; col < t; ++col) {
            std::size_t p = col;
            while (p < t && buf_[p * t + col] == 0) ++p;
            if (p == t) return false;
            if (p != col) {
                for (std::size_t c = col; c < t; ++c) std::swap(buf_[p * t + c], buf_[col * t + c]);
            }
            const std::uint32_t piv_inv = f_.inv(buf_[col * t + col]);
            for (std::size_t r = col + 1; r < t; ++r) {
                const std::uint32_t factor = f_.mul(buf_[r * t + col], piv_inv);
                if (factor == 0) continue;
                for (std::size_t c = col; c < t; ++c) {
                    buf_[r * t + c] = f_.sub(buf_[r * t + c], f_.mul(factor, buf_[col * t + c]));
                }
            }
        }
        return true;
    }

private:
    const MatrixGF& m_;
    const Field& f_;
    std::vector<std::uint32_t> buf_;
};

std::vector<std::size_t> iota_indices(std::size_t t) {
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    return idx;
}

}  // namespace

namespace detail {

MdsReport mds_scan(const MatrixGF& g) {
    const std::size_t k = g.rows(), n = g.cols();
    MinorTester tester(g);
    const std::vector<std::size_t> all_rows = iota_indices(k);
    std::vector<std::size_t> cols = iota_indices(k);
    do {
        if (!tester.invertible(all_rows, cols)) {
            return {false, cols};
        }
    } while (next_combination(cols, n));
    return {true, std::nullopt};
}

}  // namespace detail

MdsReport is_mds_generator(const MatrixGF& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k > n) throw InvalidArgumentError("is_mds_generator: more rows than columns");
    if (rank(g) < k) throw InvalidArgumentError("is_mds_generator: rank-deficient generator");
    return detail::mds_scan(g);
}

SuperregularReport is_superregular(const MatrixGF& x) {
    MinorTester tester(x);
    const std::size_t tmax = std::min(x.rows(), x.cols());
    for (std::size_t t = 1; t <= tmax; ++t) {
        std::vector<std::size_t> rows = iota_indices(t);
        do {
            std::vector<std::size_t> cols = iota_indices(t);
            do {
                if (!tester.invertible(rows, cols)) {
                    return {false, MinorWitness{rows, cols}};
                }
            } while (next_combination(cols, x.cols()));
        } while (next_combination(rows, x.rows()));
    }
    return {true, std::nullopt};
}

MatrixGF systematic_mds_equivalence(const MatrixGF& g, std::span<const std::uint32_t> alphas) {
    const std::size_t ell = g.rows();
    if (g.cols() < ell) throw InvalidArgumentError("systematic generator needs cols >= rows");
    for (std::size_t r = 0; r < ell; ++r) {
        for (std::size_t c = 0; c < ell; ++c) {
            if (g.at(r, c) != (r == c ? 1u : 0u)) {
                throw InvalidArgumentError("generator is not in systematic form (I | X)");
            }
        }
    }
    if (alphas.size() != ell) throw InvalidArgumentError("need one scale factor per row");
    for (auto a : alphas) {
        if (a == 0) throw InvalidArgumentError("row scale factors must be nonzero");
    }
    const Field& f = *g.field();
    MatrixGF out = g;
    for (std::size_t r = 0; r < ell; ++r) {
        for (std::size_t c = ell; c < g.cols(); ++c) {
            out.set(r, c, f.mul(alphas[r], g.at(r, c)));
        }
    }
    return out;
}

MatrixGF rs_generator(const FieldPtr& field, std::size_t k, std::size_t n, RsVariant variant) {
    const std::uint32_t q = field->order();
    if (k == 0 || n == 0 || k > n) throw InvalidArgumentError("rs_generator: need 1 <= k <= n");
    std::size_t ext = 0;
    switch (variant) {
        case RsVariant::Plain:
            if (n > q) throw InvalidArgumentError("plain Reed-Solomon needs n <= q");
            break;
        case RsVariant::Extended:
            ext = 1;
            if (n > q + 1) throw InvalidArgumentError("extended Reed-Solomon needs n <= q+1");
            break;
        case RsVariant::DoublyExtended:
            ext = 2;
            if (n != q + 2) {
                throw InvalidArgumentError("doubly extended Reed-Solomon needs n = q+2");
            }
            if (field->characteristic() != 2) {
                throw InvalidArgumentError("doubly extended Reed-Solomon needs q = 2^h");
            }
            if (k != 3 && k != q - 1) {
                throw InvalidArgumentError("doubly extended Reed-Solomon needs k in {3, q-1}");
            }
            break;
    }
    if (n < ext || n - ext > q) throw InvalidArgumentError("rs_generator: too many evaluation points");

    const std::size_t points = n - ext;
    MatrixGF g(field, k, n);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t c = 0; c < points; ++c) {
            g.set(j, c, field->pow(static_cast<std::uint32_t>(c), j));
        }
    }
    if (ext >= 1) g.set(k - 1, points, 1);
    if (ext == 2) {
        // Unit column (0,..,0,1,0)^T; for k = 1 both extension columns
        // degenerate to (1).
        g.set(k >= 2 ? k - 2 : 0, points + 1, 1);
    }
    MdsReport check = is_mds_generator(g);
    if (!check.is_mds) {
        throw Error("rs_generator produced a non-MDS matrix; parameter validation is broken");
    }
    return g;
}

MatrixGF systematic_form(const MatrixGF& g, std::optional<std::vector<std::size_t>> pivot_cols) {
    RrefResult rr = rref(g);
    if (rr.rank < g.rows()) throw InvalidArgumentError("systematic_form: rank-deficient generator");
    if (!pivot_cols) {
        return rr.matrix;
    }
    if (pivot_cols->size() != g.rows()) {
        throw InvalidArgumentError("systematic_form: need exactly rows pivot columns");
    }
    MatrixGF t = select_columns(g, *pivot_cols);
    if (rank(t) < g.rows()) {
        throw InvalidArgumentError("systematic_form: chosen pivot columns are dependent");
    }
    return inverse(t) * g;
}

MatrixGF parity_check(const MatrixGF& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (rank(g) < k) throw InvalidArgumentError("parity_check: rank-deficient generator");
    if (k == n) {
        throw InvalidArgumentError("parity_check: code is the full space, dual is empty");
    }
    return nullspace(g);
}

}  // namespace pmds
