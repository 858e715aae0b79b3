// Acceptance suite: runs every gate criterion and prints one PASS/FAIL
// line per criterion. Exit code is the number of failed criteria.
//
// Usage: pmds_acceptance [--data-dir DIR] [--seed N]

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "pmds/decode.hpp"
#include "pmds/io.hpp"

using namespace pmds;

namespace {

using Clock = std::chrono::steady_clock;

std::string g_data_dir = "data";
std::uint64_t g_seed = 20240901;

bool is_prime_size(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Smallest supported field with order >= min_q (primes and powers of two;
/// odd prime powers are not supported and are skipped).
FieldPtr minimal_field(std::size_t min_q) {
    for (std::size_t q = std::max<std::size_t>(2, min_q);; ++q) {
        if (is_prime_size(q)) return Field::prime(static_cast<std::uint32_t>(q));
        if ((q & (q - 1)) == 0) {
            unsigned h = 0;
            for (std::size_t v = q; v > 1; v >>= 1) ++h;
            return Field::binary_ext(h);
        }
    }
}

MatrixGF random_full_rank(const FieldPtr& f, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->order() - 1);
    for (;;) {
        MatrixGF m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
        }
        if (rank(m) == rows) return m;
    }
}

/// All s=1 grid parameter sets: m in {2,3}, ell in {1,2,3}, r_i in {1,2}.
std::vector<PmdsParams> s1_grid() {
    std::vector<PmdsParams> grid;
    for (std::size_t m : {2, 3}) {
        for (std::size_t ell : {1, 2, 3}) {
            const std::size_t combos = std::size_t{1} << m;
            for (std::size_t bits = 0; bits < combos; ++bits) {
                std::vector<std::size_t> r;
                for (std::size_t i = 0; i < m; ++i) r.push_back(1 + ((bits >> i) & 1));
                grid.push_back(PmdsParams::make(m, ell, r, m * ell - 1));
            }
        }
    }
    return grid;
}

struct CriterionOutcome {
    bool pass = false;
    std::string detail;
};

bool run_criterion(int number, const std::string& name, double limit_seconds,
                   const std::function<CriterionOutcome()>& body) {
    const auto start = Clock::now();
    CriterionOutcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = outcome.pass;
    std::string detail = outcome.detail;
    if (pass && limit_seconds > 0 && seconds > limit_seconds) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                  std::to_string(static_cast<int>(limit_seconds)) + " s limit";
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ("
              << std::fixed << std::setprecision(2) << seconds << " s)";
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n" << std::flush;
    return pass;
}

CriterionOutcome criterion1_gf3_example() {
    ParsedFile file = load_code_file(g_data_dir + "/example_gf3_n6.code", FileKind::Matrix);
    if (!pmds_oracle(*file.matrix, file.params).is_pmds) return {false, "oracle rejected"};
    if (!classify_s1(*file.matrix, file.params).is_pmds) return {false, "classify rejected"};
    MrReport mr = mr_check(*file.matrix, file.params);
    if (!mr.is_mr) return {false, "mr_check failed"};
    return {true, "oracle + classify + 64-pattern mr"};
}

CriterionOutcome criterion2_gf4_example() {
    ParsedFile file = load_code_file(g_data_dir + "/example_gf4_n9.code", FileKind::Matrix);
    if (!pmds_oracle(*file.matrix, file.params).is_pmds) return {false, "oracle rejected"};
    return {true, "40 punctures, each [6,5]-MDS"};
}

CriterionOutcome criterion3_gf7_appendix() {
    ParsedFile code = load_code_file(g_data_dir + "/example_gf7_n8_s2.code", FileKind::Matrix);
    if (code.params.s() != 2) return {false, "unexpected parameters"};
    if (!pmds_oracle(*code.matrix, code.params).is_pmds) return {false, "oracle rejected"};

    NecessaryConditionsReport nc = necessary_conditions_general_s(code.params, code.field);
    if (!nc.pass) return {false, "necessary conditions unexpectedly fail"};

    ParsedFile tmpl = load_code_file(g_data_dir + "/template_gf7_n8.tmpl", FileKind::Template);
    CompletionResult res = completion_search(*tmpl.tmpl, tmpl.params, 1'000'000);
    if (res.found) return {false, "template unexpectedly completed"};
    std::ostringstream os;
    os << "no completion in " << res.assignments_tried
       << " assignments; necessary conditions hold yet no code exists";
    return {true, os.str()};
}

CriterionOutcome criterion4_construction_grid() {
    std::size_t instances = 0;
    for (const PmdsParams& p : s1_grid()) {
        const FieldBound bound = field_size_bound_s1(p.ell(), p.max_r());
        const FieldPtr field = minimal_field(bound.min_q);
        MatrixGF g = build_s1(p, field);
        if (!pmds_oracle(g, p).is_pmds) {
            return {false, "oracle rejected a built code over " + field->literal()};
        }
        if (!mr_check(g, p).is_mr) {
            return {false, "mr_check rejected a built code over " + field->literal()};
        }
        ClassificationVerdict v = classify_s1(g, p);
        if (!v.is_pmds) return {false, "classify rejected a built code"};
        for (const auto& alpha : v.standard_form->alphas) {
            for (auto a : alpha) {
                if (a != 1) return {false, "built code has a non-unit multiplier"};
            }
        }
        if (!necessary_conditions_general_s(p, field).pass) {
            return {false, "an accepted code violates the necessary conditions"};
        }
        ++instances;
    }
    return {true, std::to_string(instances) + " grid instances, minimal fields incl. gf(2^2)"};
}

CriterionOutcome criterion5_differential() {
    std::mt19937_64 rng(g_seed);
    std::size_t checked = 0;
    for (std::uint32_t q : {3u, 4u}) {
        const FieldPtr f = q == 4 ? Field::binary_ext(2) : Field::prime(3);
        const PmdsParams p = PmdsParams::make(2, 2, {1, 1}, 3);
        for (int trial = 0; trial < 500; ++trial) {
            MatrixGF g = random_full_rank(f, 3, 6, rng);
            AgreementReport rep = classify_equals_oracle(g, p);
            if (!rep.agree) {
                return {false, "disagreement over " + f->literal() + " at trial " +
                                   std::to_string(trial)};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " random matrices, zero disagreements"};
}

CriterionOutcome criterion6_no_gf3_code() {
    // Every dimension-3 code with these parameters has a generator in block
    // standard form, so enumerating all standard forms over GF(3) and
    // running the brute-force oracle on each settles existence outright.
    const FieldPtr f3 = Field::prime(3);
    const PmdsParams p = PmdsParams::make(2, 2, {2, 2}, 3);
    const std::size_t ell = 2, r1 = 2, r2 = 2;

    std::uint64_t candidates = 0, accepted = 0;
    std::vector<std::uint32_t> b_entries(ell * r1, 0);
    for (bool more_b = true; more_b;) {
        // alpha vectors over GF(3)* = {1,2}.
        for (std::uint32_t a0 : {1u, 2u}) {
            for (std::uint32_t a1 : {1u, 2u}) {
                for (std::uint32_t a2 : {1u, 2u}) {
                    std::vector<std::uint32_t> x_entries((ell - 1) * r2, 0);
                    std::vector<std::uint32_t> tail(r2, 0);
                    for (bool more_x = true; more_x;) {
                        for (bool more_t = true; more_t;) {
                            StandardForm form{p,  f3, {}, std::nullopt, {}, {},
                                              MatrixGF(f3, ell, r2), {0, 1}, 1};
                            MatrixGF b(f3, ell, ell + r1);
                            for (std::size_t i = 0; i < ell; ++i) {
                                b.set(i, i, 1);
                                for (std::size_t c = 0; c < r1; ++c) {
                                    b.set(i, ell + c, b_entries[i * r1 + c]);
                                }
                            }
                            form.blocks.push_back(b);
                            form.alphas = {{a0, a1}, {a2}};
                            for (std::size_t c = 0; c < r2; ++c) {
                                form.x_last.set(0, c, x_entries[c]);
                                form.x_last.set(ell - 1, c, tail[c]);
                            }
                            MatrixGF coupler(f3, ell, ell + r2);
                            for (std::size_t j = 0; j < ell; ++j) {
                                coupler.set(j, ell - 1, form.alphas[0][j]);
                                for (std::size_t c = 0; c < r2; ++c) {
                                    coupler.set(j, ell + c,
                                                f3->mul(form.alphas[0][j], tail[c]));
                                }
                            }
                            form.couplers.push_back(coupler);
                            MatrixGF a(f3, ell - 1, ell + r2);
                            a.set(0, 0, 1);
                            a.set(0, ell - 1, a2);
                            for (std::size_t c = 0; c < r2; ++c) {
                                a.set(0, ell + c, f3->mul(a2, x_entries[c]));
                            }
                            form.a_block = a;

                            ++candidates;
                            MatrixGF g = form.assemble();
                            if (rank(g) == p.k() && pmds_oracle(g, p).is_pmds) ++accepted;

                            more_t = false;
                            for (auto& v : tail) {
                                if (++v < 3) {
                                    more_t = true;
                                    break;
                                }
                                v = 0;
                            }
                        }
                        more_x = false;
                        for (auto& v : x_entries) {
                            if (++v < 3) {
                                more_x = true;
                                break;
                            }
                            v = 0;
                        }
                    }
                }
            }
        }
        more_b = false;
        for (auto& v : b_entries) {
            if (++v < 3) {
                more_b = true;
                break;
            }
            v = 0;
        }
    }
    std::ostringstream os;
    os << candidates << " standard-form candidates, " << accepted << " accepted";
    if (accepted != 0) return {false, os.str()};
    if (candidates != 52488) return {false, os.str() + " (wrong enumeration size)"};
    return {true, os.str()};
}

CriterionOutcome criterion7_decoder_suite() {
    std::mt19937_64 rng(g_seed + 7);
    double min_c = 1e300, max_c = 0;
    std::uint64_t decodes = 0;
    for (const PmdsParams& p : s1_grid()) {
        const FieldPtr field = minimal_field(field_size_bound_s1(p.ell(), p.max_r()).min_q);
        const MatrixGF g = build_s1(p, field);
        ClassificationVerdict v = classify_s1(g, p);
        if (!v.is_pmds) return {false, "grid code failed to classify"};
        StructuredParityCheck spc = build_structured_h(*v.standard_form);

        // Message sample: exhaustive when q^k is small, else 50 random.
        std::vector<std::vector<std::uint32_t>> messages;
        double total = std::pow(static_cast<double>(field->order()),
                                static_cast<double>(p.k()));
        if (total <= 2000) {
            std::vector<std::uint32_t> msg(p.k(), 0);
            for (bool more = true; more;) {
                messages.push_back(msg);
                more = false;
                for (auto& m : msg) {
                    if (++m < field->order()) {
                        more = true;
                        break;
                    }
                    m = 0;
                }
            }
        } else {
            std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
            for (int i = 0; i < 50; ++i) {
                std::vector<std::uint32_t> msg(p.k());
                for (auto& m : msg) m = dist(rng);
                messages.push_back(msg);
            }
        }

        std::uint64_t worst_mults = 0;
        for (const ErasurePattern& pattern : pmds_pattern_family(p)) {
            for (const auto& msg : messages) {
                const std::vector<std::uint32_t> word = encode(g, msg);
                ReceivedWord rw{field, {}};
                rw.symbols.assign(word.begin(), word.end());
                for (auto e : pattern.erased()) rw.symbols[e] = std::nullopt;

                DecodeStats stats;
                std::vector<std::uint32_t> structured = decode_erasures(spc, rw, &stats);
                worst_mults = std::max(worst_mults, stats.solver_multiplications);
                if (structured != word) return {false, "structured decoder missed a word"};
                GenericDecodeResult generic = decode_generic(g, rw);
                if (!generic.correctable || generic.codeword != word) {
                    return {false, "generic decoder missed a word"};
                }
                ++decodes;
            }
        }
        const double budget = static_cast<double>(p.m()) *
                              std::pow(static_cast<double>(p.max_r() + 1), 3.0);
        const double c = static_cast<double>(worst_mults) / budget;
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
    }
    std::ostringstream os;
    os << decodes << " round trips; solver-cost constants in [" << std::setprecision(3) << min_c
       << ", " << max_c << "]";
    if (max_c > 3.0 * min_c) {
        return {false, os.str() + " spread exceeds 3x"};
    }
    return {true, os.str()};
}

CriterionOutcome criterion8_ell1_general_s() {
    std::size_t instances = 0;
    for (std::size_t m : {2, 3, 4}) {
        for (std::size_t s = 1; s < m; ++s) {
            const std::size_t combos = std::size_t{1} << m;
            for (std::size_t bits = 0; bits < combos; ++bits) {
                std::vector<std::size_t> r;
                for (std::size_t i = 0; i < m; ++i) r.push_back(1 + ((bits >> i) & 1));
                // Minimal field under the construction's own bound,
                // including the doubly-extended exception.
                std::size_t min_q = m - 1;
                const std::size_t k = m - s;
                if (m >= 4 && ((m - 2) & (m - 3)) == 0 && (k == 3 || k == m - 3)) {
                    min_q = m - 2;  // m = 2^h + 2 and k in {3, 2^h - 1}
                }
                const FieldPtr field = minimal_field(min_q);
                MatrixGF g = build_ell1_general_s(m, s, r, field);
                if (!pmds_oracle(g, PmdsParams::make(m, 1, r, k)).is_pmds) {
                    return {false, "oracle rejected m=" + std::to_string(m) +
                                       " s=" + std::to_string(s) + " over " + field->literal()};
                }
                ++instances;
            }
        }
    }
    return {true, std::to_string(instances) + " instances incl. the gf(2) doubly-extended case"};
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--data-dir" && i + 1 < argc) {
            g_data_dir = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            g_seed = std::stoull(argv[++i]);
        } else {
            std::cerr << "usage: pmds_acceptance [--data-dir DIR] [--seed N]\n";
            return 2;
        }
    }

    int failures = 0;
    failures += !run_criterion(1, "GF(3) [6,3,2;1,1] code: oracle, classify, mr", 1.0,
                               criterion1_gf3_example);
    failures += !run_criterion(2, "GF(4) [9,5,3;2,1] code: oracle", 5.0, criterion2_gf4_example);
    failures += !run_criterion(3, "GF(7) s=2 code, exhausted template, conditions", 120.0,
                               criterion3_gf7_appendix);
    failures += !run_criterion(4, "construction grid: oracle, mr, classify, unit multipliers",
                               120.0, criterion4_construction_grid);
    failures += !run_criterion(5, "classification vs oracle on 1000 random matrices", 0,
                               criterion5_differential);
    failures += !run_criterion(6, "no [8,3,2;2,2] code over GF(3): exhaustive", 300.0,
                               criterion6_no_gf3_code);
    failures += !run_criterion(7, "decoder suite: round trips, differential, cubic budget", 0,
                               criterion7_decoder_suite);
    failures += !run_criterion(8, "locality-1 general-s constructions at minimal fields", 60.0,
                               criterion8_ell1_general_s);

    std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << "\n";
    return failures;
}
