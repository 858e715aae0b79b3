#include "pmds/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>

#include "pmds/io.hpp"

namespace pmds {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json params_json(const PmdsParams& p) {
    return json{{"m", p.m()}, {"l", p.ell()}, {"r", p.r()},
                {"k", p.k()}, {"n", p.n()},   {"s", p.s()}};
}

json matrix_json(const MatrixGF& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(std::vector<std::uint32_t>(m.row(r).begin(), m.row(r).end()));
    }
    return rows;
}

const char* stage_name(PmdsFailureStage stage) {
    switch (stage) {
        case PmdsFailureStage::BlockMds: return "block-mds";
        case PmdsFailureStage::PuncturedMds: return "punctured-mds";
        case PmdsFailureStage::None: break;
    }
    return "none";
}

const char* failure_name(ClassifyFailureKind kind) {
    switch (kind) {
        case ClassifyFailureKind::StandardizationImpossible: return "standardization-impossible";
        case ClassifyFailureKind::ZeroAlpha: return "some-alpha-zero";
        case ClassifyFailureKind::BlockSeedNotMds: return "block-seed-not-mds";
        case ClassifyFailureKind::LastSeedNotMds: return "last-seed-not-mds";
    }
    return "unknown";
}

json oracle_json(const PmdsVerdict& v) {
    json out{{"is_pmds", v.is_pmds}, {"failing_stage", stage_name(v.failing_stage)}};
    if (v.block_witness) {
        out["block"] = v.block_witness->block;
        out["row_space_dim"] = v.block_witness->row_space_dim;
        if (v.block_witness->mds && v.block_witness->mds->witness) {
            out["witness_columns"] = *v.block_witness->mds->witness;
        }
    }
    if (v.puncture_witness) {
        out["erased"] = v.puncture_witness->erased;
        if (v.puncture_witness->mds.witness) {
            out["witness_columns"] = *v.puncture_witness->mds.witness;
        }
    }
    return out;
}

json form_json(const StandardForm& form) {
    json blocks = json::array();
    for (const auto& b : form.blocks) blocks.push_back(matrix_json(b));
    json out{{"alphas", form.alphas},
             {"x_last", matrix_json(form.x_last)},
             {"blocks", blocks},
             {"block_order", form.block_order},
             {"last_role_block", form.last_role_block}};
    if (form.a_block) out["a_block"] = matrix_json(*form.a_block);
    return out;
}

json classify_json(const ClassificationVerdict& v) {
    json out{{"is_pmds", v.is_pmds}};
    if (v.standard_form) out["standard_form"] = form_json(*v.standard_form);
    if (v.failure) {
        out["failure"] = failure_name(v.failure->kind);
        out["detail"] = v.failure->detail;
        out["block"] = v.failure->block;
        if (v.failure->mds_witness && v.failure->mds_witness->witness) {
            out["witness_columns"] = *v.failure->mds_witness->witness;
        }
    }
    return out;
}

std::string describe_oracle(const PmdsVerdict& v) {
    if (v.is_pmds) return "PMDS: yes\n";
    std::string s = "PMDS: no (";
    if (v.block_witness) {
        s += "block " + std::to_string(v.block_witness->block);
        if (!v.block_witness->mds) {
            s += " has row-space dimension " + std::to_string(v.block_witness->row_space_dim);
        } else {
            s += " is not MDS";
        }
    } else if (v.puncture_witness) {
        s += "puncturing columns {";
        for (std::size_t i = 0; i < v.puncture_witness->erased.size(); ++i) {
            s += (i ? "," : "") + std::to_string(v.puncture_witness->erased[i]);
        }
        s += "} leaves a non-MDS code";
    }
    return s + ")\n";
}

/// Shared output plumbing: JSON envelope or plain text.
struct Reporter {
    std::ostream& out;
    bool as_json = false;
    std::string command;
    Clock::time_point start = Clock::now();

    int emit(int exit_code, bool ok, const json& verdict, const std::string& text,
             const FieldPtr& field = nullptr, const PmdsParams* params = nullptr) {
        if (as_json) {
            json env{{"schema", "pmds-report/1"},
                     {"command", command},
                     {"ok", ok},
                     {"exit_code", exit_code},
                     {"verdict", verdict},
                     {"timing_ms", elapsed_ms()}};
            if (field) env["field"] = field->literal();
            if (params) env["params"] = params_json(*params);
            out << env.dump(2) << "\n";
        } else {
            out << text;
        }
        return exit_code;
    }

    int emit_error(int exit_code, const std::string& message, std::ostream& err) {
        if (as_json) {
            json env{{"schema", "pmds-report/1"},
                     {"command", command},
                     {"ok", false},
                     {"exit_code", exit_code},
                     {"error", message},
                     {"timing_ms", elapsed_ms()}};
            out << env.dump(2) << "\n";
        }
        err << "error: " << message << "\n";
        return exit_code;
    }

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

void write_output(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

std::vector<std::size_t> parse_r_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const std::string part =
            comma == std::string::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
        try {
            out.push_back(std::stoul(part));
        } catch (const std::exception&) {
            throw ParseError("bad redundancy list entry: '" + part + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::uint32_t> parse_message(const std::string& text, const Field& f) {
    std::vector<std::uint32_t> out;
    std::string part;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!part.empty()) {
                try {
                    const unsigned long v = std::stoul(part);
                    if (v >= f.order()) throw std::out_of_range("range");
                    out.push_back(static_cast<std::uint32_t>(v));
                } catch (const std::exception&) {
                    throw ParseError("bad message symbol: '" + part + "'");
                }
                part.clear();
            }
        } else {
            part.push_back(ch);
        }
    }
    return out;
}

int run_construct(Reporter& rep, std::ostream& err, std::size_t m, std::size_t ell,
                  const std::string& r_csv, const std::string& field_lit, std::size_t s,
                  const std::string& out_path) {
    try {
        FieldPtr field = Field::parse(field_lit);
        std::vector<std::size_t> r = parse_r_list(r_csv);
        MatrixGF g = [&]() -> MatrixGF {
            if (s == 1) {
                return build_s1(PmdsParams::make(m, ell, r, m * ell - 1), field);
            }
            if (ell != 1) {
                throw InvalidArgumentError(
                    "constructions with s > 1 are available for locality 1 only");
            }
            return build_ell1_general_s(m, s, r, field);
        }();
        PmdsParams params = PmdsParams::make(m, ell, r, m * ell - s);
        const std::string text = serialize_code_file(g, params);
        if (!out_path.empty()) write_output(out_path, text);
        return rep.emit(0, true, json{{"matrix", matrix_json(g)}}, out_path.empty() ? text : "",
                        field, &params);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_verify(Reporter& rep, std::ostream& err, const std::string& path,
               const std::string& mode) {
    try {
        ParsedFile file = load_code_file(path, FileKind::Matrix);
        const MatrixGF& g = *file.matrix;
        if (mode == "oracle") {
            PmdsVerdict v = pmds_oracle(g, file.params);
            return rep.emit(v.is_pmds ? 0 : 1, v.is_pmds, oracle_json(v), describe_oracle(v),
                            file.field, &file.params);
        }
        if (mode == "classify") {
            ClassificationVerdict v = classify_s1(g, file.params);
            std::string text = v.is_pmds ? "PMDS: yes\n"
                                         : "PMDS: no (" + std::string(failure_name(v.failure->kind)) +
                                               ": " + v.failure->detail + ")\n";
            return rep.emit(v.is_pmds ? 0 : 1, v.is_pmds, classify_json(v), text, file.field,
                            &file.params);
        }
        if (mode == "both") {
            AgreementReport a = classify_equals_oracle(g, file.params);
            json verdict{{"agree", a.agree},
                         {"classify_is_pmds", a.classify_is_pmds},
                         {"oracle_is_pmds", a.oracle_is_pmds}};
            if (!a.agree) {
                rep.emit(2, false, verdict,
                         "DISAGREEMENT: classification and oracle differ; this is a bug\n",
                         file.field, &file.params);
                err << "error: classification and oracle disagree on '" << path << "'\n";
                return 2;
            }
            std::string text = a.oracle_is_pmds ? "PMDS: yes (both checks agree)\n"
                                                : "PMDS: no (both checks agree)\n";
            return rep.emit(a.oracle_is_pmds ? 0 : 1, a.oracle_is_pmds, verdict, text,
                            file.field, &file.params);
        }
        if (mode == "mr") {
            PmdsVerdict v = pmds_oracle(g, file.params);
            if (!v.is_pmds) {
                return rep.emit(1, false, oracle_json(v),
                                "not PMDS, maximal recoverability not evaluated\n", file.field,
                                &file.params);
            }
            MrReport r = mr_check(g, file.params);
            json verdict{{"is_mr", r.is_mr}};
            if (r.counterexample) {
                verdict["counterexample"] = r.counterexample->erased();
                verdict["kind"] = r.kind == MrCounterexampleKind::FamilyPatternUncorrectable
                                      ? "family-pattern-uncorrectable"
                                      : "overflow-pattern-correctable";
            }
            return rep.emit(r.is_mr ? 0 : 1, r.is_mr, verdict,
                            r.is_mr ? "maximally recoverable: yes\n"
                                    : "maximally recoverable: no\n",
                            file.field, &file.params);
        }
        throw InvalidArgumentError("unknown mode '" + mode + "'");
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_decode(Reporter& rep, std::ostream& err, const std::string& code_path,
               const std::string& word_path, bool force_generic, const std::string& out_path) {
    try {
        ParsedFile code = load_code_file(code_path, FileKind::Matrix);
        ParsedFile wordf = load_code_file(word_path, FileKind::Word);
        if (!code.field->same_as(*wordf.field)) {
            throw ParseError("code and word files use different fields");
        }
        if (code.params.n() != wordf.params.n()) {
            throw ParseError("code and word files have different lengths");
        }
        const MatrixGF& g = *code.matrix;
        const ReceivedWord& rw = *wordf.word;

        std::string decoder = "generic";
        std::optional<std::vector<std::uint32_t>> recovered;
        if (!force_generic && code.params.s() == 1) {
            ClassificationVerdict v = classify_s1(g, code.params);
            if (v.is_pmds && rw.pattern().overflow(code.params) <= 1) {
                StructuredParityCheck spc = build_structured_h(*v.standard_form);
                recovered = decode_erasures(spc, rw);
                decoder = "structured";
            }
        }
        if (!recovered) {
            GenericDecodeResult res = decode_generic(g, rw);
            if (!res.correctable) {
                json verdict{{"uncorrectable", true},
                             {"rank_deficit", res.rank_deficit},
                             {"decoder", "generic"}};
                return rep.emit(1, false, verdict,
                                "uncorrectable: rank deficit " +
                                    std::to_string(res.rank_deficit) + "\n",
                                code.field, &code.params);
            }
            recovered = res.codeword;
        }
        ReceivedWord full{code.field, {}};
        full.symbols.assign(recovered->begin(), recovered->end());
        const std::string text = serialize_word_file(full, code.params);
        if (!out_path.empty()) write_output(out_path, text);
        json verdict{{"recovered", *recovered}, {"decoder", decoder}};
        return rep.emit(0, true, verdict, out_path.empty() ? text : "", code.field,
                        &code.params);
    } catch (const DecodeFailureError& e) {
        return rep.emit_error(1, e.what(), err);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_encode(Reporter& rep, std::ostream& err, const std::string& code_path,
               const std::string& message, const std::string& out_path) {
    try {
        ParsedFile code = load_code_file(code_path, FileKind::Matrix);
        std::vector<std::uint32_t> msg = parse_message(message, *code.field);
        std::vector<std::uint32_t> word = encode(*code.matrix, msg);
        ReceivedWord full{code.field, {}};
        full.symbols.assign(word.begin(), word.end());
        const std::string text = serialize_word_file(full, code.params);
        if (!out_path.empty()) write_output(out_path, text);
        return rep.emit(0, true, json{{"codeword", word}}, out_path.empty() ? text : "",
                        code.field, &code.params);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_search(Reporter& rep, std::ostream& err, const std::string& path,
               std::uint64_t budget) {
    try {
        ParsedFile file = load_code_file(path, FileKind::Template);
        CompletionResult res = completion_search(*file.tmpl, file.params, budget);
        json verdict{{"found", res.found}, {"assignments_tried", res.assignments_tried}};
        if (res.found) {
            verdict["completion"] = matrix_json(*res.completion);
            return rep.emit(0, true, verdict, serialize_code_file(*res.completion, file.params),
                            file.field, &file.params);
        }
        return rep.emit(1, false, verdict,
                        "none (tried " + std::to_string(res.assignments_tried) +
                            " assignments)\n",
                        file.field, &file.params);
    } catch (const BudgetExceededError& e) {
        return rep.emit_error(3, e.what(), err);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_bounds(Reporter& rep, std::ostream& err, std::size_t m, std::size_t ell,
               const std::string& r_csv, std::size_t s, const std::string& field_lit) {
    try {
        std::vector<std::size_t> r = r_csv.empty() ? std::vector<std::size_t>{}
                                                   : parse_r_list(r_csv);
        if (ell > 1 && r.empty()) {
            throw InvalidArgumentError("--r is required when l > 1");
        }
        const std::size_t max_r = r.empty() ? 1 : *std::max_element(r.begin(), r.end());

        FieldBound bound = [&] {
            if (ell == 1 && s > 1) {
                // Concatenation construction: the outer [m, m-s]-MDS code
                // drives the field size.
                if (s >= m) throw InvalidArgumentError("need s < m");
                const std::size_t k = m - s;
                if (k <= 1 || k + 1 >= m) return FieldBound{2, false, false};
                for (unsigned h = 1; h <= 30; ++h) {
                    const std::size_t pow2 = std::size_t{1} << h;
                    if (pow2 + 2 == m && (k == 3 || k == pow2 - 1)) {
                        return FieldBound{m - 2, true, true};
                    }
                }
                return FieldBound{m - 1, true, false};
            }
            if (s == 1) return field_size_bound_s1(ell, max_r);
            return field_size_bound_general_s(
                PmdsParams::make(m, ell, r, m * ell - s));
        }();

        json verdict{{"min_q", bound.min_q},
                     {"conjecture_conditional", bound.conjecture_conditional},
                     {"doubly_extended_case", bound.doubly_extended_case}};
        std::string text = "minimal field size: " + std::to_string(bound.min_q);
        if (bound.doubly_extended_case) text += " (doubly-extended case)";
        if (bound.conjecture_conditional) text += " [assumes the MDS conjecture]";
        text += "\n";

        if (!field_lit.empty()) {
            if (r.empty()) throw InvalidArgumentError("--r is required with --field");
            FieldPtr field = Field::parse(field_lit);
            NecessaryConditionsReport nc = necessary_conditions_general_s(
                PmdsParams::make(m, ell, r, m * ell - s), field);
            verdict["necessary_conditions"] = json{
                {"pass", nc.pass},
                {"local_exists", nc.local.exists},
                {"global_exists", nc.global.exists},
                {"conjecture_conditional", nc.conjecture_conditional}};
            text += std::string("necessary conditions over ") + field->literal() + ": " +
                    (nc.pass ? "pass" : "fail") + "\n";
        }
        return rep.emit(0, true, verdict, text);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

int run_standardize(Reporter& rep, std::ostream& err, const std::string& path) {
    try {
        ParsedFile file = load_code_file(path, FileKind::Matrix);
        auto result = standardize(*file.matrix, file.params);
        if (std::holds_alternative<ClassifyFailure>(result)) {
            const auto& f = std::get<ClassifyFailure>(result);
            json verdict{{"standardized", false},
                         {"failure", failure_name(f.kind)},
                         {"detail", f.detail}};
            return rep.emit(1, false, verdict,
                            "not standardizable (" + f.detail + ")\n", file.field,
                            &file.params);
        }
        const StandardForm& form = std::get<StandardForm>(result);
        json verdict{{"standardized", true}, {"standard_form", form_json(form)}};
        std::string text = serialize_code_file(form.assemble(), form.params);
        return rep.emit(0, true, verdict, text, file.field, &file.params);
    } catch (const ParseError& e) {
        return rep.emit_error(2, e.what(), err);
    } catch (const InvalidArgumentError& e) {
        return rep.emit_error(2, e.what(), err);
    }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partial-MDS (maximally recoverable) code toolkit"};
    app.name("pmds");
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::size_t m = 0, ell = 0, s = 1;
    std::string r_csv, field_lit, path, word_path, message, mode = "oracle", out_path;
    std::uint64_t budget = 2'000'000;
    bool force_generic = false;

    CLI::App* construct = app.add_subcommand("construct", "build a generator matrix");
    construct->fallthrough();
    construct->add_option("--m", m, "number of locality blocks")->required();
    construct->add_option("--l", ell, "locality")->required();
    construct->add_option("--r", r_csv, "per-block redundancies, comma separated")->required();
    construct->add_option("--field", field_lit, "field literal, e.g. gf(4)")->required();
    construct->add_option("--s", s, "global parities (s > 1 needs l = 1)")->default_val(1);
    construct->add_option("-o,--out", out_path, "write the code file here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "check the partial-MDS property");
    verify->fallthrough();
    verify->add_option("file", path, "code file")->required();
    verify->add_option("--mode", mode, "oracle | classify | both | mr")
        ->check(CLI::IsMember({"oracle", "classify", "both", "mr"}))
        ->default_val("oracle");

    CLI::App* decode = app.add_subcommand("decode", "recover erasures in a received word");
    decode->fallthrough();
    decode->add_option("code", path, "code file")->required();
    decode->add_option("word", word_path, "received word file")->required();
    decode->add_flag("--generic", force_generic, "skip the structured decoder");
    decode->add_option("-o,--out", out_path, "write the recovered word here");

    CLI::App* encode_cmd = app.add_subcommand("encode", "encode a message");
    encode_cmd->fallthrough();
    encode_cmd->add_option("code", path, "code file")->required();
    encode_cmd->add_option("--message", message, "k message symbols, comma separated")
        ->required();
    encode_cmd->add_option("-o,--out", out_path, "write the codeword here");

    CLI::App* search = app.add_subcommand("search", "complete a template exhaustively");
    search->fallthrough();
    search->add_option("file", path, "template file with * wildcards")->required();
    search->add_option("--budget", budget, "assignment budget")->default_val(2'000'000);

    CLI::App* bounds = app.add_subcommand("bounds", "field-size bounds and conditions");
    bounds->fallthrough();
    bounds->add_option("--m", m, "number of locality blocks")->required();
    bounds->add_option("--l", ell, "locality")->required();
    bounds->add_option("--r", r_csv, "per-block redundancies");
    bounds->add_option("--s", s, "global parities")->default_val(1);
    bounds->add_option("--field", field_lit, "also evaluate conditions over this field");

    CLI::App* standardize_cmd =
        app.add_subcommand("standardize", "reduce a generator to block standard form");
    standardize_cmd->fallthrough();
    standardize_cmd->add_option("file", path, "code file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    Reporter rep{out, as_json, app.get_subcommands().front()->get_name()};
    if (construct->parsed()) return run_construct(rep, err, m, ell, r_csv, field_lit, s, out_path);
    if (verify->parsed()) return run_verify(rep, err, path, mode);
    if (decode->parsed()) return run_decode(rep, err, path, word_path, force_generic, out_path);
    if (encode_cmd->parsed()) return run_encode(rep, err, path, message, out_path);
    if (search->parsed()) return run_search(rep, err, path, budget);
    if (bounds->parsed()) return run_bounds(rep, err, m, ell, r_csv, s, field_lit);
    if (standardize_cmd->parsed()) return run_standardize(rep, err, path);
    return 2;
}

}  // namespace pmds
