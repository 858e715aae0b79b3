#include "pmds/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pmds {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad " + what + ": '" + s + "'");
    }
    return v;
}

std::uint32_t parse_symbol(const std::string& s, const Field& f) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("bad field literal: '" + s + "'");
    }
    if (v >= f.order()) {
        throw ParseError("value " + s + " out of range for " + f.literal());
    }
    return v;
}

std::string header_of(const PmdsParams& p, const Field& f) {
    std::ostringstream os;
    os << "field " << f.literal() << "\n";
    os << "params m=" << p.m() << " l=" << p.ell() << " r=";
    for (std::size_t i = 0; i < p.m(); ++i) os << (i ? "," : "") << p.r()[i];
    os << " k=" << p.k() << "\n";
    return os.str();
}

}  // namespace

ParsedFile parse_code_file(std::istream& in, FileKind expected) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input, expected a field line");
    auto field_tokens = tokens_of(line);
    if (field_tokens.size() != 2 || field_tokens[0] != "field") {
        throw ParseError("first line must be 'field <literal>'");
    }
    FieldPtr field = Field::parse(field_tokens[1]);

    if (!std::getline(in, line)) throw ParseError("missing params line");
    auto ptoks = tokens_of(line);
    if (ptoks.empty() || ptoks[0] != "params") {
        throw ParseError("second line must be 'params m=.. l=.. r=.. k=..'");
    }
    std::optional<std::size_t> m, ell, k;
    std::optional<std::vector<std::size_t>> r;
    for (std::size_t i = 1; i < ptoks.size(); ++i) {
        const auto eq = ptoks[i].find('=');
        if (eq == std::string::npos) throw ParseError("bad params token: '" + ptoks[i] + "'");
        const std::string key = ptoks[i].substr(0, eq);
        const std::string val = ptoks[i].substr(eq + 1);
        if (key == "m") {
            m = parse_size(val, "m");
        } else if (key == "l") {
            ell = parse_size(val, "l");
        } else if (key == "k") {
            k = parse_size(val, "k");
        } else if (key == "r") {
            std::vector<std::size_t> rs;
            std::size_t pos = 0;
            while (pos <= val.size()) {
                const auto comma = val.find(',', pos);
                const std::string part =
                    comma == std::string::npos ? val.substr(pos) : val.substr(pos, comma - pos);
                rs.push_back(parse_size(part, "r entry"));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            r = std::move(rs);
        } else {
            throw ParseError("unknown params key: '" + key + "'");
        }
    }
    if (!m || !ell || !r || !k) throw ParseError("params line needs m, l, r and k");
    PmdsParams params = [&] {
        try {
            return PmdsParams::make(*m, *ell, *r, *k);
        } catch (const InvalidArgumentError& e) {
            throw ParseError(std::string("bad params: ") + e.what());
        }
    }();

    const std::size_t n = params.n();
    const std::size_t body_rows = expected == FileKind::Word ? 1 : params.k();
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        rows.push_back(std::move(toks));
    }
    if (rows.size() != body_rows) {
        throw ParseError("expected " + std::to_string(body_rows) + " body rows, found " +
                         std::to_string(rows.size()));
    }
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw ParseError("expected " + std::to_string(n) + " entries per row, found " +
                             std::to_string(row.size()));
        }
    }

    ParsedFile out{field, params, expected, std::nullopt, std::nullopt, std::nullopt};
    switch (expected) {
        case FileKind::Matrix: {
            MatrixGF mat(field, params.k(), n);
            for (std::size_t rr = 0; rr < params.k(); ++rr) {
                for (std::size_t c = 0; c < n; ++c) {
                    mat.set(rr, c, parse_symbol(rows[rr][c], *field));
                }
            }
            out.matrix = std::move(mat);
            break;
        }
        case FileKind::Template: {
            TemplateMatrix tmpl{MatrixGF(field, params.k(), n), {}};
            for (std::size_t rr = 0; rr < params.k(); ++rr) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (rows[rr][c] == "*") {
                        tmpl.wildcards.emplace_back(rr, c);
                    } else {
                        tmpl.base.set(rr, c, parse_symbol(rows[rr][c], *field));
                    }
                }
            }
            out.tmpl = std::move(tmpl);
            break;
        }
        case FileKind::Word: {
            ReceivedWord w{field, {}};
            w.symbols.resize(n);
            for (std::size_t c = 0; c < n; ++c) {
                if (rows[0][c] == "?") {
                    w.symbols[c] = std::nullopt;
                } else {
                    w.symbols[c] = parse_symbol(rows[0][c], *field);
                }
            }
            out.word = std::move(w);
            break;
        }
    }
    return out;
}

ParsedFile parse_code_file(const std::string& text, FileKind expected) {
    std::istringstream is(text);
    return parse_code_file(is, expected);
}

ParsedFile load_code_file(const std::string& path, FileKind expected) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_code_file(in, expected);
}

std::string serialize_code_file(const MatrixGF& matrix, const PmdsParams& params) {
    std::ostringstream os;
    os << header_of(params, *matrix.field());
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            os << (c ? " " : "") << matrix.at(r, c);
        }
        os << "\n";
    }
    return os.str();
}

std::string serialize_template_file(const TemplateMatrix& tmpl, const PmdsParams& params) {
    std::ostringstream os;
    os << header_of(params, *tmpl.base.field());
    std::size_t next = 0;
    for (std::size_t r = 0; r < tmpl.base.rows(); ++r) {
        for (std::size_t c = 0; c < tmpl.base.cols(); ++c) {
            os << (c ? " " : "");
            if (next < tmpl.wildcards.size() && tmpl.wildcards[next] == std::make_pair(r, c)) {
                os << "*";
                ++next;
            } else {
                os << tmpl.base.at(r, c);
            }
        }
        os << "\n";
    }
    return os.str();
}

std::string serialize_word_file(const ReceivedWord& word, const PmdsParams& params) {
    std::ostringstream os;
    os << header_of(params, *word.field);
    for (std::size_t c = 0; c < word.symbols.size(); ++c) {
        os << (c ? " " : "");
        if (word.symbols[c]) {
            os << *word.symbols[c];
        } else {
            os << "?";
        }
    }
    os << "\n";
    return os.str();
}

}  // namespace pmds
