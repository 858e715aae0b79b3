#pragma once

#include <iosfwd>
#include <string>

#include "pmds/decode.hpp"

namespace pmds {

/// Code files carry a two-line header followed by the body:
///
///   field gf(3)
///   params m=2 l=2 r=1,1 k=3
///   1 0 1 0 1 1
///   ...
///
/// Matrix bodies have k rows of n field literals; templates additionally
/// allow `*` for unknown entries; word bodies are a single row of n
/// literals with `?` marking erasures. Serializing a parsed canonical
/// file reproduces it byte for byte.
enum class FileKind { Matrix, Template, Word };

struct ParsedFile {
    FieldPtr field;
    PmdsParams params;
    FileKind kind = FileKind::Matrix;
    std::optional<MatrixGF> matrix;
    std::optional<TemplateMatrix> tmpl;
    std::optional<ReceivedWord> word;
};

ParsedFile parse_code_file(std::istream& in, FileKind expected);
ParsedFile parse_code_file(const std::string& text, FileKind expected);
ParsedFile load_code_file(const std::string& path, FileKind expected);

std::string serialize_code_file(const MatrixGF& matrix, const PmdsParams& params);
std::string serialize_template_file(const TemplateMatrix& tmpl, const PmdsParams& params);
std::string serialize_word_file(const ReceivedWord& word, const PmdsParams& params);

}  // namespace pmds
