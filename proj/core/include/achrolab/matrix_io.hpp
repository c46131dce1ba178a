#pragma once

#include "achrolab/matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace achrolab {

/// Malformed matrix text (bad header, ragged data line, unreadable file).
struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format: a header line "p q", then p data lines of q whitespace
/// separated colour tokens. Lines starting with '#' and blank lines are
/// ignored. Rendering is bit-exact: single spaces, LF line endings, no
/// trailing whitespace, so parse(render(m)) == m.
ColourMatrix read_matrix(std::istream & in);
ColourMatrix read_matrix_file(const std::string & path);

std::string render_matrix(const ColourMatrix & m);
void write_matrix_file(const std::string & path, const ColourMatrix & m);

/// The same grid as a LaTeX pmatrix block, for eyeballing against typeset
/// matrices.
std::string render_latex(const ColourMatrix & m);

} // namespace achrolab
