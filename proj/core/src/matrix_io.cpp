#include "achrolab/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace achrolab {

namespace {

std::vector<std::string> split_tokens(const std::string & line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

bool content_line(const std::string & line) {
    for (char ch : line) {
        if (ch == '#')
            return false;
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return true;
    }
    return false;
}

} // namespace

ColourMatrix read_matrix(std::istream & in) {
    std::string line;
    std::vector<std::vector<std::string>> data;
    int p = -1, q = -1;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!content_line(line))
            continue;
        std::vector<std::string> toks = split_tokens(line);
        if (p < 0) {
            if (toks.size() != 2)
                throw MatrixParseError("line " + std::to_string(line_no) +
                                       ": header must be two integers 'p q'");
            try {
                p = std::stoi(toks[0]);
                q = std::stoi(toks[1]);
            } catch (const std::exception &) {
                throw MatrixParseError("line " + std::to_string(line_no) +
                                       ": header must be two integers 'p q'");
            }
            if (p < 1 || q < 1)
                throw MatrixParseError("line " + std::to_string(line_no) +
                                       ": matrix dimensions must be positive");
            continue;
        }
        if (static_cast<int>(data.size()) == p)
            throw MatrixParseError("line " + std::to_string(line_no) +
                                   ": more data lines than the declared " + std::to_string(p) +
                                   " rows");
        if (static_cast<int>(toks.size()) != q)
            throw MatrixParseError("line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(q) + " tokens, got " +
                                   std::to_string(toks.size()));
        data.push_back(std::move(toks));
    }
    if (p < 0)
        throw MatrixParseError("missing header line 'p q'");
    if (static_cast<int>(data.size()) != p)
        throw MatrixParseError("expected " + std::to_string(p) + " data lines, got " +
                               std::to_string(data.size()));
    try {
        return ColourMatrix::from_tokens(data);
    } catch (const std::invalid_argument & e) {
        throw MatrixParseError(e.what());
    }
}

ColourMatrix read_matrix_file(const std::string & path) {
    std::ifstream in(path);
    if (!in)
        throw MatrixParseError("cannot open '" + path + "'");
    return read_matrix(in);
}

std::string render_matrix(const ColourMatrix & m) {
    std::string out = std::to_string(m.row_count()) + " " + std::to_string(m.col_count()) + "\n";
    for (int i = 0; i < m.row_count(); ++i) {
        for (int j = 0; j < m.col_count(); ++j) {
            if (j)
                out += " ";
            out += m.token_at(i, j);
        }
        out += "\n";
    }
    return out;
}

void write_matrix_file(const std::string & path, const ColourMatrix & m) {
    std::ofstream out(path, std::ios::binary); // keep LF endings everywhere
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << render_matrix(m);
}

std::string render_latex(const ColourMatrix & m) {
    // tokens like x12 typeset as x_{12}
    auto tex_token = [](const std::string & tok) {
        const auto digits = tok.find_first_of("0123456789");
        if (digits == 0 || digits == std::string::npos)
            return tok;
        return tok.substr(0, digits) + "_{" + tok.substr(digits) + "}";
    };
    std::string out = "\\begin{pmatrix}\n";
    for (int i = 0; i < m.row_count(); ++i) {
        for (int j = 0; j < m.col_count(); ++j) {
            if (j)
                out += " &";
            out += tex_token(m.token_at(i, j));
        }
        out += i + 1 < m.row_count() ? " \\\\\n" : "\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

} // namespace achrolab
