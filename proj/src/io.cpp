#include "bsym/io.hpp"

#include <fstream>
#include <sstream>

namespace bsym {

namespace {

// Whitespace-separated token scanner that tracks 1-based line/column of the
// token it last produced, for parse diagnostics.
class Scanner {
  public:
    explicit Scanner(const std::string& s) : s_(s) {}

    bool next(std::string& tok) {
        while (pos_ < s_.size() && is_space(s_[pos_])) advance();
        if (pos_ >= s_.size()) return false;
        tok_line_ = line_;
        tok_col_ = col_;
        tok.clear();
        while (pos_ < s_.size() && !is_space(s_[pos_])) {
            tok.push_back(s_[pos_]);
            advance();
        }
        return true;
    }

    std::string expect(const char* what) {
        std::string tok;
        if (!next(tok)) throw ParseError(std::string("expected ") + what + ", got end of input",
                                         line_, col_);
        return tok;
    }

    long long expect_int(const char* what) {
        std::string tok = expect(what);
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", tok_line_,
                             tok_col_);
        }
    }

    void expect_end() {
        std::string tok;
        if (next(tok)) throw ParseError("unexpected trailing token '" + tok + "'", tok_line_, tok_col_);
    }

    int tok_line() const { return tok_line_; }
    int tok_col() const { return tok_col_; }

  private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int tok_line_ = 1, tok_col_ = 1;
};

FqMatrix parse_matrix_from(Scanner& sc) {
    long long p = sc.expect_int("prime p");
    long long e = sc.expect_int("exponent e");
    long long rows = sc.expect_int("row count");
    long long cols = sc.expect_int("column count");
    if (p < 2 || e < 1) throw ParseError("bad field parameters", sc.tok_line(), sc.tok_col());
    if (rows < 0 || cols < 0) throw ParseError("bad matrix shape", sc.tok_line(), sc.tok_col());
    const Field* f;
    try {
        f = &Field::get((int)p, (int)e);
    } catch (const DomainError& ex) {
        throw ParseError(ex.what(), sc.tok_line(), sc.tok_col());
    }
    FqMatrix m(*f, (int)rows, (int)cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long v = sc.expect_int("matrix entry");
            if (v < 0 || v >= f->q())
                throw ParseError("entry out of field range", sc.tok_line(), sc.tok_col());
            m.set(i, j, (int)v);
        }
    return m;
}

}  // namespace

std::string format_matrix(const FqMatrix& m) {
    std::ostringstream os;
    os << m.field().p() << ' ' << m.field().e() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

FqMatrix parse_matrix(const std::string& text) {
    Scanner sc(text);
    FqMatrix m = parse_matrix_from(sc);
    sc.expect_end();
    return m;
}

std::string format_code(const LinearCode& c) { return "generator\n" + format_matrix(c.generator()); }

LinearCode parse_code(const std::string& text) {
    Scanner sc(text);
    std::string kind = sc.expect("'generator' or 'parity'");
    if (kind != "generator" && kind != "parity")
        throw ParseError("expected 'generator' or 'parity', got '" + kind + "'", sc.tok_line(),
                         sc.tok_col());
    FqMatrix m = parse_matrix_from(sc);
    sc.expect_end();
    try {
        return kind == "generator" ? LinearCode::from_generator(m) : LinearCode::from_parity(m);
    } catch (const DomainError& ex) {
        throw ParseError(ex.what(), 1, 1);
    }
}

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

LinearCode load_code_file(const std::string& path) { return parse_code(slurp(path)); }

FqMatrix load_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

}  // namespace bsym
