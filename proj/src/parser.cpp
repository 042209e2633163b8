#include "sgd/parser.hpp"

#include <cctype>
#include <sstream>

namespace sgd {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column; // 1-based
};

std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of line" : "'" + t.text + "'";
}

class ExprParser {
public:
    ExprParser(std::string_view src, const Ring& ring, std::size_t line)
        : src_(src), ring_(ring), line_(line) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = sum();
        if (cur_.kind != Tok::end) {
            if (cur_.kind == Tok::ident || cur_.kind == Tok::number || cur_.kind == Tok::lparen) {
                fail(cur_, "implicit multiplication is not allowed; use '*'");
            }
            fail(cur_, "unexpected " + describe(cur_));
        }
        return p;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(line_, at.column, msg);
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t col = pos_ + 1;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::end, "", col};
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Tok::number, std::string(src_.substr(start, pos_ - start)), col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            cur_ = {Tok::ident, std::string(src_.substr(start, pos_ - start)), col};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': cur_ = {Tok::plus, "+", col}; return;
        case '-': cur_ = {Tok::minus, "-", col}; return;
        case '*': cur_ = {Tok::star, "*", col}; return;
        case '^': cur_ = {Tok::caret, "^", col}; return;
        case '/': cur_ = {Tok::slash, "/", col}; return;
        case '(': cur_ = {Tok::lparen, "(", col}; return;
        case ')': cur_ = {Tok::rparen, ")", col}; return;
        default: throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
        }
    }

    Polynomial sum() {
        Polynomial acc = product();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const bool minus = cur_.kind == Tok::minus;
            advance();
            Polynomial rhs = product();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = unary();
        while (cur_.kind == Tok::star) {
            advance();
            acc = acc * unary();
        }
        return acc;
    }

    Polynomial unary() {
        if (cur_.kind == Tok::minus) {
            advance();
            return -unary();
        }
        if (cur_.kind == Tok::plus) {
            advance();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (cur_.kind != Tok::caret) return base;
        advance();
        if (cur_.kind == Tok::minus) fail(cur_, "negative exponent");
        if (cur_.kind != Tok::number) fail(cur_, "expected a nonnegative integer exponent, got " + describe(cur_));
        Integer k(cur_.text);
        if (!k.fits_uint_p() || k > 100000) fail(cur_, "exponent too large");
        advance();
        if (cur_.kind == Tok::caret) fail(cur_, "chained exponents need parentheses");
        return base.pow(static_cast<unsigned>(k.get_ui()));
    }

    Polynomial primary() {
        const Token t = cur_;
        switch (t.kind) {
        case Tok::number: {
            advance();
            Rational value{Integer(t.text)};
            if (cur_.kind == Tok::slash) {
                advance();
                if (cur_.kind != Tok::number) fail(cur_, "expected a denominator after '/'");
                Integer den(cur_.text);
                if (den == 0) fail(cur_, "division by zero");
                value = Rational(Integer(t.text), den);
                value.canonicalize();
                advance();
            }
            return Polynomial::constant(ring_, value);
        }
        case Tok::ident: {
            long idx = ring_->index_of(t.text);
            if (idx < 0) fail(t, "undeclared variable '" + t.text + "'");
            advance();
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        case Tok::lparen: {
            advance();
            Polynomial inner = sum();
            if (cur_.kind != Tok::rparen) fail(cur_, "expected ')', got " + describe(cur_));
            advance();
            return inner;
        }
        case Tok::slash: fail(t, "division is only allowed inside rational literals");
        default: fail(t, "expected an expression, got " + describe(t));
        }
    }

    std::string_view src_;
    const Ring& ring_;
    std::size_t line_;
    std::size_t pos_ = 0;
    Token cur_{Tok::end, "", 1};
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

Polynomial parse_polynomial(std::string_view expr, const Ring& ring, std::size_t line) {
    return ExprParser(expr, ring, line).parse();
}

ParsedSystem parse_system(std::string_view text) {
    ParsedSystem out;
    std::vector<std::pair<std::size_t, std::string>> poly_lines;
    bool have_ring = false;
    bool in_polys = false;
    std::size_t ring_line = 0;
    std::size_t last_line = 1; // last line with content, for end-of-file errors

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(start, nl - start);
        start = nl + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        // keep original columns for expressions; only strip trailing space / CR
        std::string line = trim(raw);
        if (line.empty()) {
            if (nl == text.size()) break;
            continue;
        }
        last_line = line_no;
        if (in_polys) {
            poly_lines.emplace_back(line_no, std::string(raw));
        } else {
            auto colon = line.find(':');
            if (colon == std::string::npos) {
                throw ParseError(line_no, 1, "expected 'key: value' or 'polys:' before polynomials");
            }
            std::string key = trim(std::string_view(line).substr(0, colon));
            std::string value = trim(std::string_view(line).substr(colon + 1));
            if (key == "polys") {
                if (!value.empty()) throw ParseError(line_no, colon + 2, "put polynomials on the lines after 'polys:'");
                if (!have_ring) throw ParseError(line_no, 1, "missing 'ring:' line before 'polys:'");
                in_polys = true;
            } else if (key == "ring") {
                if (have_ring) throw ParseError(line_no, 1, "duplicate 'ring:' line");
                have_ring = true;
                ring_line = line_no;
                std::stringstream ss(value);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    name = trim(name);
                    if (!is_identifier(name)) throw ParseError(line_no, 1, "invalid variable name '" + name + "'");
                    out.file.variables.push_back(name);
                }
            } else if (key.empty()) {
                throw ParseError(line_no, 1, "empty option name");
            } else {
                out.file.options[key] = value;
            }
        }
        if (nl == text.size()) break;
    }

    if (!have_ring) throw ParseError(last_line, 1, "missing 'ring:' line");
    if (out.file.variables.empty()) throw ParseError(ring_line, 1, "ring has no variables");
    if (!in_polys) throw ParseError(last_line, 1, "missing 'polys:' section");
    if (poly_lines.empty()) throw ParseError(last_line, 1, "no polynomials given");
    try {
        out.ring = make_ring(out.file.variables);
    } catch (const std::invalid_argument& e) {
        throw ParseError(ring_line, 1, e.what());
    }
    for (const auto& [ln, src] : poly_lines) {
        out.file.polynomials.push_back(trim(src));
        out.polys.push_back(parse_polynomial(src, out.ring, ln));
    }
    return out;
}

} // namespace sgd
