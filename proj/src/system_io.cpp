#include "sgb/system_io.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace sgb {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
    Kind kind;
    std::string text;
    int column;  // 1-based
};

class Lexer {
public:
    Lexer(std::string_view src, int line) : src_(src), line_(line) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message, int column) const {
        throw ParseError(line_, column, message);
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size()) {
            current_ = Token{Token::Kind::end, "", col};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            current_ = Token{Token::Kind::number, std::string(src_.substr(start, pos_ - start)), col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            current_ = Token{Token::Kind::ident, std::string(src_.substr(start, pos_ - start)), col};
            return;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::plus; break;
            case '-': kind = Token::Kind::minus; break;
            case '*': kind = Token::Kind::star; break;
            case '^': kind = Token::Kind::caret; break;
            case '/': kind = Token::Kind::slash; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            default:
                throw ParseError(line_, col, std::string("unknown token '") + c + "'");
        }
        ++pos_;
        current_ = Token{kind, std::string(1, c), col};
    }

    std::string_view src_;
    int line_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::end, "", 1};
};

class PolyParser {
public:
    PolyParser(std::string_view src, int line, const MonomialOrder& mo,
               std::vector<std::string>& vars, bool allow_new_vars)
        : lex_(src, line), mo_(mo), vars_(vars), allow_new_vars_(allow_new_vars) {
        for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = i;
    }

    Polynomial parse() {
        Polynomial p = expression();
        if (lex_.peek().kind != Token::Kind::end) {
            lex_.fail("unexpected token '" + lex_.peek().text + "'", lex_.peek().column);
        }
        return p;
    }

private:
    // expression := term (('+'|'-') term)*
    Polynomial expression() {
        Polynomial acc = term();
        while (true) {
            auto kind = lex_.peek().kind;
            if (kind == Token::Kind::plus) {
                lex_.take();
                acc = poly_add(mo_, acc, term());
            } else if (kind == Token::Kind::minus) {
                lex_.take();
                acc = poly_sub(mo_, acc, term());
            } else {
                return acc;
            }
        }
    }

    // term := factor ('*' factor)*
    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.take();
            acc = poly_mul(mo_, acc, factor());
        }
        return acc;
    }

    // factor := '-' factor | primary
    Polynomial factor() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            return poly_neg(factor());
        }
        return primary();
    }

    // primary := (number ('/' number)? | ident | '(' expression ')') ('^' number)?
    Polynomial primary() {
        Token t = lex_.peek();
        Polynomial base;
        switch (t.kind) {
            case Token::Kind::number: {
                lex_.take();
                Rational c = Rational::from_string(t.text);
                if (lex_.peek().kind == Token::Kind::slash) {
                    lex_.take();
                    Token den = expect(Token::Kind::number, "denominator");
                    Rational d = Rational::from_string(den.text);
                    if (d.is_zero()) lex_.fail("zero denominator", den.column);
                    c = c / d;
                }
                base = Polynomial::constant(c);
                break;
            }
            case Token::Kind::ident: {
                lex_.take();
                base = Polynomial::from_monomials(
                    mo_, {Monomial{PowerProduct::variable(variable_index(t)), Rational(1)}});
                break;
            }
            case Token::Kind::lparen: {
                lex_.take();
                base = expression();
                if (lex_.peek().kind != Token::Kind::rparen) {
                    lex_.fail("expected ')'", lex_.peek().column);
                }
                lex_.take();
                break;
            }
            case Token::Kind::end:
                lex_.fail("unexpected end of expression", t.column);
            default:
                lex_.fail("unexpected token '" + t.text + "'", t.column);
        }
        if (lex_.peek().kind == Token::Kind::caret) {
            lex_.take();
            if (lex_.peek().kind == Token::Kind::minus) {
                lex_.fail("malformed exponent: negative", lex_.peek().column);
            }
            Token e = expect(Token::Kind::number, "exponent");
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::exception&) {
                lex_.fail("malformed exponent", e.column);
            }
            Polynomial power = Polynomial::constant(Rational(1));
            for (unsigned long i = 0; i < exp; ++i) power = poly_mul(mo_, power, base);
            return power;
        }
        return base;
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (lex_.peek().kind != kind) {
            lex_.fail("expected " + what, lex_.peek().column);
        }
        return lex_.take();
    }

    std::uint32_t variable_index(const Token& t) {
        auto it = var_index_.find(t.text);
        if (it != var_index_.end()) return static_cast<std::uint32_t>(it->second);
        if (!allow_new_vars_) lex_.fail("undeclared variable '" + t.text + "'", t.column);
        var_index_[t.text] = vars_.size();
        vars_.push_back(t.text);
        return static_cast<std::uint32_t>(vars_.size() - 1);
    }

    Lexer lex_;
    const MonomialOrder& mo_;
    std::vector<std::string>& vars_;
    bool allow_new_vars_;
    std::map<std::string, std::size_t> var_index_;
};

std::string strip_comment(std::string_view line) {
    auto hash = line.find('#');
    std::string s(hash == std::string_view::npos ? line : line.substr(0, hash));
    return s;
}

bool is_blank(std::string_view s) {
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

SystemFile parse_system(std::string_view text, const MonomialOrder& mo) {
    SystemFile out;
    bool saw_header = false;
    bool saw_poly = false;

    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++lineno;
        std::string line = strip_comment(raw);
        if (!is_blank(line)) {
            auto colon = line.find(':');
            std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
            auto trim = [](std::string s) {
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
                return s;
            };
            if (trim(head) == "vars") {
                if (saw_header || saw_poly) {
                    throw ParseError(lineno, 1, "vars header must be the first statement");
                }
                saw_header = true;
                std::string rest = line.substr(colon + 1);
                std::size_t start = 0;
                while (start <= rest.size()) {
                    auto comma = rest.find(',', start);
                    std::string name =
                        trim(rest.substr(start, comma == std::string::npos ? rest.size() - start
                                                                           : comma - start));
                    if (name.empty()) {
                        if (comma == std::string::npos && start >= rest.size()) break;
                        throw ParseError(lineno, static_cast<int>(start) + 1, "empty variable name");
                    }
                    for (char c : name) {
                        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                            throw ParseError(lineno, static_cast<int>(start) + 1,
                                             "invalid variable name '" + name + "'");
                        }
                    }
                    for (const auto& v : out.variables) {
                        if (v == name) {
                            throw ParseError(lineno, static_cast<int>(start) + 1,
                                             "duplicate variable '" + name + "'");
                        }
                    }
                    out.variables.push_back(name);
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            } else {
                saw_poly = true;
                PolyParser parser(line, lineno, mo, out.variables, /*allow_new_vars=*/!saw_header);
                out.polynomials.push_back(parser.parse());
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

Polynomial parse_poly(std::string_view text, std::span<const std::string> vars,
                      const MonomialOrder& mo) {
    std::vector<std::string> names(vars.begin(), vars.end());
    PolyParser parser(text, 1, mo, names, /*allow_new_vars=*/false);
    return parser.parse();
}

std::string format_poly(const Polynomial& p, std::span<const std::string> vars) {
    if (p.is_zero()) return "0";
    auto pp_str = [&](const PowerProduct& pp) {
        std::string out;
        for (const auto& [var, exp] : pp.factors()) {
            if (!out.empty()) out += "*";
            out += var < vars.size() ? vars[var] : "x" + std::to_string(var);
            if (exp != 1) out += "^" + std::to_string(exp);
        }
        return out;
    };
    std::string out;
    bool first = true;
    for (const auto& m : p.monomials()) {
        Rational c = m.coeff;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (m.pp.is_one()) {
            out += c.str();
        } else if (c.is_one()) {
            out += pp_str(m.pp);
        } else {
            out += c.str() + "*" + pp_str(m.pp);
        }
        first = false;
    }
    return out;
}

std::vector<std::string> default_var_names(unsigned count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (unsigned i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace sgb
