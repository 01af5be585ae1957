#include "gobs/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gobs {

namespace {

std::string strip_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

struct Token {
    enum Kind { Int, Name, Op, End } kind = End;
    std::string text;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& s, int line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Name, s.substr(i, j - i), col});
            i = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", static_cast<int>(s.size()) + 1});
    return out;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> toks, const RingPtr& ring, int line)
        : toks_(std::move(toks)), ring_(ring), line_(line) {}

    Polynomial parse() {
        Polynomial f = expr();
        if (cur().kind != Token::End)
            throw ParseError(line_, cur().col, "trailing input after expression");
        return f;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    const RingPtr& ring_;
    int line_;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }
    bool accept_op(const char* op) {
        if (cur().kind == Token::Op && cur().text == op) {
            advance();
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        if (accept_op("-"))
            neg = true;
        else
            accept_op("+");
        Polynomial f = term();
        if (neg) f = -f;
        for (;;) {
            if (accept_op("+"))
                f = f + term();
            else if (accept_op("-"))
                f = f - term();
            else
                return f;
        }
    }

    Polynomial term() {
        Polynomial f = factor();
        for (;;) {
            if (accept_op("*")) {
                f = f * factor();
            } else if (accept_op("/")) {
                int col = cur().col;
                Polynomial d = factor();
                if (d.is_zero() || d.nterms() != 1 || !d.terms().front().mono.is_one())
                    throw ParseError(line_, col, "division by a non-constant");
                f = f.scale(d.leading_coeff().inverse());
            } else {
                return f;
            }
        }
    }

    Polynomial factor() {
        Polynomial f = primary();
        if (accept_op("^")) {
            if (cur().kind != Token::Int)
                throw ParseError(line_, cur().col, "expected integer exponent");
            long e = std::stol(cur().text);
            advance();
            Polynomial r = Polynomial::constant(ring_, FieldElement::one(ring_->field));
            for (long i = 0; i < e; ++i) r = r * f;
            f = std::move(r);
        }
        return f;
    }

    Polynomial primary() {
        const Token& t = cur();
        if (t.kind == Token::Int) {
            advance();
            return Polynomial::constant(
                ring_, FieldElement::from_rational(mpq_class(t.text), ring_->field));
        }
        if (t.kind == Token::Name) {
            auto it = std::find(ring_->vars.begin(), ring_->vars.end(), t.text);
            if (it == ring_->vars.end())
                throw ParseError(line_, t.col, "unknown variable '" + t.text + "'");
            advance();
            std::vector<int> e(ring_->nvars(), 0);
            e[it - ring_->vars.begin()] = 1;
            return Polynomial(ring_, {{Monomial(std::move(e)), FieldElement::one(ring_->field)}});
        }
        if (t.kind == Token::Op && t.text == "(") {
            advance();
            Polynomial f = expr();
            if (!accept_op(")")) throw ParseError(line_, cur().col, "expected ')'");
            return f;
        }
        if (t.kind == Token::Op && t.text == "-") {
            advance();
            return -factor();
        }
        throw ParseError(line_, t.col, "expected a term");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line) {
    return PolyParser(tokenize(text, line), ring, line).parse();
}

SystemFile parse_system_file(const std::string& text) {
    std::optional<Field> field;
    std::vector<std::string> vars;
    std::optional<TermOrder> order;
    std::vector<std::pair<int, std::string>> poly_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool in_polys = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (in_polys) {
            poly_lines.emplace_back(lineno, s);
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, 1, "expected `key: value` before the polys block");
        std::string key = trim(s.substr(0, colon));
        std::string val = trim(s.substr(colon + 1));
        if (key == "polys") {
            if (!val.empty()) throw ParseError(lineno, 1, "polys block starts on the next line");
            in_polys = true;
        } else if (key == "field") {
            if (val == "QQ") {
                field = Field::rationals();
            } else if (val.starts_with("GF(") && val.ends_with(")")) {
                std::string p = trim(val.substr(3, val.size() - 4));
                try {
                    field = Field::prime(std::stoull(p));
                } catch (const std::exception&) {
                    throw ParseError(lineno, 1, "invalid prime field GF(" + p + ")");
                }
            } else {
                throw ParseError(lineno, 1, "field must be QQ or GF(p)");
            }
        } else if (key == "vars") {
            vars = split(val, ',');
            for (auto& v : vars) {
                if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
                    throw ParseError(lineno, 1, "invalid variable name '" + v + "'");
                if (std::count(vars.begin(), vars.end(), v) > 1)
                    throw ParseError(lineno, 1, "duplicate variable '" + v + "'");
            }
        } else if (key == "order") {
            if (val == "lex")
                order = TermOrder::lex();
            else if (val == "grlex")
                order = TermOrder::grlex();
            else if (val == "grevlex")
                order = TermOrder::grevlex();
            else if (val.starts_with("weight(") && val.ends_with(")")) {
                std::vector<long> w;
                for (auto& piece : split(val.substr(7, val.size() - 8), ',')) {
                    try {
                        w.push_back(std::stol(piece));
                    } catch (const std::exception&) {
                        throw ParseError(lineno, 1, "invalid weight entry '" + piece + "'");
                    }
                }
                order = TermOrder::weighted(std::move(w));
            } else {
                throw ParseError(lineno, 1, "unsupported order '" + val + "'");
            }
        } else {
            throw ParseError(lineno, 1, "unknown key '" + key + "'");
        }
    }
    if (!field) throw ParseError(lineno, 1, "missing `field:` header");
    if (vars.empty()) throw ParseError(lineno, 1, "missing `vars:` header");
    if (!order) throw ParseError(lineno, 1, "missing `order:` header");
    if (order->kind == OrderKind::Weighted && order->weights.size() != vars.size())
        throw ParseError(lineno, 1, "weight vector length does not match the variable count");

    SystemFile out;
    out.ring = make_ring(*field, vars, *order);
    for (auto& [ln, s] : poly_lines) out.polys.push_back(parse_polynomial(s, out.ring, ln));
    return out;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_file(buf.str());
}

ModuleMonomial parse_module_monomial(const std::string& text, const RingPtr& ring) {
    std::vector<int> exps(ring->nvars(), 0);
    std::optional<int> index;
    for (auto& piece : split(text, '*')) {
        if (piece.starts_with("e_")) {
            if (index) throw ParseError(1, 1, "multiple basis factors in '" + text + "'");
            try {
                index = std::stoi(piece.substr(2)) - 1;
            } catch (const std::exception&) {
                throw ParseError(1, 1, "invalid basis factor '" + piece + "'");
            }
            if (*index < 0) throw ParseError(1, 1, "basis indices are 1-based");
            continue;
        }
        std::string name = piece;
        int e = 1;
        if (auto caret = piece.find('^'); caret != std::string::npos) {
            name = trim(piece.substr(0, caret));
            try {
                e = std::stoi(piece.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError(1, 1, "invalid exponent in '" + piece + "'");
            }
        }
        auto it = std::find(ring->vars.begin(), ring->vars.end(), name);
        if (it == ring->vars.end()) throw ParseError(1, 1, "unknown variable '" + name + "'");
        exps[it - ring->vars.begin()] += e;
    }
    if (!index) throw ParseError(1, 1, "missing basis factor e_i in '" + text + "'");
    return {Monomial(std::move(exps)), *index};
}

std::string to_string(const Monomial& m, const RingPtr& ring) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->vars[i];
        if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
    }
    return out.empty() ? "1" : out;
}

namespace {

bool is_negative(const FieldElement& c) {
    return c.field().kind == FieldKind::Rationals && c.rational() < 0;
}

std::string term_string(const FieldElement& c, const std::string& mono, bool mono_is_one) {
    if (mono_is_one) return c.str();
    if (c.is_one()) return mono;
    return c.str() + "*" + mono;
}

}  // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto& t : f.terms()) {
        FieldElement c = t.coeff;
        if (out.empty()) {
            if (is_negative(c)) {
                out += "-";
                c = -c;
            }
        } else {
            if (is_negative(c)) {
                out += " - ";
                c = -c;
            } else {
                out += " + ";
            }
        }
        out += term_string(c, to_string(t.mono, f.ring()), t.mono.is_one());
    }
    return out;
}

std::string to_string(const ModuleMonomial& m, const RingPtr& ring) {
    std::string e = "e_" + std::to_string(m.index + 1);
    if (m.mono.is_one()) return e;
    return to_string(m.mono, ring) + "*" + e;
}

std::string to_string(const ModuleElement& u) {
    if (u.is_zero()) return "0";
    const RingPtr& ring = u.order()->ring();
    std::string out;
    for (auto& t : u.terms()) {
        FieldElement c = t.coeff;
        if (out.empty()) {
            if (is_negative(c)) {
                out += "-";
                c = -c;
            }
        } else {
            if (is_negative(c)) {
                out += " - ";
                c = -c;
            } else {
                out += " + ";
            }
        }
        out += term_string(c, to_string(t.mono, ring), false);
    }
    return out;
}

}  // namespace gobs
