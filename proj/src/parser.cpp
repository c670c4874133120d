#include "lextrop/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lextrop {

namespace {

enum class TokKind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](TokKind k, std::string s) { out.push_back({k, std::move(s), line, col}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        std::size_t start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({TokKind::number, text.substr(i, j - i), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({TokKind::ident, text.substr(i, j - i), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::plus; break;
            case '-': k = TokKind::minus; break;
            case '*': k = TokKind::star; break;
            case '^': k = TokKind::caret; break;
            case '/': k = TokKind::slash; break;
            case '(': k = TokKind::lparen; break;
            case ')': k = TokKind::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        push(k, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back({TokKind::end, "", line, col});
    return out;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> tokens, const FieldTower& tower,
               const std::vector<std::string>& vars)
        : tokens_(std::move(tokens)), tower_(tower), vars_(vars) {}

    KPolynomial parse() {
        KPolynomial p = parse_sum();
        expect(TokKind::end, "end of input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, peek().line, peek().column);
    }
    void expect(TokKind kind, const std::string& what) {
        if (peek().kind != kind)
            fail("expected " + what + (peek().kind == TokKind::end
                                           ? " but input ended"
                                           : " before '" + peek().text + "'"));
        ++pos_;
    }

    KPolynomial parse_sum() {
        bool negate = false;
        if (peek().kind == TokKind::plus || peek().kind == TokKind::minus)
            negate = advance().kind == TokKind::minus;
        KPolynomial acc = parse_term();
        if (negate)
            acc = -acc;
        while (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
            bool minus = advance().kind == TokKind::minus;
            KPolynomial term = parse_term();
            acc = minus ? acc - term : acc + term;
        }
        return acc;
    }

    KPolynomial parse_term() {
        KPolynomial acc = parse_factor();
        while (peek().kind == TokKind::star) {
            advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Rational parse_rational_in_parens() {
        expect(TokKind::lparen, "'('");
        bool neg = false;
        if (peek().kind == TokKind::minus) {
            neg = true;
            advance();
        }
        if (peek().kind != TokKind::number)
            fail("expected a number in exponent");
        std::string num = advance().text;
        std::string den = "1";
        if (peek().kind == TokKind::slash) {
            advance();
            if (peek().kind != TokKind::number)
                fail("expected a denominator");
            den = advance().text;
        }
        expect(TokKind::rparen, "')'");
        Rational q = rational_from_string(num + "/" + den);
        return neg ? -q : q;
    }

    // exponent := signed integer | '(' signed rational ')'
    Rational parse_exponent() {
        if (peek().kind == TokKind::lparen)
            return parse_rational_in_parens();
        bool neg = false;
        if (peek().kind == TokKind::minus) {
            neg = true;
            advance();
        }
        if (peek().kind != TokKind::number)
            fail("malformed exponent");
        Rational q = rational_from_string(advance().text);
        return neg ? -q : q;
    }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    int uniformizer_index(const std::string& name) const {
        const auto& names = tower_.uniformizer_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    KPolynomial constant_poly(const Rational& c) const {
        return KPolynomial::constant(tower_, vars_, FieldElement::constant(tower_, c));
    }

    KPolynomial parse_factor() {
        const Token& tok = peek();
        if (tok.kind == TokKind::number) {
            advance();
            Rational num = rational_from_string(tok.text);
            if (peek().kind == TokKind::slash) {
                advance();
                if (peek().kind != TokKind::number)
                    fail("expected a denominator");
                Rational den = rational_from_string(advance().text);
                if (den == 0)
                    fail("zero denominator");
                num /= den;
            }
            return apply_power(constant_poly(num));
        }
        if (tok.kind == TokKind::ident) {
            advance();
            int vi = var_index(tok.text);
            if (vi >= 0) {
                std::vector<long> d(vars_.size(), 0);
                d[static_cast<std::size_t>(vi)] = 1;
                KPolynomial x =
                    KPolynomial::monomial(tower_, vars_, FieldElement::one(tower_), d);
                if (peek().kind == TokKind::caret) {
                    advance();
                    Rational e = parse_exponent();
                    if (!is_integer(e))
                        throw ParseError("torus variable exponent must be an integer", tok.line,
                                         tok.column);
                    return x.pow(to_long(e));
                }
                return x;
            }
            int ui = uniformizer_index(tok.text);
            if (ui >= 0) {
                Rational e(1);
                if (peek().kind == TokKind::caret) {
                    advance();
                    e = parse_exponent();
                }
                std::vector<Rational> exps(static_cast<std::size_t>(tower_.height()),
                                           Rational(0));
                exps[static_cast<std::size_t>(ui)] = e;
                return KPolynomial::constant(tower_, vars_,
                                             FieldElement::monomial(tower_, 1, exps));
            }
            throw ParseError("unknown symbol '" + tok.text + "'", tok.line, tok.column);
        }
        if (tok.kind == TokKind::lparen) {
            advance();
            KPolynomial inner = parse_sum();
            expect(TokKind::rparen, "')'");
            return apply_power(inner);
        }
        fail(tok.kind == TokKind::end ? "unexpected end of input"
                                      : "unexpected token '" + tok.text + "'");
    }

    KPolynomial apply_power(KPolynomial base) {
        if (peek().kind != TokKind::caret)
            return base;
        const Token& caret = peek();
        advance();
        Rational e = parse_exponent();
        if (!is_integer(e))
            throw ParseError("fractional exponents are only allowed on uniformizers", caret.line,
                             caret.column);
        long k = to_long(e);
        if (k < 0 && base.term_count() != 1)
            throw ParseError("negative power of a non-monomial expression", caret.line,
                             caret.column);
        return base.pow(k);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    FieldTower tower_;
    std::vector<std::string> vars_;
};

const std::vector<std::string>& default_variable_names() {
    static const std::vector<std::string> names = {"x",  "y",  "z",  "x1", "x2", "x3",
                                                   "x4", "x5", "x6", "x7", "x8", "x9"};
    return names;
}

}  // namespace

FieldTower parse_tower(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, 1, i + 1); };
    BaseField base = BaseField::rationals();
    if (text.rfind("QQ", 0) == 0) {
        i = 2;
    } else if (text.rfind("GF(", 0) == 0) {
        std::size_t close = text.find(')', 3);
        if (close == std::string::npos)
            fail("unterminated GF(p)");
        std::string digits = text.substr(3, close - 3);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("malformed prime in GF(p)");
        base = BaseField::prime(std::stol(digits));
        i = close + 1;
    } else {
        fail("tower must start with QQ or GF(p)");
    }
    std::vector<std::string> names;
    while (i < text.size()) {
        if (text.compare(i, 2, "((") != 0)
            fail("expected '((name))'");
        std::size_t close = text.find("))", i + 2);
        if (close == std::string::npos)
            fail("unterminated uniformizer group");
        std::string name = text.substr(i + 2, close - i - 2);
        if (name.empty())
            fail("empty uniformizer name");
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                fail("malformed uniformizer name '" + name + "'");
        names.push_back(std::move(name));
        i = close + 2;
    }
    return FieldTower(base, std::move(names));
}

std::vector<std::string> infer_variables(const std::string& text, const FieldTower& tower) {
    std::set<std::string> found;
    for (const auto& tok : tokenize(text)) {
        if (tok.kind != TokKind::ident)
            continue;
        bool is_uniformizer = false;
        for (const auto& u : tower.uniformizer_names())
            is_uniformizer = is_uniformizer || u == tok.text;
        if (is_uniformizer)
            continue;
        const auto& defaults = default_variable_names();
        if (std::find(defaults.begin(), defaults.end(), tok.text) == defaults.end())
            throw ParseError("unknown symbol '" + tok.text + "' (declare torus variables)",
                             tok.line, tok.column);
        found.insert(tok.text);
    }
    std::vector<std::string> out;
    for (const auto& name : default_variable_names())
        if (found.count(name))
            out.push_back(name);
    if (out.empty())
        out.push_back("x");  // constants still live in some torus
    return out;
}

KPolynomial parse_polynomial(const std::string& text, const FieldTower& tower,
                             const std::vector<std::string>& vars) {
    return PolyParser(tokenize(text), tower, vars).parse();
}

WeightMatrix parse_weight(const std::string& text, int m, int n) {
    std::vector<LexValue> entries;
    std::size_t start = 0;
    std::vector<std::string> groups;
    while (true) {
        std::size_t semi = text.find(';', start);
        groups.push_back(text.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    if (static_cast<int>(groups.size()) != m)
        throw ParseError("weight needs " + std::to_string(m) + " ';'-separated vectors, got " +
                             std::to_string(groups.size()),
                         1, 1);
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    for (const auto& group : groups) {
        std::vector<Rational> coords;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = group.find(',', pos);
            std::string piece =
                trim(group.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (piece.empty())
                throw ParseError("empty weight coordinate", 1, 1);
            try {
                coords.push_back(rational_from_string(piece));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), 1, 1);
            }
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        if (static_cast<int>(coords.size()) != n)
            throw ParseError("weight vectors need " + std::to_string(n) + " coordinates", 1, 1);
        entries.push_back(LexValue(std::move(coords)));
    }
    return WeightMatrix(std::move(entries));
}

}  // namespace lextrop
