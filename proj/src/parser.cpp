#include "bezout/parser.hpp"

#include "bezout/error.hpp"

#include <cctype>

namespace bezout {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
};

std::string describe(const Token& t)
{
    if (t.kind == Tok::End) {
        return "end of input";
    }
    return "'" + std::string(t.text) + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take()
    {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance()
    {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) {
            ++i_;
        }
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        char c = src_[i_];
        auto is = [&](auto pred) { return i_ < src_.size() && pred(static_cast<unsigned char>(src_[i_])); };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (is(::isdigit)) {
                ++i_;
            }
            cur_ = {Tok::Number, start, src_.substr(start, i_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (is([](int ch) { return std::isalnum(ch) || ch == '_'; })) {
                ++i_;
            }
            cur_ = {Tok::Ident, start, src_.substr(start, i_ - start)};
            return;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
            throw SyntaxError(start, "number, variable or '('", "'" + std::string(1, c) + "'");
        }
        ++i_;
        cur_ = {kind, start, src_.substr(start, 1)};
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token cur_{Tok::End, 0, {}};
};

class Parser {
public:
    Parser(std::string_view src, const AmbientRing& ambient) : lex_(src), ambient_(ambient) {}

    Polynomial run()
    {
        Polynomial p = expr();
        if (lex_.peek().kind != Tok::End) {
            throw SyntaxError(lex_.peek().pos, "operator or end of input", describe(lex_.peek()));
        }
        return p;
    }

private:
    Polynomial expr()
    {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            negate = lex_.take().kind == Tok::Minus;
        }
        Polynomial acc = term();
        if (negate) {
            acc = -acc;
        }
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            if (minus) {
                acc -= term();
            } else {
                acc += term();
            }
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc *= factor();
            } else if ((k == Tok::LParen || k == Tok::Ident) && juxtaposable_) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial b = base();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            const Token& t = lex_.peek();
            if (t.kind != Tok::Number) {
                throw SyntaxError(t.pos, "unsigned integer exponent", describe(t));
            }
            Integer e(std::string(t.text));
            if (e > Monomial::max_exponent) {
                raise(ErrorCode::ExponentOverflow, "exponent " + std::string(t.text) + " exceeds 2^31 - 1");
            }
            lex_.take();
            b = pow(b, e.get_ui());
            // x^2 y is not juxtaposable under the grammar: the factor ends in a number
            juxtaposable_ = false;
        }
        return b;
    }

    Polynomial base()
    {
        Token t = lex_.take();
        switch (t.kind) {
        case Tok::Number: {
            Integer num(std::string(t.text));
            Integer den(1);
            if (lex_.peek().kind == Tok::Slash) {
                lex_.take();
                Token d = lex_.take();
                if (d.kind != Tok::Number) {
                    throw SyntaxError(d.pos, "unsigned integer denominator", describe(d));
                }
                den = Integer(std::string(d.text));
                if (den == 0) {
                    throw SyntaxError(d.pos, "non-zero denominator", describe(d));
                }
            }
            juxtaposable_ = false;
            return Polynomial(ambient_, make_rational(num, den));
        }
        case Tok::Ident: {
            auto idx = ambient_.index_of(t.text);
            if (!idx) {
                raise(ErrorCode::UnknownVariable, "at position " + std::to_string(t.pos) + ": '" +
                                                      std::string(t.text) + "' is not in " + to_string(ambient_));
            }
            juxtaposable_ = true;
            return Polynomial::variable(ambient_, *idx);
        }
        case Tok::LParen: {
            Polynomial inner = expr();
            Token close = lex_.take();
            if (close.kind != Tok::RParen) {
                throw SyntaxError(close.pos, "')'", describe(close));
            }
            juxtaposable_ = true;
            return inner;
        }
        default:
            throw SyntaxError(t.pos, "number, variable or '('", describe(t));
        }
    }

    Lexer lex_;
    const AmbientRing& ambient_;
    bool juxtaposable_ = false;
};

} // namespace

Polynomial parse(std::string_view source, const AmbientRing& ambient)
{
    return Parser(source, ambient).run();
}

} // namespace bezout
