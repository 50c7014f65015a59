#include "lexirev/parser.hpp"

#include "lexirev/errors.hpp"

#include <cctype>
#include <optional>

namespace lexirev {

ParseError::ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message), offset_(offset), line_(line), column_(column)
{
}

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    Formula parse()
    {
        auto f = parse_iff();
        if (current_.kind != Tok::End)
            fail("unexpected '" + std::string(current_.text) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(message, current_.offset); }

    [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const
    {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, offset, line, column);
    }

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void advance()
    {
        skip_blank();
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "end of input", start};
            return;
        }
        auto starts_with = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
        auto emit = [&](Tok kind, std::size_t length) {
            current_ = {kind, text_.substr(start, length), start};
            pos_ += length;
        };

        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            auto word = text_.substr(start, end - start);
            Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
            if (kind == Tok::Ident && word.substr(0, 2) == "__")
                fail_at("identifier '" + std::string(word) + "' uses the reserved prefix \"__\"", start);
            emit(kind, end - start);
        } else if (starts_with("<->")) {
            emit(Tok::Iff, 3);
        } else if (starts_with("->")) {
            emit(Tok::Implies, 2);
        } else if (c == '!') {
            emit(Tok::Not, 1);
        } else if (c == '&') {
            emit(Tok::And, 1);
        } else if (c == '|') {
            emit(Tok::Or, 1);
        } else if (c == '(') {
            emit(Tok::LParen, 1);
        } else if (c == ')') {
            emit(Tok::RParen, 1);
        } else {
            fail_at("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

    bool accept(Tok kind)
    {
        if (current_.kind != kind)
            return false;
        advance();
        return true;
    }

    Formula parse_iff()
    {
        auto lhs = parse_implies();
        while (accept(Tok::Iff))
            lhs = make_iff(std::move(lhs), parse_implies());
        return lhs;
    }

    Formula parse_implies()
    {
        auto lhs = parse_or();
        if (accept(Tok::Implies))
            return make_implies(std::move(lhs), parse_implies());
        return lhs;
    }

    Formula parse_or()
    {
        std::vector<Formula> parts{parse_and()};
        while (accept(Tok::Or))
            parts.push_back(parse_and());
        return parts.size() == 1 ? std::move(parts.front()) : make_or(std::move(parts));
    }

    Formula parse_and()
    {
        std::vector<Formula> parts{parse_not()};
        while (accept(Tok::And))
            parts.push_back(parse_not());
        return parts.size() == 1 ? std::move(parts.front()) : make_and(std::move(parts));
    }

    Formula parse_not()
    {
        if (accept(Tok::Not))
            return make_not(parse_not());
        return parse_atom();
    }

    Formula parse_atom()
    {
        const Token tok = current_;
        switch (tok.kind) {
        case Tok::Ident:
            advance();
            return Formula::variable(std::string(tok.text));
        case Tok::True:
            advance();
            return Formula::constant(true);
        case Tok::False:
            advance();
            return Formula::constant(false);
        case Tok::LParen: {
            advance();
            auto inner = parse_iff();
            if (!accept(Tok::RParen))
                fail("expected ')'");
            return inner;
        }
        case Tok::End:
            fail("unexpected end of input");
        default:
            fail("unexpected '" + std::string(tok.text) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, {}, 0};
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

} // namespace lexirev
