#include "hypermon/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "hypermon/error.hpp"

namespace hypermon {

namespace {

enum class Tok {
    ident,
    kw_forall,
    kw_exists,
    kw_true,
    kw_false,
    op_not,
    op_or,
    op_and,
    op_implies,
    op_iff,
    op_xor,
    op_next,
    op_globally,
    op_finally,
    op_until,
    op_weak_until,
    op_release,
    lparen,
    rparen,
    dot,
    at,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

Tok keyword(const std::string& word) {
    if (word == "forall") return Tok::kw_forall;
    if (word == "exists") return Tok::kw_exists;
    if (word == "true") return Tok::kw_true;
    if (word == "false") return Tok::kw_false;
    if (word == "X") return Tok::op_next;
    if (word == "G") return Tok::op_globally;
    if (word == "F") return Tok::op_finally;
    if (word == "U") return Tok::op_until;
    if (word == "W") return Tok::op_weak_until;
    if (word == "R") return Tok::op_release;
    return Tok::ident;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t col = column;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            std::string word(text.substr(i, j - i));
            out.push_back({keyword(word), word, l, col});
            advance(j - i);
            continue;
        }
        auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
        struct Sym {
            std::string_view text;
            Tok kind;
        };
        static constexpr Sym symbols[] = {
            {"<->", Tok::op_iff}, {"->", Tok::op_implies}, {"!", Tok::op_not}, {"|", Tok::op_or},
            {"&", Tok::op_and},   {"^", Tok::op_xor},      {"(", Tok::lparen}, {")", Tok::rparen},
            {".", Tok::dot},      {"@", Tok::at},
        };
        bool matched = false;
        for (const auto& s : symbols) {
            if (starts(s.text)) {
                out.push_back({s.kind, std::string(s.text), l, col});
                advance(s.text.size());
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw ParseError(std::string("unexpected character '") + c + "'", l, col);
        }
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    QuantifiedFormula formula() {
        std::vector<Binder> prefix;
        while (peek().kind == Tok::kw_forall || peek().kind == Tok::kw_exists) {
            const Quantifier q = take().kind == Tok::kw_forall ? Quantifier::forall : Quantifier::exists;
            const Token& v = expect(Tok::ident, "trace variable");
            expect(Tok::dot, "'.'");
            prefix.push_back({q, TraceVariable{v.text}});
        }
        Formula b = body();
        expect(Tok::end, "end of input");
        return QuantifiedFormula(std::move(prefix), std::move(b));
    }

    Formula body_only() {
        Formula b = body();
        expect(Tok::end, "end of input");
        return b;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            fail(std::string("expected ") + what);
        }
        return take();
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(message + ", found " + found, t.line, t.column);
    }

    Formula body() { return left_assoc(Tok::op_xor, Op::lxor, [this] { return iff_level(); }); }
    Formula iff_level() { return left_assoc(Tok::op_iff, Op::iff, [this] { return impl_level(); }); }

    Formula impl_level() {
        Formula lhs = or_level();
        if (peek().kind == Tok::op_implies) {
            take();
            return implies(std::move(lhs), impl_level());
        }
        return lhs;
    }

    Formula or_level() { return left_assoc(Tok::op_or, Op::lor, [this] { return and_level(); }); }
    Formula and_level() { return left_assoc(Tok::op_and, Op::land, [this] { return temporal_level(); }); }

    template <class Next>
    Formula left_assoc(Tok tok, Op op, Next next) {
        Formula lhs = next();
        while (peek().kind == tok) {
            take();
            lhs = Formula::make(op, {std::move(lhs), next()});
        }
        return lhs;
    }

    // U, W and R bind looser than the unary operators and associate to the right.
    Formula temporal_level() {
        Formula lhs = unary();
        switch (peek().kind) {
        case Tok::op_until:
            take();
            return until(std::move(lhs), temporal_level());
        case Tok::op_weak_until:
            take();
            return weak_until(std::move(lhs), temporal_level());
        case Tok::op_release:
            take();
            return release(std::move(lhs), temporal_level());
        default:
            return lhs;
        }
    }

    Formula unary() {
        switch (peek().kind) {
        case Tok::op_not:
            take();
            return lnot(unary());
        case Tok::op_next:
            take();
            return next(unary());
        case Tok::op_globally:
            take();
            return globally(unary());
        case Tok::op_finally:
            take();
            return finally(unary());
        default:
            return atom_or_paren();
        }
    }

    Formula atom_or_paren() {
        switch (peek().kind) {
        case Tok::kw_true:
            take();
            return tt();
        case Tok::kw_false:
            take();
            return ff();
        case Tok::lparen: {
            take();
            Formula b = body();
            expect(Tok::rparen, "')'");
            return b;
        }
        case Tok::ident: {
            const std::string prop = take().text;
            expect(Tok::at, "'@' after proposition");
            const std::string var = expect(Tok::ident, "trace variable").text;
            return atom(prop, var);
        }
        default:
            fail("expected atom, constant or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

QuantifiedFormula parse_formula(std::string_view text) { return Parser(tokenize(text)).formula(); }

Formula parse_body(std::string_view text) { return Parser(tokenize(text)).body_only(); }

}  // namespace hypermon
