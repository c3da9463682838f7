#ifndef WGB_IO_HPP
#define WGB_IO_HPP

// Text grammar for polynomials: integer or rational coefficients, `*` for
// concatenation, `^k` repetition of the preceding letter, `+`/`-`, and an
// optional trailing `*e<i>` module marker. Printing emits the same grammar
// deterministically in descending term order; parse ∘ print is the identity
// on normalized polynomials.

#include "poly.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace wgb::freering {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), col(c) {}
};

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s, int startLine = 1) : s_(s), line_(startLine) {}

    Token next() {
        skipWs();
        int l = line_, c = col_;
        if (p_ >= s_.size()) return {Tok::End, "", l, c};
        char ch = s_[p_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t q = p_;
            while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
            Token t{Tok::Number, s_.substr(p_, q - p_), l, c};
            advance(q - p_);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t q = p_;
            while (q < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[q])) || s_[q] == '_'))
                ++q;
            Token t{Tok::Ident, s_.substr(p_, q - p_), l, c};
            advance(q - p_);
            return t;
        }
        advance(1);
        switch (ch) {
            case '+': return {Tok::Plus, "+", l, c};
            case '-': return {Tok::Minus, "-", l, c};
            case '*': return {Tok::Star, "*", l, c};
            case '^': return {Tok::Caret, "^", l, c};
            case '/': return {Tok::Slash, "/", l, c};
            default: throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
        }
    }

private:
    void skipWs() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) {
            if (s_[p_] == '\n') { ++line_; col_ = 1; } else ++col_;
            ++p_;
        }
    }
    void advance(size_t n) {
        col_ += static_cast<int>(n);
        p_ += n;
    }

    const std::string& s_;
    size_t p_ = 0;
    int line_ = 1, col_ = 1;
};

inline bool isPositionMarker(const std::string& id, int* pos) {
    if (id.size() < 2 || id[0] != 'e') return false;
    for (size_t k = 1; k < id.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(id[k]))) return false;
    *pos = std::stoi(id.substr(1));
    return true;
}

}  // namespace detail

// Parses a polynomial; `startLine` offsets reported line numbers when the
// text is embedded in a larger file.
inline NcPoly parsePoly(const std::string& text, const Ring& R, int startLine = 1) {
    using namespace detail;
    Lexer lex(text, startLine);
    Token tok = lex.next();
    if (tok.kind == Tok::End) throw ParseError(tok.line, tok.col, "empty polynomial");

    std::vector<Monomial> ms;
    bool negative = false;
    if (tok.kind == Tok::Minus) { negative = true; tok = lex.next(); }
    else if (tok.kind == Tok::Plus) { tok = lex.next(); }

    while (true) {
        // one addend: [coefficient] [letters] [position marker]
        coeff::Scalar c(1);
        Word w;
        int pos = 1;
        bool sawCoeff = false, sawLetters = false, sawMarker = false;

        if (tok.kind == Tok::Number) {
            sawCoeff = true;
            coeff::Int num(tok.text);
            tok = lex.next();
            if (tok.kind == Tok::Slash) {
                tok = lex.next();
                if (tok.kind != Tok::Number) throw ParseError(tok.line, tok.col, "expected denominator");
                if (R.mode == coeff::DomainMode::Integers)
                    throw ParseError(tok.line, tok.col, "rational coefficient in integer mode");
                coeff::Int den(tok.text);
                if (den == 0) throw ParseError(tok.line, tok.col, "zero denominator");
                c = coeff::Scalar(num, den);
                tok = lex.next();
            } else {
                c = coeff::Scalar(num);
            }
            if (tok.kind == Tok::Star) tok = lex.next();
            else if (tok.kind == Tok::Ident)
                throw ParseError(tok.line, tok.col, "expected '*' between coefficient and letter");
        }

        while (tok.kind == Tok::Ident) {
            int markerPos = 0;
            if (isPositionMarker(tok.text, &markerPos)) {
                if (markerPos < 1 || markerPos > R.rank)
                    throw ParseError(tok.line, tok.col,
                                     "position e" + std::to_string(markerPos) + " out of range 1.." +
                                         std::to_string(R.rank));
                pos = markerPos;
                sawMarker = true;
                tok = lex.next();
                break;  // the module marker is the final factor of an addend
            }
            auto id = R.alph.find(tok.text);
            if (!id) throw ParseError(tok.line, tok.col, "undeclared symbol '" + tok.text + "'");
            int rep = 1;
            Token after = lex.next();
            if (after.kind == Tok::Caret) {
                Token e = lex.next();
                if (e.kind != Tok::Number) throw ParseError(e.line, e.col, "expected exponent");
                rep = std::stoi(e.text);
                if (rep < 1) throw ParseError(e.line, e.col, "exponent must be >= 1");
                after = lex.next();
            }
            for (int k = 0; k < rep; ++k) w.push_back(*id);
            sawLetters = true;
            if (after.kind == Tok::Star) { tok = lex.next(); continue; }
            tok = after;
            break;
        }

        if (!sawCoeff && !sawLetters && !sawMarker)
            throw ParseError(tok.line, tok.col, "expected a term");
        if (negative) c = -c;
        if (!c.isZero()) ms.push_back({c, Term{std::move(w), pos}});

        if (tok.kind == Tok::End) break;
        if (tok.kind == Tok::Plus) negative = false;
        else if (tok.kind == Tok::Minus) negative = true;
        else throw ParseError(tok.line, tok.col, "expected '+', '-' or end of polynomial");
        tok = lex.next();
    }
    return NcPoly::fromMonomials(std::move(ms), R);
}

inline std::string printWord(const Word& w, const Alphabet& al) {
    std::string out;
    size_t k = 0;
    while (k < w.size()) {
        size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!out.empty()) out += "*";
        out += al.name(w[k]);
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

inline std::string printPoly(const NcPoly& f, const Ring& R) {
    if (f.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : f.monomials()) {
        coeff::Scalar a = coeff::abs(m.c);
        bool neg = m.c.isNegative();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string word = printWord(m.t.w, R.alph);
        std::string piece;
        if (word.empty()) piece = a.str();
        else if (a.isOne()) piece = word;
        else piece = a.str() + "*" + word;
        if (m.t.pos != 1) piece += (piece.empty() ? "e" : "*e") + std::to_string(m.t.pos);
        out += piece;
    }
    return out;
}

inline std::string Bound::str(const Ring& R) const {
    switch (kind) {
        case Kind::Infinite: return "none";
        case Kind::Degree: return "deg<=" + std::to_string(deg);
        case Kind::Word: return "term<=" + printPoly(NcPoly::monomial(coeff::Scalar(1), term), R);
    }
    return "none";
}

}  // namespace wgb::freering

#endif  // WGB_IO_HPP
