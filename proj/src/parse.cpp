#include "reyn/lincomb.hpp"
#include "reyn/word.hpp"

namespace reyn {
namespace {

enum class Tok { End, LBrack, RBrack, Ident, Number, Plus, Minus, Star, Slash };

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    Tok tok = Tok::End;
    std::string value;     // ident name or digit run
    std::size_t tok_pos = 0;

    explicit Lexer(const std::string& s) : src(s) { next(); }

    void next() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                                    src[pos] == '\r'))
            ++pos;
        tok_pos = pos;
        value.clear();
        if (pos == src.size()) {
            tok = Tok::End;
            return;
        }
        char c = src[pos];
        switch (c) {
            case '[': tok = Tok::LBrack; ++pos; return;
            case ']': tok = Tok::RBrack; ++pos; return;
            case '+': tok = Tok::Plus; ++pos; return;
            case '-': tok = Tok::Minus; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '/': tok = Tok::Slash; ++pos; return;
            default: break;
        }
        if (c >= '0' && c <= '9') {
            while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') value += src[pos++];
            tok = Tok::Number;
            return;
        }
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
            while (pos < src.size() &&
                   ((src[pos] >= 'A' && src[pos] <= 'Z') || (src[pos] >= 'a' && src[pos] <= 'z') ||
                    (src[pos] >= '0' && src[pos] <= '9') || src[pos] == '_'))
                value += src[pos++];
            tok = Tok::Ident;
            return;
        }
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
};

// factor* up to a token that cannot start a factor. "1" contributes the
// identity and no atom.
BracketedWord parse_word_atoms(Lexer& lx) {
    std::vector<Atom> atoms;
    for (;;) {
        if (lx.tok == Tok::Ident) {
            if (lx.value == "sigma")
                throw ParseError(lx.tok_pos, "\"sigma\" is reserved and not a letter");
            atoms.push_back(Atom::make_letter(lx.value));
            lx.next();
        } else if (lx.tok == Tok::Number) {
            if (lx.value != "1")
                throw ParseError(lx.tok_pos, "only the identity word \"1\" may appear here");
            lx.next();
        } else if (lx.tok == Tok::LBrack) {
            std::size_t open = lx.tok_pos;
            lx.next();
            BracketedWord inner = parse_word_atoms(lx);
            if (lx.tok != Tok::RBrack)
                throw ParseError(open, "unbalanced '['");
            lx.next();
            atoms.push_back(Atom::make_bracket(std::move(inner)));
        } else {
            return BracketedWord::from_atoms(std::move(atoms));
        }
    }
}

bool starts_factor(Tok t) { return t == Tok::Ident || t == Tok::Number || t == Tok::LBrack; }

}  // namespace

BracketedWord parse_word(const std::string& text) {
    Lexer lx(text);
    BracketedWord w = parse_word_atoms(lx);
    if (lx.tok != Tok::End) {
        if (lx.tok == Tok::RBrack) throw ParseError(lx.tok_pos, "unbalanced ']'");
        throw ParseError(lx.tok_pos, "unexpected token in word");
    }
    return w;
}

LinComb parse_lincomb(const std::string& text) {
    Lexer lx(text);
    LinComb result;
    bool negative = false;
    if (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
        negative = lx.tok == Tok::Minus;
        lx.next();
    }
    for (;;) {
        Rational coeff = 1;
        BracketedWord word;
        if (lx.tok == Tok::Number) {
            // Either a coefficient ("3", "3/2", followed by '*' or the end
            // of the term) or the identity word "1" starting a bare word.
            std::string num = lx.value;
            std::size_t num_pos = lx.tok_pos;
            lx.next();
            if (lx.tok == Tok::Slash) {
                lx.next();
                if (lx.tok != Tok::Number) throw ParseError(lx.tok_pos, "expected denominator");
                Integer den(lx.value);
                if (den == 0) throw ParseError(lx.tok_pos, "zero denominator");
                coeff = Rational(Integer(num), den);
                lx.next();
                if (lx.tok == Tok::Star) {
                    lx.next();
                    if (!starts_factor(lx.tok)) throw ParseError(lx.tok_pos, "expected a word after '*'");
                    word = parse_word_atoms(lx);
                } else if (starts_factor(lx.tok)) {
                    throw ParseError(num_pos, "expected '*' after the coefficient");
                }
            } else if (lx.tok == Tok::Star) {
                coeff = Rational(Integer(num));
                lx.next();
                if (!starts_factor(lx.tok)) throw ParseError(lx.tok_pos, "expected a word after '*'");
                word = parse_word_atoms(lx);
            } else if (num == "1" && starts_factor(lx.tok)) {
                word = parse_word_atoms(lx);  // "1" was the identity atom
            } else if (lx.tok == Tok::Plus || lx.tok == Tok::Minus || lx.tok == Tok::End) {
                coeff = Rational(Integer(num));  // bare constant times the identity
            } else {
                throw ParseError(num_pos, "expected '*' after the coefficient");
            }
        } else if (starts_factor(lx.tok)) {
            word = parse_word_atoms(lx);
        } else {
            throw ParseError(lx.tok_pos, "expected a term");
        }
        if (negative) coeff = -coeff;
        result += LinComb(word, coeff);

        if (lx.tok == Tok::End) break;
        if (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            negative = lx.tok == Tok::Minus;
            lx.next();
            continue;
        }
        if (lx.tok == Tok::RBrack) throw ParseError(lx.tok_pos, "unbalanced ']'");
        throw ParseError(lx.tok_pos, "expected '+' or '-' between terms");
    }
    return result;
}

}  // namespace reyn
