#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reyn/rational.hpp"
#include "reyn/word.hpp"

namespace reyn {

// A finite rational linear combination of bracketed words. Terms are kept
// in canonical order (word size, then rendering) with nonzero coefficients,
// so iteration order is the printing order.
class LinComb {
  public:
    using Term = std::pair<BracketedWord, Rational>;

    LinComb() = default;  // zero
    LinComb(const BracketedWord& w, Rational c = 1);

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coeff(const BracketedWord& w) const;

    // True when every basis word is a Reynolds word.
    bool all_reynolds() const;

    // this += c * x, merging term lists.
    LinComb& add_scaled(const LinComb& x, const Rational& c);
    LinComb& operator+=(const LinComb& x);
    LinComb& operator-=(const LinComb& x);

    bool operator==(const LinComb&) const = default;

  private:
    // Trusted terms already in canonical order, unique, nonzero.
    explicit LinComb(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
    friend LinComb multiply(const LinComb& a, const LinComb& b);

    std::vector<Term> terms_;
};

LinComb add(const LinComb& a, const LinComb& b);
LinComb scale(const Rational& c, const LinComb& a);
// Bilinear extension of word concatenation.
LinComb multiply(const LinComb& a, const LinComb& b);

inline LinComb operator+(const LinComb& a, const LinComb& b) { return add(a, b); }
LinComb operator-(const LinComb& a, const LinComb& b);
LinComb operator-(const LinComb& a);
inline LinComb operator*(const LinComb& a, const LinComb& b) { return multiply(a, b); }
inline LinComb operator*(const Rational& c, const LinComb& a) { return scale(c, a); }

// Canonical text: "c1 * w1 + c2 * w2 + ...", rationals as p/q or bare
// integers, zero as "0". parse_lincomb accepts this format back, plus bare
// words ("x y"), bare constants ("3/2"), and a leading sign.
std::string to_text(const LinComb& a);
LinComb parse_lincomb(const std::string& text);

// {"terms": [{"coeff": "p/q", "word": "..."}]} in canonical term order.
std::string to_json(const LinComb& a);

}  // namespace reyn
