#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reyn {

// A generator symbol. Names follow the identifier grammar
// [A-Za-z][A-Za-z0-9_]* and "sigma" is reserved for forest decorations.
struct Letter {
    std::string name;

    explicit Letter(std::string n);
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

bool is_valid_letter_name(const std::string& name);

struct Atom;

// An element of the free operated monoid: a finite sequence of atoms.
// The empty sequence is the identity word. Immutable; copies share storage.
class BracketedWord {
  public:
    BracketedWord();  // the identity word

    static BracketedWord letter(const std::string& name);
    static BracketedWord bracket(const BracketedWord& inner);
    static BracketedWord concat(const BracketedWord& a, const BracketedWord& b);
    static BracketedWord from_atoms(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const;
    bool is_identity() const;

    // Canonical rendering; identity is "1", an empty bracket is "[]",
    // atoms are space separated.
    const std::string& text() const;

    // Letters plus bracket pairs, counted at every nesting level.
    int size() const;

    // Maximal bracket nesting; 0 for bracket-free words.
    int depth() const;

    // True iff no bracket anywhere in the word encloses a product of two
    // or more atoms that are all brackets.
    bool is_reynolds() const;

    std::size_t hash() const;

    bool operator==(const BracketedWord& rhs) const;
    // Total order used everywhere for canonical term order:
    // by size, then lexicographically on the canonical rendering.
    std::strong_ordering operator<=>(const BracketedWord& rhs) const;

  private:
    struct Rep;
    explicit BracketedWord(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

// One factor of a word's standard decomposition: either a letter or a
// bracketed subword. Exactly one of the two fields is active.
struct Atom {
    std::string letter;                  // nonempty iff letter atom
    std::optional<BracketedWord> inner;  // engaged iff bracket atom

    bool is_letter() const { return !inner.has_value(); }
    bool is_bracket() const { return inner.has_value(); }

    static Atom make_letter(std::string name);
    static Atom make_bracket(BracketedWord inner);
};

inline bool BracketedWord::is_identity() const { return atoms().empty(); }

struct WordHash {
    std::size_t operator()(const BracketedWord& w) const { return w.hash(); }
};

enum class WordClass {
    NotReynolds,
    RPrime,        // Reynolds, and not a product of >= 2 bracket atoms
    RDoublePrime,  // Reynolds product of >= 2 bracket atoms
};

WordClass classify(const BracketedWord& w);

const char* to_string(WordClass c);

// The atom sequence of a nonidentity word. Errors on the identity word,
// which has no standard decomposition.
const std::vector<Atom>& standard_decomposition(const BracketedWord& w);

// One maximal run of nested brackets: [core] iterated height times, where
// core is not itself a single bracket atom.
struct Tower {
    BracketedWord core;
    int height = 1;

    bool operator==(const Tower&) const = default;
};

using BracketTowerFactorization = std::vector<Tower>;

// Unique factorization of an RDoublePrime word as a product of bracket
// towers. Errors on any other word class.
BracketTowerFactorization bracket_tower_factorization(const BracketedWord& w);

// Rebuilds the word a factorization came from.
BracketedWord tower_product(const BracketTowerFactorization& towers);

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Parses the word grammar: brackets "[...]", identifier letters, "1" for
// the identity, whitespace between atoms. Throws ParseError.
BracketedWord parse_word(const std::string& text);

}  // namespace reyn
