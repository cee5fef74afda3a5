#include "reyn/word.hpp"

#include <cassert>
#include <functional>
#include <utility>

namespace reyn {

static bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

bool is_valid_letter_name(const std::string& name) {
    if (name.empty() || !is_ident_start(name[0])) return false;
    for (char c : name)
        if (!is_ident_char(c)) return false;
    return name != "sigma";
}

Letter::Letter(std::string n) : name(std::move(n)) {
    if (!is_valid_letter_name(name))
        throw std::invalid_argument("bad letter name: \"" + name + "\"");
}

Atom Atom::make_letter(std::string name) {
    Atom a;
    a.letter = std::move(name);
    assert(is_valid_letter_name(a.letter));
    return a;
}

Atom Atom::make_bracket(BracketedWord inner) {
    Atom a;
    a.inner = std::move(inner);
    return a;
}

struct BracketedWord::Rep {
    std::vector<Atom> atoms;
    std::string text;
    int size = 0;
    int depth = 0;
    bool reynolds = true;
    std::size_t hash = 0;
};

BracketedWord::BracketedWord() {
    static const std::shared_ptr<const Rep> rep = [] {
        auto r = std::make_shared<Rep>();
        r->text = "1";
        r->hash = std::hash<std::string>{}(r->text);
        return r;
    }();
    rep_ = rep;
}

BracketedWord BracketedWord::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) return BracketedWord();
    auto rep = std::make_shared<Rep>();
    int brackets = 0;
    for (const Atom& a : atoms) {
        if (!rep->text.empty()) rep->text += ' ';
        if (a.is_letter()) {
            rep->size += 1;
            rep->text += a.letter;
        } else {
            const BracketedWord& u = *a.inner;
            ++brackets;
            rep->size += 1 + u.size();
            rep->depth = std::max(rep->depth, 1 + u.depth());
            rep->text += '[';
            if (!u.is_identity()) rep->text += u.text();
            rep->text += ']';
            // A bracket spoils the Reynolds property when its content is a
            // product of two or more atoms that are all brackets.
            const auto& in = u.atoms();
            bool all_brackets = in.size() >= 2;
            for (const Atom& b : in)
                if (b.is_letter()) { all_brackets = false; break; }
            if (all_brackets || !u.is_reynolds()) rep->reynolds = false;
        }
    }
    rep->hash = std::hash<std::string>{}(rep->text);
    rep->atoms = std::move(atoms);
    return BracketedWord(std::move(rep));
}

BracketedWord BracketedWord::letter(const std::string& name) {
    Letter checked(name);
    return from_atoms({Atom::make_letter(checked.name)});
}

BracketedWord BracketedWord::bracket(const BracketedWord& inner) {
    return from_atoms({Atom::make_bracket(inner)});
}

BracketedWord BracketedWord::concat(const BracketedWord& a, const BracketedWord& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return from_atoms(std::move(atoms));
}

const std::vector<Atom>& BracketedWord::atoms() const { return rep_->atoms; }
const std::string& BracketedWord::text() const { return rep_->text; }
int BracketedWord::size() const { return rep_->size; }
int BracketedWord::depth() const { return rep_->depth; }
bool BracketedWord::is_reynolds() const { return rep_->reynolds; }
std::size_t BracketedWord::hash() const { return rep_->hash; }

bool BracketedWord::operator==(const BracketedWord& rhs) const {
    if (rep_ == rhs.rep_) return true;
    return rep_->hash == rhs.rep_->hash && rep_->text == rhs.rep_->text;
}

std::strong_ordering BracketedWord::operator<=>(const BracketedWord& rhs) const {
    if (rep_ == rhs.rep_) return std::strong_ordering::equal;
    if (auto c = rep_->size <=> rhs.rep_->size; c != 0) return c;
    int c = rep_->text.compare(rhs.rep_->text);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

WordClass classify(const BracketedWord& w) {
    if (!w.is_reynolds()) return WordClass::NotReynolds;
    const auto& atoms = w.atoms();
    if (atoms.size() < 2) return WordClass::RPrime;
    for (const Atom& a : atoms)
        if (a.is_letter()) return WordClass::RPrime;
    return WordClass::RDoublePrime;
}

const char* to_string(WordClass c) {
    switch (c) {
        case WordClass::NotReynolds: return "NotReynolds";
        case WordClass::RPrime: return "RPrime";
        case WordClass::RDoublePrime: return "RDoublePrime";
    }
    return "?";
}

const std::vector<Atom>& standard_decomposition(const BracketedWord& w) {
    if (w.is_identity())
        throw std::invalid_argument("the identity word has no standard decomposition");
    return w.atoms();
}

BracketTowerFactorization bracket_tower_factorization(const BracketedWord& w) {
    if (classify(w) != WordClass::RDoublePrime)
        throw std::invalid_argument("bracket tower factorization needs an RDoublePrime word, got \"" +
                                    w.text() + "\"");
    BracketTowerFactorization towers;
    towers.reserve(w.atoms().size());
    for (const Atom& a : w.atoms()) {
        Tower t;
        t.core = *a.inner;
        t.height = 1;
        // Peel while the content is itself a lone bracket atom.
        while (t.core.atoms().size() == 1 && t.core.atoms()[0].is_bracket()) {
            t.core = *t.core.atoms()[0].inner;
            ++t.height;
        }
        assert(classify(t.core) == WordClass::RPrime);
        towers.push_back(std::move(t));
    }
    return towers;
}

BracketedWord tower_product(const BracketTowerFactorization& towers) {
    std::vector<Atom> atoms;
    atoms.reserve(towers.size());
    for (const Tower& t : towers) {
        BracketedWord w = t.core;
        for (int i = 1; i < t.height; ++i) w = BracketedWord::bracket(w);
        atoms.push_back(Atom::make_bracket(std::move(w)));
    }
    return BracketedWord::from_atoms(std::move(atoms));
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

}  // namespace reyn
