#include "reyn/forest.hpp"

#include <stdexcept>

namespace reyn {

DecoratedTree DecoratedTree::leaf(std::string letter_name) {
    DecoratedTree t;
    t.letter = std::move(letter_name);
    return t;
}

DecoratedTree DecoratedTree::sigma(std::vector<DecoratedTree> children) {
    DecoratedTree t;
    t.children = std::move(children);
    return t;
}

DecoratedForest word_to_forest(const BracketedWord& w) {
    DecoratedForest f;
    f.trees.reserve(w.atoms().size());
    for (const Atom& a : w.atoms()) {
        if (a.is_letter()) {
            f.trees.push_back(DecoratedTree::leaf(a.letter));
        } else {
            f.trees.push_back(DecoratedTree::sigma(word_to_forest(*a.inner).trees));
        }
    }
    return f;
}

static BracketedWord tree_to_word(const DecoratedTree& t);

static BracketedWord trees_to_word(const std::vector<DecoratedTree>& trees) {
    std::vector<Atom> atoms;
    atoms.reserve(trees.size());
    for (const DecoratedTree& t : trees) atoms.push_back(tree_to_word(t).atoms()[0]);
    return BracketedWord::from_atoms(std::move(atoms));
}

static BracketedWord tree_to_word(const DecoratedTree& t) {
    if (!t.is_sigma()) {
        if (!t.children.empty())
            throw std::invalid_argument("letter vertex \"" + *t.letter +
                                        "\" has children; no word corresponds");
        return BracketedWord::letter(*t.letter);
    }
    return BracketedWord::bracket(trees_to_word(t.children));
}

BracketedWord forest_to_word(const DecoratedForest& f) { return trees_to_word(f.trees); }

bool has_super_crown(const DecoratedTree& t) {
    if (t.is_sigma() && t.children.size() >= 2) {
        bool all_sigma = true;
        for (const DecoratedTree& c : t.children)
            if (!c.is_sigma()) { all_sigma = false; break; }
        if (all_sigma) return true;
    }
    for (const DecoratedTree& c : t.children)
        if (has_super_crown(c)) return true;
    return false;
}

bool has_super_crown(const DecoratedForest& f) {
    for (const DecoratedTree& t : f.trees)
        if (has_super_crown(t)) return true;
    return false;
}

namespace {

struct DotWriter {
    std::string nodes;
    std::string edges;
    int next_id = 0;

    void visit(const DecoratedTree& t) {
        int id = next_id++;
        nodes += "  n" + std::to_string(id) + " [label=\"" + (t.is_sigma() ? "sigma" : *t.letter) +
                 "\"];\n";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            // Preorder assigns the child the next free id.
            edges += "  n" + std::to_string(id) + " -> n" + std::to_string(next_id) + " [label=\"" +
                     std::to_string(i) + "\"];\n";
            visit(t.children[i]);
        }
    }
};

}  // namespace

std::string to_dot(const DecoratedForest& f) {
    DotWriter w;
    for (const DecoratedTree& t : f.trees) w.visit(t);
    return "digraph forest {\n" + w.nodes + w.edges + "}\n";
}

}  // namespace reyn
