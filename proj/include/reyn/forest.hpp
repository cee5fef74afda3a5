#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reyn/word.hpp"

namespace reyn {

// Planar rooted tree whose vertices carry either a letter or the grafting
// decoration sigma. Letter vertices are only valid as leaves.
struct DecoratedTree {
    std::optional<std::string> letter;  // nullopt means sigma
    std::vector<DecoratedTree> children;

    bool is_sigma() const { return !letter.has_value(); }

    static DecoratedTree leaf(std::string letter_name);
    static DecoratedTree sigma(std::vector<DecoratedTree> children = {});

    bool operator==(const DecoratedTree&) const = default;
};

// Ordered sequence of decorated trees; the empty forest corresponds to the
// identity word.
struct DecoratedForest {
    std::vector<DecoratedTree> trees;

    bool operator==(const DecoratedForest&) const = default;
};

// Letters become leaves, brackets become sigma vertices grafted over the
// content's forest; an empty bracket becomes a bare sigma vertex.
DecoratedForest word_to_forest(const BracketedWord& w);

// Inverse of word_to_forest. Errors on a letter-decorated vertex with
// children, which corresponds to no word.
BracketedWord forest_to_word(const DecoratedForest& f);

// True iff some sigma vertex has two or more children that are all sigma
// decorated. Words map to crown-free forests exactly when they are
// Reynolds words.
bool has_super_crown(const DecoratedTree& t);
bool has_super_crown(const DecoratedForest& f);

// Graphviz rendering: one node per vertex labeled by its decoration, ids
// assigned in preorder across the forest, edges labeled by child ordinal.
std::string to_dot(const DecoratedForest& f);

}  // namespace reyn
