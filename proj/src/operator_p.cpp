#include "reyn/operator_p.hpp"

#include <cassert>

namespace reyn {
namespace {

// The word r with tower i lowered by one bracket. A tower reduced to
// height 0 splices the atoms of its core in place (the core may be the
// identity, which splices nothing).
BracketedWord splice_lowered(const BracketTowerFactorization& towers, std::size_t i) {
    std::vector<Atom> atoms;
    atoms.reserve(towers.size() + 2);
    for (std::size_t j = 0; j < towers.size(); ++j) {
        int height = towers[j].height - (j == i ? 1 : 0);
        if (height == 0) {
            const auto& inner = towers[j].core.atoms();
            atoms.insert(atoms.end(), inner.begin(), inner.end());
        } else {
            BracketedWord w = towers[j].core;
            for (int h = 1; h < height; ++h) w = BracketedWord::bracket(w);
            atoms.push_back(Atom::make_bracket(std::move(w)));
        }
    }
    return BracketedWord::from_atoms(std::move(atoms));
}

}  // namespace

LinComb PCache::on_word(const BracketedWord& r) {
    if (auto it = memo_.find(r); it != memo_.end()) return it->second;
    if (!r.is_reynolds())
        throw std::invalid_argument("P is defined on Reynolds words, got \"" + r.text() + "\"");

    LinComb result;
    if (classify(r) != WordClass::RDoublePrime) {
        result = LinComb(BracketedWord::bracket(r));
    } else {
        BracketTowerFactorization towers = bracket_tower_factorization(r);
        std::size_t m = towers.size();
        assert(m >= 2);
        LinComb sum;
        for (std::size_t i = 0; i < m; ++i) {
            // Lowering removes one bracket, so this recursion terminates.
            // The spliced word may be RPrime or again RDoublePrime; on_word
            // dispatches either way.
            sum += on_word(splice_lowered(towers, i));
        }
        sum.add_scaled(LinComb(r), -1);
        result = scale(Rational(1, static_cast<long long>(m) - 1), sum);
    }
    if (max_entries_ == 0 || memo_.size() < max_entries_)
        memo_.emplace(r, result);
    return result;
}

LinComb apply_p(const LinComb& a) {
    PCache cache;
    return apply_p(a, cache);
}

LinComb apply_p(const LinComb& a, PCache& cache) {
    LinComb result;
    for (const auto& [w, c] : a.terms())
        result.add_scaled(cache.on_word(w), c);
    return result;
}

LinComb apply_p_iterated(const LinComb& a, int n, PCache& cache) {
    if (n < 0) throw std::invalid_argument("apply_p_iterated needs n >= 0");
    LinComb result = a;
    for (int i = 0; i < n; ++i) result = apply_p(result, cache);
    return result;
}

}  // namespace reyn
