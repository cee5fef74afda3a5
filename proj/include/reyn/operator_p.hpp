#pragma once

#include <unordered_map>

#include "reyn/lincomb.hpp"

namespace reyn {

// Memo for the operator P on basis words. apply_p creates a fresh cache per
// top-level call; callers running many evaluations over overlapping words
// can hold one PCache and pass it in. A cache is not synchronized: confine
// each instance to one thread.
class PCache {
  public:
    PCache() = default;

    // Upper bound on cached entries; 0 means unbounded. Words evaluated
    // past the bound are still computed, just not retained.
    explicit PCache(std::size_t max_entries) : max_entries_(max_entries) {}

    // P applied to a single Reynolds word. Errors on non-Reynolds input.
    LinComb on_word(const BracketedWord& r);

    std::size_t entries() const { return memo_.size(); }

  private:
    std::unordered_map<BracketedWord, LinComb, WordHash> memo_;
    std::size_t max_entries_ = 0;
};

// Linear extension of P. Errors when a basis word is not a Reynolds word.
LinComb apply_p(const LinComb& a);
LinComb apply_p(const LinComb& a, PCache& cache);

// apply_p iterated n >= 0 times.
LinComb apply_p_iterated(const LinComb& a, int n, PCache& cache);

}  // namespace reyn
