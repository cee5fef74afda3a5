#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "reyn/identities.hpp"

namespace reyn {

// Result of sweeping a residual over a grid of word tuples. Indices are
// row-major over the word list, so reports from the serial and parallel
// kernels compare equal.
struct GridReport {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::int64_t first_failure = -1;  // flattened index, -1 when clean

    bool ok() const { return checked > 0 && failures == 0; }
    bool operator==(const GridReport&) const = default;
};

using PairResidual = std::function<LinComb(const BracketedWord&, const BracketedWord&, PCache&)>;
using TupleResidual = std::function<LinComb(std::span<const BracketedWord>, PCache&)>;

// Every ordered pair from `words`, reference single-loop implementation
// with one shared memo.
GridReport check_pairs_serial(std::span<const BracketedWord> words, const PairResidual& residual,
                              std::size_t memo_cap = 0);

// Same sweep under OpenMP worksharing, one memo per thread. Falls back to
// the serial loop when built without OpenMP.
GridReport check_pairs_parallel(std::span<const BracketedWord> words, const PairResidual& residual,
                                std::size_t memo_cap = 0);

// Every ordered m-tuple from `words`, m >= 1.
GridReport check_tuples_serial(std::span<const BracketedWord> words, int m,
                               const TupleResidual& residual, std::size_t memo_cap = 0);
GridReport check_tuples_parallel(std::span<const BracketedWord> words, int m,
                                 const TupleResidual& residual, std::size_t memo_cap = 0);

}  // namespace reyn
