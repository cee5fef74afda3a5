#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "reyn/word.hpp"

namespace reyn {

// Number of bracketed words of sizes 0..max_size over an alphabet with the
// given number of letters. Errors on 64-bit overflow.
std::vector<std::uint64_t> word_counts(std::size_t alphabet_size, int max_size);

// All bracketed words of size <= max_size in (size, rendering) order.
// The alphabet must be duplicate free.
std::vector<BracketedWord> enumerate_words(std::span<const Letter> alphabet, int max_size);

// enumerate_words filtered by is_reynolds.
std::vector<BracketedWord> enumerate_reynolds_words(std::span<const Letter> alphabet, int max_size);

// Uniformly random word of exactly the given size, chosen by count-weighted
// splits. Fully deterministic for a fixed engine seed.
BracketedWord random_word(std::span<const Letter> alphabet, int size, std::mt19937_64& rng);

// Rejection-sampled uniformly random Reynolds word of exactly the given
// size.
BracketedWord random_reynolds_word(std::span<const Letter> alphabet, int size, std::mt19937_64& rng);

}  // namespace reyn
