#include "reyn/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace reyn {
namespace {

std::uint64_t checked_mul_add(std::uint64_t acc, std::uint64_t a, std::uint64_t b) {
    unsigned __int128 v = static_cast<unsigned __int128>(a) * b + acc;
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("word count exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

std::vector<Letter> checked_alphabet(std::span<const Letter> alphabet) {
    std::vector<Letter> letters(alphabet.begin(), alphabet.end());
    std::sort(letters.begin(), letters.end());
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1])
            throw std::invalid_argument("duplicate letter \"" + letters[i].name + "\"");
    return letters;
}

}  // namespace

std::vector<std::uint64_t> word_counts(std::size_t alphabet_size, int max_size) {
    if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
    std::vector<std::uint64_t> counts(max_size + 1, 0);
    counts[0] = 1;
    for (int n = 1; n <= max_size; ++n) {
        std::uint64_t total = 0;
        for (int k = 1; k <= n; ++k) {
            // Atoms of size k: the letters at k = 1, plus one bracket
            // around each word of size k - 1.
            std::uint64_t atoms = counts[k - 1] + (k == 1 ? alphabet_size : 0);
            total = checked_mul_add(total, atoms, counts[n - k]);
        }
        counts[n] = total;
    }
    return counts;
}

std::vector<BracketedWord> enumerate_words(std::span<const Letter> alphabet, int max_size) {
    if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
    std::vector<Letter> letters = checked_alphabet(alphabet);

    std::vector<std::vector<BracketedWord>> by_size(max_size + 1);
    std::vector<std::vector<Atom>> atoms_by_size(max_size + 1);
    by_size[0].push_back(BracketedWord{});
    for (int n = 1; n <= max_size; ++n) {
        if (n == 1)
            for (const Letter& l : letters) atoms_by_size[1].push_back(Atom::make_letter(l.name));
        for (const BracketedWord& w : by_size[n - 1])
            atoms_by_size[n].push_back(Atom::make_bracket(w));

        for (int k = 1; k <= n; ++k) {
            for (const Atom& a : atoms_by_size[k]) {
                for (const BracketedWord& rest : by_size[n - k]) {
                    std::vector<Atom> atoms;
                    atoms.reserve(1 + rest.atoms().size());
                    atoms.push_back(a);
                    atoms.insert(atoms.end(), rest.atoms().begin(), rest.atoms().end());
                    by_size[n].push_back(BracketedWord::from_atoms(std::move(atoms)));
                }
            }
        }
        std::sort(by_size[n].begin(), by_size[n].end());
    }

    std::vector<BracketedWord> out;
    for (auto& level : by_size)
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    return out;
}

std::vector<BracketedWord> enumerate_reynolds_words(std::span<const Letter> alphabet, int max_size) {
    std::vector<BracketedWord> all = enumerate_words(alphabet, max_size);
    std::vector<BracketedWord> out;
    out.reserve(all.size());
    for (BracketedWord& w : all)
        if (w.is_reynolds()) out.push_back(std::move(w));
    return out;
}

namespace {

// Unbiased value in [0, n) from full 64-bit engine draws.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r < threshold) return r % n;
    }
}

BracketedWord random_word_sized(const std::vector<Letter>& letters,
                                const std::vector<std::uint64_t>& counts, int n,
                                std::mt19937_64& rng) {
    if (n == 0) return BracketedWord{};
    std::uint64_t v = draw_below(rng, counts[n]);
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            std::uint64_t letter_block = static_cast<std::uint64_t>(letters.size()) * counts[n - 1];
            if (v < letter_block) {
                std::size_t li = static_cast<std::size_t>(v / counts[n - 1]);
                BracketedWord rest = random_word_sized(letters, counts, n - 1, rng);
                return BracketedWord::concat(BracketedWord::letter(letters[li].name), rest);
            }
            v -= letter_block;
        }
        std::uint64_t bracket_block = counts[k - 1] * counts[n - k];
        if (v < bracket_block) {
            BracketedWord inner = random_word_sized(letters, counts, k - 1, rng);
            BracketedWord rest = random_word_sized(letters, counts, n - k, rng);
            return BracketedWord::concat(BracketedWord::bracket(inner), rest);
        }
        v -= bracket_block;
    }
    throw std::logic_error("count-weighted draw out of range");
}

}  // namespace

BracketedWord random_word(std::span<const Letter> alphabet, int size, std::mt19937_64& rng) {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    std::vector<Letter> letters = checked_alphabet(alphabet);
    std::vector<std::uint64_t> counts = word_counts(letters.size(), size);
    return random_word_sized(letters, counts, size, rng);
}

BracketedWord random_reynolds_word(std::span<const Letter> alphabet, int size, std::mt19937_64& rng) {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    std::vector<Letter> letters = checked_alphabet(alphabet);
    std::vector<std::uint64_t> counts = word_counts(letters.size(), size);
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        BracketedWord w = random_word_sized(letters, counts, size, rng);
        if (w.is_reynolds()) return w;
    }
    throw std::runtime_error("rejection sampling failed to find a Reynolds word");
}

}  // namespace reyn
