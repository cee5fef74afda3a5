#include "reyn/grid.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace reyn {
namespace {

std::uint64_t grid_volume(std::size_t n, int m) {
    if (m < 1) throw std::invalid_argument("tuple length must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n)
            throw std::overflow_error("grid too large");
        total *= n;
    }
    return total;
}

void decode(std::uint64_t index, std::size_t n, std::vector<BracketedWord>& tuple,
            std::span<const BracketedWord> words) {
    for (std::size_t slot = tuple.size(); slot-- > 0;) {
        tuple[slot] = words[static_cast<std::size_t>(index % n)];
        index /= n;
    }
}

}  // namespace

GridReport check_pairs_serial(std::span<const BracketedWord> words, const PairResidual& residual,
                              std::size_t memo_cap) {
    GridReport report;
    std::size_t n = words.size();
    PCache cache(memo_cap);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ++report.checked;
            if (!residual(words[i], words[j], cache).is_zero()) {
                ++report.failures;
                if (report.first_failure < 0)
                    report.first_failure = static_cast<std::int64_t>(i * n + j);
            }
        }
    }
    return report;
}

GridReport check_pairs_parallel(std::span<const BracketedWord> words, const PairResidual& residual,
                                std::size_t memo_cap) {
    GridReport report;
    std::size_t n = words.size();
    long long total = static_cast<long long>(grid_volume(n, 2));
    report.checked = static_cast<std::uint64_t>(total);
    std::uint64_t failures = 0;
    std::int64_t first = -1;
#pragma omp parallel
    {
        PCache cache(memo_cap);
        std::uint64_t local_failures = 0;
        std::int64_t local_first = -1;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long idx = 0; idx < total; ++idx) {
            std::size_t i = static_cast<std::size_t>(idx) / n;
            std::size_t j = static_cast<std::size_t>(idx) % n;
            if (!residual(words[i], words[j], cache).is_zero()) {
                ++local_failures;
                if (local_first < 0 || idx < local_first) local_first = idx;
            }
        }
#pragma omp critical
        {
            failures += local_failures;
            if (local_first >= 0 && (first < 0 || local_first < first)) first = local_first;
        }
    }
    report.failures = failures;
    report.first_failure = first;
    return report;
}

GridReport check_tuples_serial(std::span<const BracketedWord> words, int m,
                               const TupleResidual& residual, std::size_t memo_cap) {
    GridReport report;
    std::size_t n = words.size();
    std::uint64_t total = grid_volume(n, m);
    PCache cache(memo_cap);
    std::vector<BracketedWord> tuple(m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx, n, tuple, words);
        ++report.checked;
        if (!residual(tuple, cache).is_zero()) {
            ++report.failures;
            if (report.first_failure < 0) report.first_failure = static_cast<std::int64_t>(idx);
        }
    }
    return report;
}

GridReport check_tuples_parallel(std::span<const BracketedWord> words, int m,
                                 const TupleResidual& residual, std::size_t memo_cap) {
    GridReport report;
    std::size_t n = words.size();
    long long total = static_cast<long long>(grid_volume(n, m));
    report.checked = static_cast<std::uint64_t>(total);
    std::uint64_t failures = 0;
    std::int64_t first = -1;
#pragma omp parallel
    {
        PCache cache(memo_cap);
        std::vector<BracketedWord> tuple(m);
        std::uint64_t local_failures = 0;
        std::int64_t local_first = -1;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long idx = 0; idx < total; ++idx) {
            decode(static_cast<std::uint64_t>(idx), n, tuple, words);
            if (!residual(tuple, cache).is_zero()) {
                ++local_failures;
                if (local_first < 0 || idx < local_first) local_first = idx;
            }
        }
#pragma omp critical
        {
            failures += local_failures;
            if (local_first >= 0 && (first < 0 || local_first < first)) first = local_first;
        }
    }
    report.failures = failures;
    report.first_failure = first;
    return report;
}

}  // namespace reyn
