// Times the serial and OpenMP identity sweeps against each other and
// checks that both produce the same report. Sizes are small enough to
// finish in seconds yet large enough to show the kernel overhead.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "reyn/enumerate.hpp"
#include "reyn/grid.hpp"
#include "reyn/identities.hpp"

using namespace reyn;
using Clock = std::chrono::steady_clock;

namespace {

double timed(GridReport& out, const std::function<GridReport()>& run) {
    auto start = Clock::now();
    out = run();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
    std::vector<Letter> alphabet;
    alphabet.emplace_back("x");
    alphabet.emplace_back("y");

    PairResidual pair_residual = [](const BracketedWord& a, const BracketedWord& b,
                                    PCache& cache) {
        return reynolds_residual(LinComb(a), LinComb(b), cache);
    };
    TupleResidual tuple_residual = [](std::span<const BracketedWord> tuple, PCache& cache) {
        std::vector<LinComb> args;
        args.reserve(tuple.size());
        for (const BracketedWord& w : tuple) args.emplace_back(w);
        return multivariant_residual(args, cache);
    };

    std::printf("%-28s %10s %10s %10s %8s\n", "sweep", "cells", "serial s", "openmp s",
                "speedup");

    for (int max_size : {3, 4}) {
        auto words = enumerate_reynolds_words(alphabet, max_size);
        GridReport serial, parallel;
        double ts = timed(serial, [&] { return check_pairs_serial(words, pair_residual); });
        double tp = timed(parallel, [&] { return check_pairs_parallel(words, pair_residual); });
        if (!(serial == parallel) || !serial.ok()) {
            std::printf("pair sweep mismatch at size %d\n", max_size);
            return 1;
        }
        std::printf("pairs, size <= %-13d %10llu %10.3f %10.3f %7.2fx\n", max_size,
                    static_cast<unsigned long long>(serial.checked), ts, tp, ts / tp);
    }

    {
        auto words = enumerate_reynolds_words(alphabet, 2);
        GridReport serial, parallel;
        double ts =
            timed(serial, [&] { return check_tuples_serial(words, 3, tuple_residual); });
        double tp =
            timed(parallel, [&] { return check_tuples_parallel(words, 3, tuple_residual); });
        if (!(serial == parallel) || !serial.ok()) {
            std::printf("tuple sweep mismatch\n");
            return 1;
        }
        std::printf("%-28s %10llu %10.3f %10.3f %7.2fx\n", "triples, size <= 2",
                    static_cast<unsigned long long>(serial.checked), ts, tp, ts / tp);
    }
    return 0;
}
