#include "reyn/grid.hpp"

#include <vector>

#include "doctest.h"
#include "reyn/enumerate.hpp"

using namespace reyn;

namespace {

std::vector<BracketedWord> small_reynolds() {
    std::vector<Letter> ab = {Letter("x")};
    return enumerate_reynolds_words(ab, 3);
}

PairResidual reynolds_pair() {
    return [](const BracketedWord& a, const BracketedWord& b, PCache& cache) {
        return reynolds_residual(LinComb(a), LinComb(b), cache);
    };
}

}  // namespace

TEST_CASE("the serial pair sweep covers the full square") {
    auto words = small_reynolds();
    REQUIRE(words.size() == 30);
    GridReport report = check_pairs_serial(words, reynolds_pair());
    CHECK(report.ok());
    CHECK(report.checked == 900);
    CHECK(report.failures == 0);
    CHECK(report.first_failure == -1);
}

TEST_CASE("the parallel pair sweep reproduces the serial report") {
    auto words = small_reynolds();
    GridReport serial = check_pairs_serial(words, reynolds_pair());
    GridReport parallel = check_pairs_parallel(words, reynolds_pair());
    CHECK(serial == parallel);

    // Capped memos change nothing but the speed.
    CHECK(check_pairs_serial(words, reynolds_pair(), 8) == serial);
    CHECK(check_pairs_parallel(words, reynolds_pair(), 8) == serial);
}

TEST_CASE("planted pair failures are counted and located identically") {
    auto words = small_reynolds();
    std::size_t n = words.size();
    // Fails on the diagonal whenever the word size is odd.
    PairResidual planted = [&](const BracketedWord& a, const BracketedWord& b, PCache&) {
        if (a == b && (a.size() % 2) == 1) return LinComb(a);
        return LinComb{};
    };
    GridReport serial = check_pairs_serial(words, planted);
    GridReport parallel = check_pairs_parallel(words, planted);
    CHECK(serial == parallel);
    CHECK_FALSE(serial.ok());
    CHECK(serial.checked == n * n);

    std::uint64_t expected_failures = 0;
    std::int64_t expected_first = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if ((words[i].size() % 2) == 1) {
            ++expected_failures;
            if (expected_first < 0) expected_first = static_cast<std::int64_t>(i * n + i);
        }
    }
    CHECK(serial.failures == expected_failures);
    CHECK(serial.first_failure == expected_first);
}

TEST_CASE("tuple sweeps cover the cube and match across kernels") {
    auto words = small_reynolds();
    words.resize(8);  // keep the m = 3 cube small
    TupleResidual residual = [](std::span<const BracketedWord> tuple, PCache& cache) {
        std::vector<LinComb> args;
        args.reserve(tuple.size());
        for (const BracketedWord& w : tuple) args.emplace_back(w);
        return multivariant_residual(args, cache);
    };
    for (int m : {2, 3}) {
        GridReport serial = check_tuples_serial(words, m, residual);
        GridReport parallel = check_tuples_parallel(words, m, residual);
        CAPTURE(m);
        CHECK(serial == parallel);
        CHECK(serial.ok());
        std::uint64_t volume = 1;
        for (int i = 0; i < m; ++i) volume *= words.size();
        CHECK(serial.checked == volume);
    }
    CHECK_THROWS_AS(check_tuples_serial(words, 0, residual), std::invalid_argument);
}

TEST_CASE("the m = 2 tuple sweep agrees with the pair sweep") {
    auto words = small_reynolds();
    words.resize(10);
    TupleResidual tuple_residual = [](std::span<const BracketedWord> tuple, PCache& cache) {
        return reynolds_residual(LinComb(tuple[0]), LinComb(tuple[1]), cache);
    };
    CHECK(check_tuples_serial(words, 2, tuple_residual) ==
          check_pairs_serial(words, reynolds_pair()));
}

TEST_CASE("a planted tuple failure lands on its row major index") {
    auto words = small_reynolds();
    words.resize(5);
    BracketedWord needle = words[3];
    // Fails exactly on the tuple (w3, w1, w4).
    TupleResidual planted = [&](std::span<const BracketedWord> tuple, PCache&) {
        if (tuple[0] == words[3] && tuple[1] == words[1] && tuple[2] == words[4])
            return LinComb(needle);
        return LinComb{};
    };
    GridReport serial = check_tuples_serial(words, 3, planted);
    GridReport parallel = check_tuples_parallel(words, 3, planted);
    CHECK(serial == parallel);
    CHECK(serial.failures == 1);
    CHECK(serial.first_failure == 3 * 25 + 1 * 5 + 4);
}

TEST_CASE("empty word lists sweep nothing and never pass") {
    GridReport report = check_pairs_serial({}, reynolds_pair());
    CHECK(report.checked == 0);
    CHECK_FALSE(report.ok());
    CHECK(check_pairs_parallel({}, reynolds_pair()) == report);
}
