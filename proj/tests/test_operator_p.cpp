#include "reyn/operator_p.hpp"

#include <vector>

#include "doctest.h"
#include "oracle_p.hpp"
#include "reyn/enumerate.hpp"

using namespace reyn;

namespace {

LinComb lc(const std::string& text) { return parse_lincomb(text); }
LinComb p(const std::string& text) { return apply_p(parse_lincomb(text)); }

}  // namespace

TEST_CASE("P wraps anything that is not a bracket product in one bracket") {
    CHECK(p("1") == lc("[]"));
    CHECK(p("x") == lc("[x]"));
    CHECK(p("x y") == lc("[x y]"));
    CHECK(p("[x]") == lc("[[x]]"));
    CHECK(p("x [y]") == lc("[x [y]]"));
    CHECK(p("[x y]") == lc("[[x y]]"));
    CHECK(p("[]") == lc("[[]]"));
}

TEST_CASE("P expands bracket products by lowering one tower at a time") {
    // Hand expansions, term order is (size, text).
    CHECK(p("[x] [y]") == lc("[[x] y] + [x [y]] - [x] [y]"));
    CHECK(p("[] []") == lc("2 * [[]] - 1 * [] []"));
    CHECK(p("[] [x]") == lc("[[x]] + [[] x] - [] [x]"));
    CHECK(p("[x] [y] [z]") ==
          lc("1/2 * [[x] [y] z] + 1/2 * [[x] y [z]] + 1/2 * [x [y] [z]] - 1/2 * [x] [y] [z]"));
    CHECK(p("[[x]] [y] [z]") ==
          lc("1/4 * [[x] [y] z] + 1/4 * [[x] y [z]] + 1/4 * [x [y] [z]] - 1/4 * [x] [y] [z]"
             " + 1/2 * [[[x]] [y] z] + 1/2 * [[[x]] y [z]] - 1/2 * [[x]] [y] [z]"));
}

TEST_CASE("lowering an identity tower can leave another bracket product") {
    // In [] [] [x], removing one empty bracket leaves [] [x], which must be
    // expanded again rather than wrapped.
    CHECK(p("[] [] [x]") ==
          lc("[[x]] + [[] x] - [] [x] + 1/2 * [[] [] x] - 1/2 * [] [] [x]"));
    CHECK(p("[] [] []") == lc("3 * [[]] - 3/2 * [] [] - 1/2 * [] [] []"));
}

TEST_CASE("P is linear") {
    LinComb a = lc("2 * x - 1/3 * [y]");
    CHECK(apply_p(a) == lc("2 * [x] - 1/3 * [[y]]"));
    CHECK(apply_p(LinComb{}).is_zero());

    LinComb b = lc("[x] [y] + x");
    CHECK(apply_p(a + b) == apply_p(a) + apply_p(b));
    CHECK(apply_p(scale(Rational(5, 7), b)) == scale(Rational(5, 7), apply_p(b)));
}

TEST_CASE("P rejects non Reynolds words") {
    PCache cache;
    CHECK_THROWS_AS(cache.on_word(parse_word("[[x] [y]]")), std::invalid_argument);
    CHECK_THROWS_AS(apply_p(lc("x + [[] []]")), std::invalid_argument);
}

TEST_CASE("iterating P works from the zeroth power") {
    PCache cache;
    LinComb a = lc("[x] [y]");
    CHECK(apply_p_iterated(a, 0, cache) == a);
    CHECK(apply_p_iterated(a, 1, cache) == apply_p(a, cache));
    CHECK(apply_p_iterated(a, 3, cache) ==
          apply_p(apply_p(apply_p(a, cache), cache), cache));
    CHECK_THROWS_AS(apply_p_iterated(a, -1, cache), std::invalid_argument);
}

TEST_CASE("the memo caches by word and respects its cap") {
    PCache cache;
    CHECK(cache.entries() == 0);
    LinComb first = cache.on_word(parse_word("[x] [y] [z]"));
    std::size_t grown = cache.entries();
    CHECK(grown > 1);  // recursion fills subresults too
    CHECK(cache.on_word(parse_word("[x] [y] [z]")) == first);
    CHECK(cache.entries() == grown);

    // A capped cache still computes correct results.
    PCache small(2);
    CHECK(small.on_word(parse_word("[x] [y] [z]")) == first);
    CHECK(small.entries() <= 2);

    PCache fresh;
    CHECK(apply_p(lc("[x] [y] [z]"), fresh) == first);
}

TEST_CASE("P agrees with the atom replacement oracle on every small word") {
    std::vector<Letter> one = {Letter("x")};
    std::vector<Letter> two = {Letter("x"), Letter("y")};
    PCache cache;
    std::size_t checked = 0;
    for (const auto& alphabet : {one, two}) {
        for (const BracketedWord& w : enumerate_reynolds_words(alphabet, 4)) {
            CHECK(cache.on_word(w) == testing::oracle_p(w));
            ++checked;
        }
    }
    CHECK(checked > 300);

    // Also through the linear extension.
    LinComb a = lc("2 * [x] [y] - 1/3 * [] [] [x] + x");
    CHECK(apply_p(a) == testing::oracle_p(a));
}

TEST_CASE("P lands in Reynolds words and raises the bracket count nowhere") {
    std::vector<Letter> alphabet = {Letter("x")};
    PCache cache;
    for (const BracketedWord& w : enumerate_reynolds_words(alphabet, 4)) {
        LinComb pw = cache.on_word(w);
        CHECK(pw.all_reynolds());
        // P adds exactly one bracket pair to the leading cost: every term
        // has size at most size(w) + 1.
        for (const auto& [term, c] : pw.terms()) {
            (void)c;
            CHECK(term.size() <= w.size() + 1);
        }
    }
}
