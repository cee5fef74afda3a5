#include "reyn/identities.hpp"

#include <array>
#include <vector>

#include "doctest.h"
#include "reyn/enumerate.hpp"

using namespace reyn;

namespace {

LinComb lc(const std::string& text) { return parse_lincomb(text); }

// The word with bracket atom i replaced by its content, spliced in place.
BracketedWord lower_atom(const BracketedWord& w, std::size_t i) {
    std::vector<Atom> atoms;
    for (std::size_t j = 0; j < w.atoms().size(); ++j) {
        if (j != i) {
            atoms.push_back(w.atoms()[j]);
        } else {
            const auto& content = w.atoms()[i].inner->atoms();
            atoms.insert(atoms.end(), content.begin(), content.end());
        }
    }
    return BracketedWord::from_atoms(std::move(atoms));
}

}  // namespace

TEST_CASE("the Reynolds residual vanishes on word pairs") {
    PCache cache;
    const char* words[] = {"1", "x", "y", "[x]", "x [y]", "[x] [y]", "[[x]]", "[] []", "x y z"};
    for (const char* r : words) {
        for (const char* s : words) {
            CAPTURE(r);
            CAPTURE(s);
            CHECK(reynolds_residual(lc(r), lc(s), cache).is_zero());
        }
    }
}

TEST_CASE("the Reynolds residual vanishes on mixed combinations") {
    LinComb a = lc("2 * x - 1/3 * [y] + [x] [y]");
    LinComb b = lc("x y + 5 * [] []");
    CHECK(reynolds_residual(a, b).is_zero());
    CHECK(reynolds_residual(b, a).is_zero());
    CHECK(reynolds_residual(a, LinComb{}).is_zero());
}

TEST_CASE("dropping the correction term breaks the identity") {
    // P(u)P(v) - P(uP(v)) - P(P(u)v) alone is not zero; the product term
    // P(u)P(v) inside P is what balances it.
    PCache cache;
    LinComb u = lc("x"), v = lc("x");
    LinComb pu = apply_p(u, cache), pv = apply_p(v, cache);
    LinComb wrong = multiply(pu, pv);
    wrong -= apply_p(multiply(u, pv), cache);
    wrong -= apply_p(multiply(pu, v), cache);
    CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("the multivariant residual vanishes and extends the pair case") {
    PCache cache;
    SUBCASE("two arguments reduce to the Reynolds residual") {
        const char* words[] = {"x", "[y]", "[x] [y]", "x [y] z"};
        for (const char* r : words) {
            for (const char* s : words) {
                std::array<LinComb, 2> u = {lc(r), lc(s)};
                CHECK(multivariant_residual(u, cache) == reynolds_residual(u[0], u[1], cache));
            }
        }
    }
    SUBCASE("longer tuples") {
        std::array<LinComb, 3> t3 = {lc("x"), lc("[y]"), lc("x [y]")};
        CHECK(multivariant_residual(t3, cache).is_zero());
        std::array<LinComb, 4> t4 = {lc("x"), lc("1"), lc("[x] [y]"), lc("y")};
        CHECK(multivariant_residual(t4, cache).is_zero());
    }
    SUBCASE("fewer than two arguments make no identity") {
        std::array<LinComb, 1> t1 = {lc("x")};
        CHECK_THROWS_AS(multivariant_residual(t1, cache), std::invalid_argument);
        CHECK_THROWS_AS(multivariant_residual(std::span<const LinComb>{}, cache),
                        std::invalid_argument);
    }
}

TEST_CASE("the truncated series residual vanishes for every order") {
    PCache cache;
    const char* words[] = {"1", "x", "[y]", "x [y]", "[x] [y]"};
    for (const char* r : words) {
        for (const char* s : words) {
            for (int k = 0; k <= 3; ++k) {
                CAPTURE(r);
                CAPTURE(s);
                CAPTURE(k);
                CHECK(truncated_series_residual(lc(r), lc(s), k, cache).is_zero());
            }
        }
    }
    CHECK_THROWS_AS(truncated_series_residual(lc("x"), lc("y"), -1, cache), std::invalid_argument);
}

TEST_CASE("order zero of the series is the Reynolds identity rearranged") {
    // At k = 0 the residual is P(u)P(v) - P(uP(v) + P(u)v) + P(P(u)P(v)),
    // the identity with everything moved to one side.
    PCache cache;
    LinComb u = lc("x + 2 * [y]"), v = lc("[x] [y]");
    LinComb series = truncated_series_residual(u, v, 0, cache);
    LinComb rearranged = reynolds_residual(u, v, cache);
    CHECK(series == rearranged);
    CHECK(series.is_zero());
}

TEST_CASE("the free star product obeys its defining relations") {
    PCache cache;
    const char* words[] = {"x", "[y]", "x [y]", "[x] [y]", "1"};

    SUBCASE("frozen small product") {
        CHECK(star_product_free(lc("x"), lc("x"), cache) ==
              lc("x [x] + [x] x - [x] [x]"));
    }
    SUBCASE("P maps star products to plain products") {
        for (const char* u : words) {
            for (const char* v : words) {
                LinComb star = star_product_free(lc(u), lc(v), cache);
                CHECK(apply_p(star, cache) ==
                      multiply(apply_p(lc(u), cache), apply_p(lc(v), cache)));
            }
        }
    }
    SUBCASE("the star product is associative") {
        const char* triple[] = {"x", "[y]", "[x] [y]"};
        for (const char* u : triple) {
            for (const char* v : triple) {
                for (const char* w : triple) {
                    LinComb left = star_product_free(star_product_free(lc(u), lc(v), cache), lc(w), cache);
                    LinComb right = star_product_free(lc(u), star_product_free(lc(v), lc(w), cache), cache);
                    CHECK(left == right);
                }
            }
        }
    }
}

TEST_CASE("P of a bracket product expands one lowered tower at a time") {
    // For r a product of m >= 2 bracket atoms and any Reynolds s, with r*_i
    // the word with bracket i lowered once:
    //   m P(r P(s)) = sum_i P(r*_i P(s)) - r P(s) + P(r s)
    // and on the other side
    //   m P(P(s) r) = sum_i P(P(s) r*_i) - P(s) r + P(s r).
    std::vector<Letter> alphabet = {Letter("x"), Letter("y")};
    PCache cache;
    std::vector<LinComb> partners = {lc("1"), lc("x"), lc("[y]"), lc("x [y]"), lc("[x] [y]")};
    std::size_t products = 0;
    for (const BracketedWord& r : enumerate_reynolds_words(alphabet, 4)) {
        if (classify(r) != WordClass::RDoublePrime) continue;
        ++products;
        auto m = static_cast<long long>(r.atoms().size());
        LinComb rw(r);
        for (const LinComb& s : partners) {
            LinComb ps = apply_p(s, cache);
            CAPTURE(r.text());

            LinComb left = scale(m, apply_p(multiply(rw, ps), cache));
            LinComb right;
            for (std::size_t i = 0; i < r.atoms().size(); ++i)
                right += apply_p(multiply(LinComb(lower_atom(r, i)), ps), cache);
            right -= multiply(rw, ps);
            right += apply_p(multiply(rw, s), cache);
            CHECK(left == right);

            LinComb mleft = scale(m, apply_p(multiply(ps, rw), cache));
            LinComb mright;
            for (std::size_t i = 0; i < r.atoms().size(); ++i)
                mright += apply_p(multiply(ps, LinComb(lower_atom(r, i))), cache);
            mright -= multiply(ps, rw);
            mright += apply_p(multiply(s, rw), cache);
            CHECK(mleft == mright);
        }
    }
    CHECK(products > 10);
}
