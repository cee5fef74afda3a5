#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "reyn/lincomb.hpp"
#include "reyn/polynomial.hpp"

namespace reyn {

// An associative algebra E together with a linear operator Q satisfying the
// weight-lambda Reynolds identity
//   Q(u)Q(v) = Q(u Q(v)) + Q(Q(u) v) + lambda Q(Q(u) Q(v)).
// The carrier type needs +, -, *, scaling by Rational, ==, is_zero(), and
// static E::one().
template <class E>
struct ReynoldsAlgebraModel {
    std::string name;
    Rational weight;
    std::function<E(const E&)> op;
};

// Left side minus right side of the weight-lambda identity; zero iff the
// identity holds for the pair.
template <class E>
E weighted_residual(const std::function<E(const E&)>& q, const Rational& lambda, const E& u,
                    const E& v) {
    E qu = q(u);
    E qv = q(v);
    E res = qu * qv;
    res -= q(u * qv);
    res -= q(qu * v);
    res -= lambda * q(qu * qv);
    return res;
}

template <class E>
E weighted_residual(const ReynoldsAlgebraModel<E>& model, const E& u, const E& v) {
    return weighted_residual<E>(model.op, model.weight, u, v);
}

// u * v  :=  u Q(v) + Q(u) v + lambda Q(u) Q(v), the double product of the
// operator.
template <class E>
E star_product(const std::function<E(const E&)>& q, const Rational& lambda, const E& u, const E& v) {
    E qu = q(u);
    E qv = q(v);
    E res = u * qv;
    res += qu * v;
    res += lambda * (qu * qv);
    return res;
}

// Rescaling c*Q turns a weight-mu operator into a weight mu/c one, so this
// produces a model of the requested weight from any model of nonzero
// weight. Weight 0 is not reachable by rescaling; the zero operator is the
// degenerate weight-0 choice.
template <class E>
ReynoldsAlgebraModel<E> with_weight(const ReynoldsAlgebraModel<E>& base, const Rational& lambda) {
    ReynoldsAlgebraModel<E> m;
    m.name = base.name + " at weight " + to_string(lambda);
    m.weight = lambda;
    if (lambda == 0) {
        m.op = [](const E&) { return E{}; };
    } else {
        Rational c = base.weight / lambda;
        m.op = [c, q = base.op](const E& u) { return c * q(u); };
    }
    return m;
}

struct CheckReport {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

// Verifies on all ordered sample pairs that rescaling by each c gives an
// operator of weight mu/c.
template <class E>
CheckReport weight_transform_check(const ReynoldsAlgebraModel<E>& base,
                                   std::span<const Rational> scales, std::span<const E> samples) {
    CheckReport report;
    for (const Rational& c : scales) {
        if (c == 0) throw std::invalid_argument("weight transform scale must be nonzero");
        auto scaled = [&](const E& u) { return c * base.op(u); };
        Rational lambda = base.weight / c;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            for (std::size_t j = 0; j < samples.size(); ++j) {
                ++report.checked;
                E res = weighted_residual<E>(scaled, lambda, samples[i], samples[j]);
                if (!res.is_zero()) {
                    ++report.failures;
                    if (report.first_failure.empty())
                        report.first_failure = "scale " + to_string(c) + ", sample pair (" +
                                               std::to_string(i) + ", " + std::to_string(j) + ")";
                }
            }
        }
    }
    return report;
}

struct StarCheckReport {
    std::uint64_t triples = 0;
    std::uint64_t product_failures = 0;   // Q(u*v) != Q(u)Q(v)
    std::uint64_t assoc_failures = 0;     // (u*v)*w != u*(v*w)
    std::uint64_t weighted_failures = 0;  // weight-lambda identity fails in the star algebra
    std::uint64_t hom_failures = 0;       // hom check on the second pair of the triple
    std::string first_failure;

    bool ok() const {
        return product_failures == 0 && assoc_failures == 0 && weighted_failures == 0 &&
               hom_failures == 0;
    }
};

// For every triple (u, v, w): the star product is associative, Q maps star
// products to plain products, and (E, star, Q) satisfies the same
// weight-lambda identity. The hom item is the same equation as the product
// item; it is evaluated on (v, w) so the two cover different pairs.
template <class E>
StarCheckReport star_checks(const ReynoldsAlgebraModel<E>& model,
                            std::span<const std::array<E, 3>> triples) {
    StarCheckReport report;
    const auto& q = model.op;
    const Rational& lambda = model.weight;
    auto star = [&](const E& a, const E& b) { return star_product<E>(q, lambda, a, b); };
    auto note = [&](std::uint64_t index, const char* what) {
        if (report.first_failure.empty())
            report.first_failure = std::string(what) + " at triple " + std::to_string(index);
    };
    for (const auto& [u, v, w] : triples) {
        ++report.triples;
        std::uint64_t index = report.triples - 1;
        if (!(q(star(u, v)) - q(u) * q(v)).is_zero()) {
            ++report.product_failures;
            note(index, "product");
        }
        if (!(star(star(u, v), w) - star(u, star(v, w))).is_zero()) {
            ++report.assoc_failures;
            note(index, "associativity");
        }
        E sres = star(q(u), q(v)) - q(star(u, q(v))) - q(star(q(u), v)) -
                 lambda * q(star(q(u), q(v)));
        if (!sres.is_zero()) {
            ++report.weighted_failures;
            note(index, "weighted identity in the star algebra");
        }
        if (!(q(star(v, w)) - q(v) * q(w)).is_zero()) {
            ++report.hom_failures;
            note(index, "hom");
        }
    }
    return report;
}

// Exact binomial coefficient, zero outside 0 <= k <= n.
Integer binomial(long long n, long long k);

// C(p+r, r-1) + sum_{j=r}^{q} C(p+j, j) == C(p+q+1, p+1) for p >= 0,
// 1 <= r <= q. Errors on arguments outside that range.
bool binomial_identity_check(long long p, long long q, long long r);

// The algebra map induced by a letter assignment: letters map through
// `assignment`, brackets map through Q, concatenation maps to carrier
// multiplication, extended linearly. Errors on an unassigned letter or a
// non-Reynolds basis word.
template <class E>
E universal_map(const std::function<E(const E&)>& q, const std::map<std::string, E>& assignment,
                const LinComb& a) {
    auto word_image = [&](const BracketedWord& w, auto&& self) -> E {
        E acc = E::one();
        for (const Atom& atom : w.atoms()) {
            if (atom.is_letter()) {
                auto it = assignment.find(atom.letter);
                if (it == assignment.end())
                    throw std::invalid_argument("letter \"" + atom.letter + "\" has no assignment");
                acc = acc * it->second;
            } else {
                acc = acc * q(self(*atom.inner, self));
            }
        }
        return acc;
    };
    E result{};
    for (const auto& [w, c] : a.terms()) {
        if (!w.is_reynolds())
            throw std::invalid_argument("universal map needs Reynolds words, got \"" + w.text() +
                                        "\"");
        result += c * word_image(w, word_image);
    }
    return result;
}

template <class E>
E universal_map(const ReynoldsAlgebraModel<E>& model, const std::map<std::string, E>& assignment,
                const LinComb& a) {
    return universal_map<E>(model.op, assignment, a);
}

// Q(x^n) = x^n / (n+1), the averaging of f on (0, x). Weight -1, not
// idempotent.
ReynoldsAlgebraModel<Polynomial> averaging_model();

// Q(f) = sum_{n=0}^{deg f} (-1)^n f^(n), alternating derivatives.
// Weight -1.
ReynoldsAlgebraModel<Polynomial> differential_model();

}  // namespace reyn
