#include "reyn/lincomb.hpp"

#include <algorithm>

#include "json.hpp"

namespace reyn {

LinComb::LinComb(const BracketedWord& w, Rational c) {
    if (c != 0) terms_.emplace_back(w, std::move(c));
}

Rational LinComb::coeff(const BracketedWord& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const BracketedWord& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w) return it->second;
    return 0;
}

bool LinComb::all_reynolds() const {
    for (const Term& t : terms_)
        if (!t.first.is_reynolds()) return false;
    return true;
}

LinComb& LinComb::add_scaled(const LinComb& x, const Rational& c) {
    if (c == 0 || x.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + x.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = x.terms_.begin(), be = x.terms_.end();
    while (a != ae && b != be) {
        auto cmp = a->first <=> b->first;
        if (cmp < 0) {
            merged.push_back(std::move(*a++));
        } else if (cmp > 0) {
            merged.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational sum = a->second + c * b->second;
            if (sum != 0) merged.emplace_back(a->first, std::move(sum));
            ++a, ++b;
        }
    }
    for (; a != ae; ++a) merged.push_back(std::move(*a));
    for (; b != be; ++b) merged.emplace_back(b->first, c * b->second);
    terms_ = std::move(merged);
    return *this;
}

LinComb& LinComb::operator+=(const LinComb& x) { return add_scaled(x, 1); }
LinComb& LinComb::operator-=(const LinComb& x) { return add_scaled(x, -1); }

LinComb add(const LinComb& a, const LinComb& b) {
    LinComb r = a;
    r += b;
    return r;
}

LinComb scale(const Rational& c, const LinComb& a) {
    LinComb r;
    return r.add_scaled(a, c);
}

LinComb multiply(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (const auto& [wa, ca] : a.terms()) {
        // Concatenation with a fixed left factor preserves canonical order,
        // so each row is already a valid term list.
        std::vector<LinComb::Term> row;
        row.reserve(b.term_count());
        for (const auto& [wb, cb] : b.terms())
            row.emplace_back(BracketedWord::concat(wa, wb), cb);
        r.add_scaled(LinComb(std::move(row)), ca);
    }
    return r;
}

LinComb operator-(const LinComb& a, const LinComb& b) {
    LinComb r = a;
    r -= b;
    return r;
}

LinComb operator-(const LinComb& a) { return scale(-1, a); }

std::string to_text(const LinComb& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        Rational mag = c;
        if (first) {
            if (c < 0) {
                out += '-';
                mag = -c;
            }
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) mag = -c;
        }
        out += to_string(mag);
        out += " * ";
        out += w.text();
    }
    return out;
}

std::string to_json(const LinComb& a) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [w, c] : a.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = to_string(c);
        t["word"] = w.text();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

}  // namespace reyn
