#include "reyn/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace reyn {

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    Polynomial p;
    if (c != 0) p.coef_[degree] = c;
    return p;
}

Rational Polynomial::coeff(int degree) const {
    auto it = coef_.find(degree);
    return it == coef_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    for (const auto& [n, c] : coef_)
        if (n > 0) d.coef_[n - 1] = Rational(n) * c;
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [n, c] : rhs.coef_) {
        Rational& slot = coef_[n];
        slot += c;
        if (slot == 0) coef_.erase(n);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [n, c] : rhs.coef_) {
        Rational& slot = coef_[n];
        slot -= c;
        if (slot == 0) coef_.erase(n);
    }
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r += b;
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r -= b;
    return r;
}

Polynomial operator-(const Polynomial& a) { return Polynomial::zero() - a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [n, cn] : a.terms())
        for (const auto& [m, cm] : b.terms())
            r += Polynomial::monomial(n + m, cn * cm);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial r;
    for (const auto& [n, cn] : a.terms()) r += Polynomial::monomial(n, c * cn);
    return r;
}

std::string Polynomial::text() const {
    if (coef_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : coef_) {
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
        if (n == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) {
                out += to_string(mag);
                out += '*';
            }
            out += (n == 1) ? "x" : "x^" + std::to_string(n);
        }
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("bad polynomial at offset " + std::to_string(pos) + ": " + what);
    };
    auto read_int = [&]() -> std::string {
        std::string digits;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
        if (digits.empty()) fail("expected digits");
        return digits;
    };

    Polynomial result;
    skip_ws();
    if (pos == text.size()) fail("empty polynomial");
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    for (;;) {
        skip_ws();
        Rational coeff = 1;
        bool saw_number = false;
        if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            std::string num = read_int();
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                std::string den = read_int();
                if (Integer(den) == 0) fail("zero denominator");
                coeff = Rational(Integer(num), Integer(den));
            } else {
                coeff = Rational(Integer(num));
            }
            saw_number = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        int degree = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            degree = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                degree = std::stoi(read_int());
            }
        } else if (!saw_number) {
            fail("expected a coefficient or x");
        }
        if (negative) coeff = -coeff;
        result += Polynomial::monomial(degree, coeff);

        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos++] == '-';
            continue;
        }
        fail("expected '+' or '-'");
    }
    return result;
}

}  // namespace reyn
