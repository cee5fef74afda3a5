#include "reyn/models.hpp"

#include <stdexcept>

namespace reyn {
namespace {

// Degree bound for the self-check every factory runs on monomial pairs.
constexpr int kFactoryCheckDegree = 8;

void self_check(const ReynoldsAlgebraModel<Polynomial>& model) {
    for (int n = 0; n <= kFactoryCheckDegree; ++n) {
        for (int m = 0; m <= kFactoryCheckDegree; ++m) {
            Polynomial res =
                weighted_residual(model, Polynomial::monomial(n, 1), Polynomial::monomial(m, 1));
            if (!res.is_zero())
                throw std::logic_error(model.name + ": weighted identity fails on x^" +
                                       std::to_string(n) + ", x^" + std::to_string(m));
        }
    }
}

}  // namespace

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: the partial products are binomials
    }
    return result;
}

bool binomial_identity_check(long long p, long long q, long long r) {
    if (p < 0 || r < 1 || q < r)
        throw std::invalid_argument("binomial_identity_check needs p >= 0 and 1 <= r <= q");
    Integer lhs = binomial(p + r, r - 1);
    for (long long j = r; j <= q; ++j) lhs += binomial(p + j, j);
    return lhs == binomial(p + q + 1, p + 1);
}

ReynoldsAlgebraModel<Polynomial> averaging_model() {
    ReynoldsAlgebraModel<Polynomial> m;
    m.name = "averaging";
    m.weight = -1;
    m.op = [](const Polynomial& f) {
        Polynomial out;
        for (const auto& [n, c] : f.terms())
            out += Polynomial::monomial(n, c / Rational(n + 1));
        return out;
    };
    self_check(m);
    return m;
}

ReynoldsAlgebraModel<Polynomial> differential_model() {
    ReynoldsAlgebraModel<Polynomial> m;
    m.name = "differential";
    m.weight = -1;
    m.op = [](const Polynomial& f) {
        Polynomial out;
        Polynomial d = f;
        bool minus = false;
        while (!d.is_zero()) {
            if (minus)
                out -= d;
            else
                out += d;
            minus = !minus;
            d = d.derivative();
        }
        return out;
    };
    self_check(m);
    return m;
}

}  // namespace reyn
