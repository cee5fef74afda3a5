#include "reyn/identities.hpp"

namespace reyn {

LinComb reynolds_residual(const LinComb& r, const LinComb& s, PCache& cache) {
    LinComb pr = apply_p(r, cache);
    LinComb ps = apply_p(s, cache);
    LinComb prps = multiply(pr, ps);
    LinComb residual = prps;
    residual += apply_p(prps, cache);
    residual -= apply_p(multiply(r, ps), cache);
    residual -= apply_p(multiply(pr, s), cache);
    return residual;
}

LinComb reynolds_residual(const LinComb& r, const LinComb& s) {
    PCache cache;
    return reynolds_residual(r, s, cache);
}

LinComb multivariant_residual(std::span<const LinComb> u, PCache& cache) {
    std::size_t m = u.size();
    if (m < 2) throw std::invalid_argument("multivariant_residual needs at least two arguments");
    std::vector<LinComb> pu(m);
    for (std::size_t i = 0; i < m; ++i) pu[i] = apply_p(u[i], cache);

    LinComb prod(BracketedWord{});
    for (std::size_t i = 0; i < m; ++i) prod = multiply(prod, pu[i]);

    LinComb residual = scale(Rational(static_cast<long long>(m) - 1), apply_p(prod, cache));
    residual += prod;
    for (std::size_t i = 0; i < m; ++i) {
        LinComb mixed(BracketedWord{});
        for (std::size_t j = 0; j < m; ++j) mixed = multiply(mixed, j == i ? u[j] : pu[j]);
        residual -= apply_p(mixed, cache);
    }
    return residual;
}

LinComb multivariant_residual(std::span<const LinComb> u) {
    PCache cache;
    return multivariant_residual(u, cache);
}

LinComb truncated_series_residual(const LinComb& u, const LinComb& v, int k, PCache& cache) {
    if (k < 0) throw std::invalid_argument("truncated_series_residual needs k >= 0");
    LinComb pu = apply_p(u, cache);
    LinComb pv = apply_p(v, cache);
    LinComb pupv = multiply(pu, pv);
    LinComb double_product = add(multiply(u, pv), multiply(pu, v));

    LinComb residual = pupv;
    LinComb iterate = apply_p(double_product, cache);  // P^{n+1}(uP(v) + P(u)v)
    Rational sign = 1;
    for (int n = 0; n <= k; ++n) {
        residual.add_scaled(iterate, -sign);
        if (n < k) iterate = apply_p(iterate, cache);
        sign = -sign;
    }
    // sign is now (-1)^{k+1}.
    residual.add_scaled(apply_p_iterated(pupv, k + 1, cache), -sign);
    return residual;
}

LinComb truncated_series_residual(const LinComb& u, const LinComb& v, int k) {
    PCache cache;
    return truncated_series_residual(u, v, k, cache);
}

LinComb star_product_free(const LinComb& u, const LinComb& v, PCache& cache) {
    LinComb pu = apply_p(u, cache);
    LinComb pv = apply_p(v, cache);
    LinComb result = multiply(u, pv);
    result += multiply(pu, v);
    result -= multiply(pu, pv);
    return result;
}

LinComb star_product_free(const LinComb& u, const LinComb& v) {
    PCache cache;
    return star_product_free(u, v, cache);
}

}  // namespace reyn
