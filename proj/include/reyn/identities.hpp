#pragma once

#include <span>

#include "reyn/operator_p.hpp"

namespace reyn {

// P(r)P(s) + P(P(r)P(s)) - P(rP(s)) - P(P(r)s). Zero exactly when the
// Reynolds identity holds for the pair.
LinComb reynolds_residual(const LinComb& r, const LinComb& s);
LinComb reynolds_residual(const LinComb& r, const LinComb& s, PCache& cache);

// (m-1) P(prod_i P(u_i)) - sum_i P(P(u_1)...u_i...P(u_m)) + prod_i P(u_i)
// for m >= 2 arguments.
LinComb multivariant_residual(std::span<const LinComb> u);
LinComb multivariant_residual(std::span<const LinComb> u, PCache& cache);

// P(u)P(v) - sum_{n=0}^{k} (-1)^n P^{n+1}(u P(v) + P(u) v)
//         - (-1)^{k+1} P^{k+1}(P(u)P(v)),   k >= 0.
// The k = 0 case is the Reynolds identity rearranged.
LinComb truncated_series_residual(const LinComb& u, const LinComb& v, int k);
LinComb truncated_series_residual(const LinComb& u, const LinComb& v, int k, PCache& cache);

// u P(v) + P(u) v - P(u) P(v), the weight -1 double product.
LinComb star_product_free(const LinComb& u, const LinComb& v);
LinComb star_product_free(const LinComb& u, const LinComb& v, PCache& cache);

}  // namespace reyn
