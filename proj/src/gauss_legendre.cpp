#include "gqs/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gqs {

// Newton iteration on the Legendre polynomial P_n, seeded with the Chebyshev
// approximation of the k-th root; weights w = 2 / ((1 - x^2) P_n'(x)^2).
GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[k] = -x;
        rule.nodes[n - 1 - k] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[k] = w;
        rule.weights[n - 1 - k] = w;
    }
    return rule;
}

GaussLegendreRule gauss_legendre_unit(int n) {
    GaussLegendreRule rule = gauss_legendre(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = 0.5 * (rule.nodes[k] + 1.0);
        rule.weights[k] *= 0.5;
    }
    return rule;
}

}  // namespace gqs
