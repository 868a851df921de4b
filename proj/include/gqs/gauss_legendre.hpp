#pragma once

#include <vector>

namespace gqs {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

// Same rule mapped to [0, 1].
GaussLegendreRule gauss_legendre_unit(int n);

}  // namespace gqs
