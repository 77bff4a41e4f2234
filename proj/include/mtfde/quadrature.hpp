#pragma once

#include <vector>

namespace mtfde::quadrature {

struct Rule {
    std::vector<double> x;  // nodes
    std::vector<double> w;  // weights
};

// n-point Gauss-Legendre rule on [0,1].
Rule gauss_legendre(int n);

// n-point Gauss-Jacobi rule on [0,1] for the weight x^b (1-x)^a, a,b > -1.
// gauss_jacobi(n, 0, 0) coincides with gauss_legendre(n).
Rule gauss_jacobi(int n, double a, double b);

// Rule mapped onto [lo, hi]; weights include the Jacobian of the affine map
// and, for Jacobi rules, the scaling of the weight function arguments
// ((x-lo)/(hi-lo))^b ((hi-x)/(hi-lo))^a is what the rule absorbs.
Rule map_to(const Rule& r, double lo, double hi);

}  // namespace mtfde::quadrature
