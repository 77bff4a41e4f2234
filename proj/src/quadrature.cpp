#include "mtfde/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>

#include "mtfde/errors.hpp"
#include "mtfde/specfun.hpp"

namespace mtfde::quadrature {

namespace {

// Golub-Welsch from the Jacobi-polynomial three-term recurrence.
Rule jacobi_rule(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_jacobi: n >= 1 required");
    if (a <= -1.0 || b <= -1.0) throw DomainError("gauss_jacobi: weight exponents must be > -1");
    Eigen::VectorXd diag(n), sub(std::max(0, n - 1));
    const double ab = a + b;
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            diag[0] = (b - a) / (ab + 2.0);
        else {
            const double d = (2.0 * i + ab) * (2.0 * i + ab + 2.0);
            diag[i] = (b * b - a * a) / d;
        }
    }
    for (int i = 1; i < n; ++i) {
        double num, den;
        if (i == 1) {  // cancelled form, regular at a+b = -1
            num = 4.0 * (1.0 + a) * (1.0 + b);
            den = (2.0 + ab) * (2.0 + ab) * (3.0 + ab);
        } else {
            num = 4.0 * i * (i + a) * (i + b) * (i + ab);
            den = (2.0 * i + ab) * (2.0 * i + ab) * (2.0 * i + ab + 1.0) * (2.0 * i + ab - 1.0);
        }
        sub[i - 1] = std::sqrt(num / den);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("gauss_jacobi: tridiagonal eigensolver failed");
    // mu0 = int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    const double mu0 =
        std::pow(2.0, ab + 1.0) * specfun::gamma_fn(a + 1.0) * specfun::gamma_fn(b + 1.0) /
        specfun::gamma_fn(ab + 2.0);
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        r.x[i] = 0.5 * (es.eigenvalues()[i] + 1.0);  // map [-1,1] -> [0,1]
        const double v = es.eigenvectors()(0, i);
        // absorb the affine rescaling of the weight x^b (1-x)^a onto [0,1]
        r.w[i] = mu0 * v * v / std::pow(2.0, ab + 1.0);
    }
    return r;
}

}  // namespace

Rule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

Rule gauss_jacobi(int n, double a, double b) {
    static std::mutex mtx;
    static std::map<std::tuple<int, double, double>, Rule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, jacobi_rule(n, a, b)).first;
    return it->second;
}

Rule map_to(const Rule& r, double lo, double hi) {
    Rule m;
    m.x.resize(r.x.size());
    m.w.resize(r.w.size());
    const double len = hi - lo;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        m.x[i] = lo + len * r.x[i];
        m.w[i] = len * r.w[i];
    }
    return m;
}

}  // namespace mtfde::quadrature
