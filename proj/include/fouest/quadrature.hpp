#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace fouest {

/// Thrown when an integration routine cannot reach the requested tolerance
/// within its evaluation budget; carries the error estimate it did achieve.
class ToleranceError : public std::runtime_error {
public:
    ToleranceError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

struct QuadResult {
    double value;
    double error;  ///< absolute error estimate
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a, b] to absolute tolerance abs_tol.
/// Throws ToleranceError when the panel budget is exhausted first.
QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_panels = 4000);

/// Integral of x^alpha * g(x) over [0, a] with alpha > -1. The substitution
/// u = x^{1+alpha}/(1+alpha) removes the endpoint power exactly; the smooth
/// remainder goes through adaptive_gauss_kronrod.
QuadResult power_endpoint_integral(double alpha, const std::function<double(double)>& g, double a,
                                   double abs_tol);

/// Integral of w(x) * cos(t x) over [c, inf) for t > 0, with w smooth, positive and
/// eventually decreasing on [c, inf). Half-period Gauss-Legendre panels between
/// consecutive cosine zeros form an alternating series; the partial sums are
/// accelerated with Wynn's epsilon algorithm.
QuadResult oscillatory_cosine_tail(const std::function<double(double)>& w, double c, double t,
                                   double abs_tol);

}  // namespace fouest
