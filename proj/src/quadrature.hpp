#pragma once

#include <functional>
#include <vector>

#include "common.hpp"

namespace becrad::quad {

struct Result {
    Complex value{0.0, 0.0};
    double error = 0.0;     // sum of per-panel Kronrod-Gauss differences
    std::size_t panels = 0;
};

// 15-point Gauss-Kronrod rule on [a, b]; error = |K15 - G7|.
Result gk15(const std::function<Complex(double)>& f, double a, double b);

// Globally adaptive GK15 with oscillation-aware seeding: initial panels are
// sized ~ one period of the local phase rate (rad/time) reported by `rate`,
// then the worst panel is bisected until the error sum falls under tol_abs.
// Deterministic: final sum runs over panels sorted by position.
// Throws Status::numerical_failure when the panel budget is exhausted.
Result adaptive(const std::function<Complex(double)>& f, double a, double b, double tol_abs,
                const std::function<double(double)>& rate, std::size_t max_panels = 200000);

// Constant-rate convenience.
inline Result adaptive(const std::function<Complex(double)>& f, double a, double b,
                       double tol_abs, double rate, std::size_t max_panels = 200000) {
    return adaptive(f, a, b, tol_abs, [rate](double) { return rate; }, max_panels);
}

struct Extrapolated {
    Complex value{0.0, 0.0};
    double error = 0.0;  // |order p - order p-1| difference
};

// Polynomial (iterated-linear / Neville) extrapolation of values(eps) to eps = 0,
// using the last `order`+1 points of the ladder (eps must be positive; any order).
Extrapolated neville_at_zero(const std::vector<double>& eps, const std::vector<Complex>& values,
                             int order);

// Gauss-Legendre nodes/weights on [-1, 1], deterministic Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace becrad::quad
