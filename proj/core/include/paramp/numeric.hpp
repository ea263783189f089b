#pragma once

#include "paramp/constants.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace paramp {

/// Thrown when a linear system is singular to working precision
/// (parametric-oscillation threshold in the coupled-mode engine).
struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solve M x = b in place by Gaussian elimination with partial pivoting.
/// M is row-major n x n. Pivots smaller than rel_pivot_tol * max|M| raise
/// singular_matrix_error.
std::vector<complex> solve_dense(std::vector<complex> m, std::vector<complex> b,
                                 double rel_pivot_tol = 1e-12);

/// Adaptive Simpson quadrature of f on [a, b] to the given relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-8, int max_depth = 60);

/// Bracketing bisection: f must change sign on [lo, hi]; returns root to x_tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol);

} // namespace paramp
