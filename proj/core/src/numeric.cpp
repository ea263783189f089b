#include "paramp/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace paramp {

std::vector<complex> solve_dense(std::vector<complex> m, std::vector<complex> b,
                                 double rel_pivot_tol) {
    const std::size_t n = b.size();
    if (m.size() != n * n) throw std::invalid_argument("solve_dense: matrix/vector size mismatch");

    double max_norm = 0.0;
    for (const auto& v : m) max_norm = std::max(max_norm, std::abs(v));
    if (max_norm == 0.0) throw singular_matrix_error("solve_dense: zero matrix");
    const double pivot_floor = rel_pivot_tol * max_norm;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(m[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double mag = std::abs(m[r * n + col]);
            if (mag > best) { best = mag; piv = r; }
        }
        if (best < pivot_floor) {
            throw singular_matrix_error("solve_dense: pivot below threshold (singular system)");
        }
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m[col * n + c], m[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        const complex inv_p = 1.0 / m[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const complex factor = m[r * n + col] * inv_p;
            if (factor == complex{}) continue;
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= factor * m[col * n + c];
            b[r] -= factor * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        complex acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= m[i * n + c] * b[c];
        b[i] = acc / m[i * n + i];
    }
    return b;
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth >= max_depth) throw numeric_error("adaptive_simpson: max depth exceeded");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    // scale-free problems get an absolute floor so rel_tol of a zero integral converges
    const double tol = std::max(std::abs(whole) * rel_tol, 1e-300);
    if (whole == 0.0 && fa == 0.0 && fm == 0.0 && fb == 0.0) return 0.0;
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw numeric_error("bisect: endpoints do not bracket a root");
    while (hi - lo > x_tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; }
        else { hi = mid; }
    }
    return 0.5 * (lo + hi);
}

} // namespace paramp
