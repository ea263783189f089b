#pragma once

#include "paramp/prototype.hpp"

#include <vector>

namespace paramp {

/// Chain of N co-rotating modes plus their conjugates, parametrically pumped
/// at omega_p = 2 omega0 on mode 1.
struct ModeGraph {
    int order = 0;                // N
    double omega0 = 0.0;          // rad/s, all resonant modes
    double gamma0 = 0.0;          // rad/s, port decay rate
    std::vector<double> chain;    // beta_{k,k+1}, beta12 first (empty for N = 1)
    double beta_p = 0.0;

    static ModeGraph from_prototype(const ChebyshevPrototype& p, const BandSpec& band);
};

/// 2N x 2N equations-of-motion matrix in the basis (N, ..., 1, 1*, ..., N*).
struct CoupledModeMatrix {
    int order = 0;
    std::vector<complex> m;  // row-major, dimension 2N

    int dim() const { return 2 * order; }
    complex at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim() + c]; }
};

struct GainTrace {
    std::vector<double> frequency_hz;
    std::vector<complex> sqrt_gs;  // signal amplitude gain
    std::vector<complex> sqrt_gi;  // idler transgain

    double gain_db(std::size_t i) const { return amp_to_db(sqrt_gs[i]); }
};

struct BandMetrics {
    double center_hz = 0.0;
    double bandwidth_hz = 0.0;
    double ripple_db = 0.0;
};

/// Assemble the matrix at signal frequency omega. Conjugate-mode detunings are
/// evaluated at the idler frequency 2*omega0 - omega.
CoupledModeMatrix build_matrix(const ModeGraph& graph, double omega);

/// sqrt(Gs) = i [M^-1]_{1,1} - 1 and sqrt(Gi) = i [M^-1]_{2N,1}.
/// Throws singular_matrix_error at the parametric-oscillation threshold.
std::pair<complex, complex> solve_gains(const CoupledModeMatrix& m);

GainTrace sweep(const ModeGraph& graph, double f_start_hz, double f_stop_hz, int n_points);

/// Band = widest contiguous interval around the trace peak with gain >=
/// design - 3 dB; ripple measured on the contiguous >= design - 1 dB interval.
BandMetrics band_metrics(const GainTrace& trace, double design_gain_db);

} // namespace paramp
