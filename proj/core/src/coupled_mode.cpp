#include "paramp/coupled_mode.hpp"

#include "paramp/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paramp {

ModeGraph ModeGraph::from_prototype(const ChebyshevPrototype& p, const BandSpec& band) {
    const auto rc = reduced_couplings(p, band);
    ModeGraph g;
    g.order = p.order;
    g.omega0 = band.omega0();
    g.gamma0 = rc.gamma0;
    g.chain = rc.chain;
    g.beta_p = rc.beta_p;
    return g;
}

CoupledModeMatrix build_matrix(const ModeGraph& graph, double omega) {
    const int n = graph.order;
    if (n < 1) throw std::invalid_argument("mode graph: order must be >= 1");
    if (graph.chain.size() != static_cast<std::size_t>(n) - 1) {
        throw std::invalid_argument("mode graph: chain coupling count must be order - 1");
    }
    CoupledModeMatrix mm;
    mm.order = n;
    const int dim = 2 * n;
    mm.m.assign(static_cast<std::size_t>(dim) * dim, complex{});
    auto at = [&](int r, int c) -> complex& {
        return mm.m[static_cast<std::size_t>(r) * dim + c];
    };

    // Signal modes rotate at omega; conjugate modes at the idler frequency
    // omega_i = omega_p - omega with omega_p = 2 omega0. Their diagonal holds
    // -conj(Delta(omega_i)).
    const double omega_idler = 2.0 * graph.omega0 - omega;
    const complex d_sig{(omega - graph.omega0) / graph.gamma0, 0.0};
    const complex d_idl{(omega_idler - graph.omega0) / graph.gamma0, 0.0};
    const complex half_i{0.0, 0.5};

    for (int k = 0; k < n; ++k) {
        const bool port = (k == 0);  // row 0 is mode N, the port mode
        at(k, k) = d_sig + (port ? half_i : complex{});
        at(dim - 1 - k, dim - 1 - k) = -std::conj(d_idl + (port ? half_i : complex{}));
    }
    // chain beta_{k,k+1}: row i couples mode N-i to N-i-1; chain is stored
    // beta12-first, so walk it from the far end
    for (int i = 0; i + 1 < n; ++i) {
        const double b = graph.chain[static_cast<std::size_t>(n) - 2 - i];
        at(i, i + 1) = b;
        at(i + 1, i) = b;
        at(dim - 1 - i, dim - 2 - i) = -b;
        at(dim - 2 - i, dim - 1 - i) = -b;
    }
    at(n - 1, n) = graph.beta_p;
    at(n, n - 1) = -graph.beta_p;
    return mm;
}

std::pair<complex, complex> solve_gains(const CoupledModeMatrix& m) {
    const int dim = m.dim();
    std::vector<complex> e1(static_cast<std::size_t>(dim), complex{});
    e1[0] = 1.0;
    const auto col = solve_dense(m.m, std::move(e1));  // first column of M^-1
    const complex i_unit{0.0, 1.0};
    return {i_unit * col[0] - 1.0, i_unit * col[static_cast<std::size_t>(dim) - 1]};
}

GainTrace sweep(const ModeGraph& graph, double f_start_hz, double f_stop_hz, int n_points) {
    if (!(f_start_hz < f_stop_hz)) throw std::invalid_argument("sweep: f_start must be < f_stop");
    if (n_points < 2) throw std::invalid_argument("sweep: need at least 2 points");
    GainTrace trace;
    trace.frequency_hz.reserve(n_points);
    trace.sqrt_gs.reserve(n_points);
    trace.sqrt_gi.reserve(n_points);
    const double step = (f_stop_hz - f_start_hz) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = f_start_hz + step * i;
        try {
            auto [gs, gi] = solve_gains(build_matrix(graph, 2.0 * constants::pi * f));
            trace.frequency_hz.push_back(f);
            trace.sqrt_gs.push_back(gs);
            trace.sqrt_gi.push_back(gi);
        } catch (const singular_matrix_error&) {
            throw singular_matrix_error("parametric oscillation threshold at " +
                                        std::to_string(f) + " Hz");
        }
    }
    return trace;
}

BandMetrics band_metrics(const GainTrace& trace, double design_gain_db) {
    const std::size_t n = trace.frequency_hz.size();
    if (n == 0) throw std::invalid_argument("band_metrics: empty trace");
    std::vector<double> gdb(n);
    for (std::size_t i = 0; i < n; ++i) gdb[i] = trace.gain_db(i);

    std::size_t peak = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (gdb[i] > gdb[peak]) peak = i;
    }
    if (gdb[peak] < design_gain_db - 3.0) {
        throw std::runtime_error("band_metrics: no point reaches design gain - 3 dB");
    }
    auto contiguous = [&](double floor) {
        std::size_t lo = peak, hi = peak;
        while (lo > 0 && gdb[lo - 1] >= floor) --lo;
        while (hi + 1 < n && gdb[hi + 1] >= floor) ++hi;
        return std::pair{lo, hi};
    };
    const auto [lo3, hi3] = contiguous(design_gain_db - 3.0);
    const auto [lo1, hi1] = contiguous(design_gain_db - 1.0);

    BandMetrics bm;
    bm.bandwidth_hz = trace.frequency_hz[hi3] - trace.frequency_hz[lo3];
    bm.center_hz = 0.5 * (trace.frequency_hz[hi3] + trace.frequency_hz[lo3]);
    double gmin = gdb[lo1], gmax = gdb[lo1];
    for (std::size_t i = lo1; i <= hi1; ++i) {
        gmin = std::min(gmin, gdb[i]);
        gmax = std::max(gmax, gdb[i]);
    }
    bm.ripple_db = gmax - gmin;
    return bm;
}

} // namespace paramp
