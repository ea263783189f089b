#include "paramp/prototype.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace paramp {

ChebyshevPrototype paper_prototype() {
    return ChebyshevPrototype{3, {1.0, 0.5899, 0.6681, 0.3753, 0.9045}, 20.0, 0.5};
}

const ChebyshevPrototype& validate_prototype(const ChebyshevPrototype& p) {
    if (p.order < 1) throw std::invalid_argument("prototype: order must be >= 1");
    if (p.g.size() != static_cast<std::size_t>(p.order) + 2) {
        throw std::invalid_argument("prototype: expected " + std::to_string(p.order + 2) +
                                    " coefficients, got " + std::to_string(p.g.size()));
    }
    for (std::size_t i = 0; i < p.g.size(); ++i) {
        if (!(p.g[i] > 0.0)) {
            throw std::invalid_argument("prototype: non-positive coefficient g" + std::to_string(i));
        }
    }
    return p;
}

ReducedCouplings reduced_couplings(const ChebyshevPrototype& p, const BandSpec& band) {
    validate_prototype(p);
    if (!(band.f0_hz > 0.0)) throw std::invalid_argument("band: f0 must be positive");
    if (!(band.fractional_bandwidth > 0.0 && band.fractional_bandwidth < 1.0)) {
        throw std::invalid_argument("band: fractional bandwidth must be in (0, 1)");
    }
    const int n = p.order;
    const double dw = band.delta_omega();

    ReducedCouplings rc;
    rc.gamma0 = dw / (p.g[n] * p.g[n + 1]);
    rc.chain.resize(n - 1);
    for (int k = 1; k < n; ++k) {
        rc.chain[k - 1] = dw / (2.0 * rc.gamma0 * std::sqrt(p.g[k] * p.g[k + 1]));
    }
    rc.beta_p = 0.5 * p.g[n] * p.g[n + 1] / (p.g[0] * p.g[1]);
    if (n >= 2) rc.beta12 = rc.chain[0];
    if (n >= 3) rc.beta23 = rc.chain[1];
    if (!(rc.beta_p < 0.5)) {
        throw std::invalid_argument("couplings: beta_p >= 0.5 (above single-pole oscillation threshold)");
    }
    return rc;
}

JpaValue jpa_value(const ChebyshevPrototype& p, double w, double z1) {
    validate_prototype(p);
    if (!(z1 > 0.0)) throw std::invalid_argument("jpa_value: Z1 must be positive");
    const int n = p.order;
    const double g_last = p.g[n + 1];
    const double exponent = (n % 2 == 0) ? 1.0 : -1.0;
    JpaValue out;
    out.prototype_form =
        w / (z1 * p.g[1] * std::sqrt(p.g[0])) * std::sqrt(std::pow(g_last, exponent));
    out.gain_form =
        jpa_value_for_gain(w, z1, p.g[1], std::pow(10.0, p.design_gain_db / 10.0));
    return out;
}

double jpa_value_for_gain(double w, double z1, double g1, double power_gain) {
    if (!(power_gain > 1.0)) {
        throw std::invalid_argument("jpa_value: gain form requires G > 1");
    }
    const double s = std::sqrt(power_gain) + std::sqrt(power_gain - 1.0);
    return w / (z1 * g1) * std::sqrt((s + 1.0) / (s - 1.0));
}

} // namespace paramp
