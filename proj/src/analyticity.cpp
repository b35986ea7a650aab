#include "fch/analyticity.hpp"

#include "fch/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fch {

DecayFit fourier_decay_fit(const SpectralField& u, double floor_rel) {
    const Grid& grid = u.grid();
    const auto& c = u.coefficients();

    double amax = 0.0;
    for (const auto& cm : c) amax = std::max(amax, std::abs(cm));

    DecayFit fit;
    if (amax == 0.0) return fit;
    const double floor = floor_rel * amax;

    std::vector<double> ks, logs;
    for (std::size_t m = 0; m <= grid.cutoff(); ++m) {
        double a = std::abs(c[m]);
        if (a <= floor) continue;
        ks.push_back(grid.wavenumber(m));
        logs.push_back(std::log(a));
    }
    fit.modes_used = static_cast<int>(ks.size());
    if (fit.modes_used < 8) return fit;

    double n = static_cast<double>(ks.size());
    double sk = 0.0, sl = 0.0, skk = 0.0, skl = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        sk += ks[i];
        sl += logs[i];
        skk += ks[i] * ks[i];
        skl += ks[i] * logs[i];
    }
    double denom = n * skk - sk * sk;
    if (denom <= 0.0) return fit;
    double slope = (n * skl - sk * sl) / denom;
    double intercept = (sl - slope * sk) / n;

    double ss = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        double r = logs[i] - (intercept + slope * ks[i]);
        ss += r * r;
    }
    fit.sigma = -slope;
    fit.amplitude = std::exp(intercept);
    fit.k_lo = ks.front();
    fit.k_hi = ks.back();
    fit.residual = std::sqrt(ss / n);
    fit.valid = fit.residual < 0.1;
    return fit;
}

std::vector<EsSample> es_trajectory(const TrajectoryRecord& record, double s, int kmax,
                                    double nu) {
    std::vector<EsSample> out;
    out.reserve(record.snapshots.size());
    for (std::size_t i = 0; i < record.snapshots.size(); ++i) {
        EsNorm norm = es_norm_truncated(record.snapshots[i], s, kmax, nu);
        out.push_back({record.times[i], norm.value, norm.argmax_k, norm.converged});
    }
    return out;
}

namespace {

// Trigonometric polynomials are entire; anything else must pass the fit.
bool analytic_grade(const SpectralField& u) {
    DecayFit fit = fourier_decay_fit(u);
    if (fit.valid) return true;
    return fit.modes_used >= 1 && fit.modes_used < 8;
}

} // namespace

std::optional<double> algebra_probe(const SpectralField& u, const SpectralField& v,
                                    double s, int kmax, double nu) {
    if (!analytic_grade(u) || !analytic_grade(v)) return std::nullopt;
    double nu_u = es_norm_truncated(u, s, kmax, nu).value;
    double nu_v = es_norm_truncated(v, s, kmax, nu).value;
    if (nu_u == 0.0 || nu_v == 0.0) return std::nullopt;
    double nuv = es_norm_truncated(pointwise_product(u, v), s, kmax, nu).value;
    return nuv / (nu_u * nu_v);
}

} // namespace fch
