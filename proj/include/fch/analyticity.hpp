#ifndef FCH_ANALYTICITY_HPP
#define FCH_ANALYTICITY_HPP

#include "fch/evolution.hpp"
#include "fch/spectral.hpp"

#include <optional>
#include <vector>

namespace fch {

/** Least-squares fit of log|u_hat(k)| = log A - sigma k over the modes above
 *  the round-off floor. A positive sigma is the numerical signature of a
 *  strip of analyticity of half-width sigma. `valid` requires at least 8
 *  usable modes and an RMS log-residual below 0.1. */
struct DecayFit {
    double amplitude = 0.0; // A
    double sigma = 0.0;
    double k_lo = 0.0, k_hi = 0.0; // fit window
    int modes_used = 0;
    double residual = 0.0; // RMS residual in log space
    bool valid = false;
};

DecayFit fourier_decay_fit(const SpectralField& u, double floor_rel = 1e-13);

struct EsSample {
    double t;
    double value;
    int argmax_k;
    bool converged;
};

/** Truncated analytic-scale norms along a recorded trajectory. */
std::vector<EsSample> es_trajectory(const TrajectoryRecord& record, double s, int kmax,
                                    double nu);

/** |||uv|||_s / (|||u|||_s |||v|||_s) with truncated norms. Both inputs must
 *  be analytic-grade: either a successful decay fit or a trigonometric
 *  polynomial (fewer than 8 active modes). Returns nullopt otherwise. */
std::optional<double> algebra_probe(const SpectralField& u, const SpectralField& v,
                                    double s, int kmax, double nu);

} // namespace fch

#endif
