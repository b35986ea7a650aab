#ifndef FCH_EVOLUTION_HPP
#define FCH_EVOLUTION_HPP

#include "fch/model.hpp"
#include "fch/spectral.hpp"

#include <vector>

namespace fch {

struct SolverConfig {
    /** Fixed time step. Non-positive requests the CFL-limited step
     *  cfl_safety * dx / (1 + |u0|_inf). */
    double dt = 1e-3;
    double t_end = 1.0;
    double cfl_safety = 0.5;
    /** Steps between recorded diagnostics. */
    int monitor_stride = 10;
    /** Run is stopped (and reported) when |u_x|_inf crosses this cap. */
    double blowup_threshold = 1e3;
};

enum class RunStatus { completed, blowup_threshold, blowup_nonfinite };

struct MonitorSample {
    double t;
    double besov_s0; // B^{s0(nu)}_{2,1}
    double l2;
    double linf_ux;
    double mass; // int u dx
};

/** Monitor-time history of one run. On blow-up, `times`/`snapshots` end at
 *  the last valid state and `blowup_time`/`blowup_step` identify the
 *  crossing. The threshold report is a diagnostic, not a certification of
 *  actual blow-up. */
struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<SpectralField> snapshots;
    std::vector<MonitorSample> norms;
    RunStatus status = RunStatus::completed;
    double blowup_time = 0.0;
    int blowup_step = -1;
    double dt_used = 0.0;
    int steps_taken = 0;
};

/** One classical Runge-Kutta step of the semidiscrete evolution. */
SpectralField step_rk4(const SpectralField& u, double dt, const FchParams& params);

/** Advances u0 to t_end (or to a blow-up signal), recording diagnostics
 *  every monitor_stride steps. Single-threaded and bit-deterministic. */
TrajectoryRecord integrate(const SpectralField& u0, const SolverConfig& config,
                           const FchParams& params);

/** Linear-response probe: integrates u0 and u0 + delta*direction and returns
 *    sup over monitor times of |difference|_{B^{s0-1}_{2,inf}} / delta.
 *  Requires |direction|_{B^{s0-1}_{2,1}} = 1. Throws NumericalFailure when
 *  either run blows up; returns 0 for the delta = 0 edge. */
double continuous_dependence_probe(const SpectralField& u0, double delta,
                                   const SpectralField& direction,
                                   const SolverConfig& config, const FchParams& params);

} // namespace fch

#endif
