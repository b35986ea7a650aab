#ifndef FCH_PICARD_HPP
#define FCH_PICARD_HPP

#include "fch/model.hpp"
#include "fch/spectral.hpp"

#include <vector>

namespace fch {

/** Guaranteed-existence horizon T = min(1/C, 1/(8 C |u0|_{B^{s0}_{2,1}}))
 *  evaluated with an audited empirical constant. */
struct LifespanEstimate {
    double c_hat = 0.0;
    double u0_norm = 0.0;
    double T = 0.0;
};

LifespanEstimate lifespan(const SpectralField& u0, double c_hat, double nu);

/** Solves the linear transport problem
 *      f_t + (1 + v(x,t)) f_x = F(x,t),   f(0) = f0,
 *  with v and F sampled on a uniform time grid over [0, t_end] and linearly
 *  interpolated in between. RK4 in time with spectral space derivatives;
 *  dt_sub is an upper bound on the substep (each grid interval is split
 *  evenly). Returns f on the same time grid. Linear in (f0, F) jointly.
 *  Throws NumericalFailure if the solution leaves the finite range. */
std::vector<SpectralField> transport_solve(const std::vector<SpectralField>& v,
                                           const std::vector<SpectralField>& source,
                                           const SpectralField& f0, double t_end,
                                           double dt_sub);

/** History of the frozen-coefficient iteration u^{(0)} = 0,
 *      u^{(n+1)}_t + (1 + u^{(n)}) u^{(n+1)}_x = d_x P(D) f1(u^{(n)})
 *                                                + P(D) f2(u^{(n)}, u^{(n)}_x),
 *      u^{(n+1)}(0) = S_{n+1} u0,
 *  together with the difference and uniform-bound diagnostics. */
struct IterationTrace {
    std::vector<double> time_grid;
    /** iterates[n][i] is u^{(n)} at time_grid[i], n = 0..n_max. */
    std::vector<std::vector<SpectralField>> iterates;
    /** w1[n][i] = |u^{(n+1)} - u^{(n)}|_{B^{s0-1}_{2,inf}}, n = 0..n_max-1. */
    std::vector<std::vector<double>> w1;
    /** wn[n][i] = |u^{(2n)} - u^{(n)}| in the same norm, for 2n <= n_max. */
    std::vector<std::vector<double>> wn;
    /** Slack of |u^{(n)}(t)|_{B^{s0}_{2,1}} under 2|u0|/(1 - 4 C |u0| t). */
    std::vector<std::vector<double>> bound_margin;
    double c_hat = 0.0;
    double u0_norm = 0.0;
    double nu = 0.0;
    /** sup over the time grid of w1[n]. */
    std::vector<double> sup_w1;
};

IterationTrace picard_run(const SpectralField& u0, int n_max, double T,
                          const FchParams& params, int time_steps, double c_hat);

struct BoundViolation {
    int n;
    double t;
    double norm;
    double bound;
};

struct BoundCheckReport {
    std::vector<BoundViolation> violations;
    double min_margin = 0.0;
    bool pass() const { return violations.empty(); }
};

/** Re-evaluates the induction bound over every recorded (n, t).
 *  Requires 4*c_hat*u0_norm*T < 1 (the bound's singularity). */
BoundCheckReport bound_check(const IterationTrace& trace, double c_hat, double u0_norm);

} // namespace fch

#endif
