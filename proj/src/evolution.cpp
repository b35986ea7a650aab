#include "fch/evolution.hpp"

#include "fch/errors.hpp"
#include "fch/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fch {

SpectralField step_rk4(const SpectralField& u, double dt, const FchParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
    SpectralField k1 = rhs(u, params);
    SpectralField u2 = linear_combination({{1.0, &u}, {0.5 * dt, &k1}});
    SpectralField k2 = rhs(u2, params);
    SpectralField u3 = linear_combination({{1.0, &u}, {0.5 * dt, &k2}});
    SpectralField k3 = rhs(u3, params);
    SpectralField u4 = linear_combination({{1.0, &u}, {dt, &k3}});
    SpectralField k4 = rhs(u4, params);
    return linear_combination({{1.0, &u},
                               {dt / 6.0, &k1},
                               {dt / 3.0, &k2},
                               {dt / 3.0, &k3},
                               {dt / 6.0, &k4}});
}

namespace {

MonitorSample monitor(const SpectralField& u, double t, double s0) {
    MonitorSample s;
    s.t = t;
    s.besov_s0 = besov_norm(u, {s0, 2, 1});
    s.l2 = u.l2_norm();
    s.linf_ux = derivative(u, 1).linf_norm();
    s.mass = u.mean() * u.grid().length();
    return s;
}

} // namespace

TrajectoryRecord integrate(const SpectralField& u0, const SolverConfig& config,
                           const FchParams& params) {
    if (!(config.t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");
    if (config.monitor_stride < 1)
        throw std::invalid_argument("integrate: monitor_stride must be >= 1");
    const double s0 = critical_index(params.nu);

    double dt = config.dt;
    if (!(dt > 0.0)) {
        if (!(config.cfl_safety > 0.0) || config.cfl_safety > 1.0)
            throw std::invalid_argument("integrate: cfl_safety must lie in (0, 1]");
        dt = config.cfl_safety * u0.grid().dx() / (1.0 + u0.linf_norm());
    }
    auto n_steps = static_cast<long>(std::ceil(config.t_end / dt - 1e-9));
    n_steps = std::max<long>(n_steps, 1);

    TrajectoryRecord record;
    record.dt_used = dt;
    SpectralField u = dealias(u0);

    auto record_state = [&](double t) {
        record.times.push_back(t);
        record.snapshots.push_back(u);
        record.norms.push_back(monitor(u, t, s0));
    };
    record_state(0.0);

    double t = 0.0;
    for (long step = 1; step <= n_steps; ++step) {
        double h = std::min(dt, config.t_end - t);
        SpectralField next = step_rk4(u, h, params);
        if (!next.is_finite()) {
            record.status = RunStatus::blowup_nonfinite;
            record.blowup_time = t;
            record.blowup_step = static_cast<int>(step);
            return record;
        }
        u = std::move(next);
        t = (step == n_steps) ? config.t_end : t + h;
        record.steps_taken = static_cast<int>(step);

        double linf_ux = derivative(u, 1).linf_norm();
        if (linf_ux > config.blowup_threshold) {
            record_state(t);
            record.status = RunStatus::blowup_threshold;
            record.blowup_time = t;
            record.blowup_step = static_cast<int>(step);
            return record;
        }
        if (step % config.monitor_stride == 0 || step == n_steps) record_state(t);
    }
    return record;
}

double continuous_dependence_probe(const SpectralField& u0, double delta,
                                   const SpectralField& direction,
                                   const SolverConfig& config, const FchParams& params) {
    const double s0 = critical_index(params.nu);
    double dir_norm = besov_norm(direction, {s0 - 1.0, 2, 1});
    if (std::abs(dir_norm - 1.0) > 1e-6)
        throw std::invalid_argument(
            "continuous_dependence_probe: direction must have unit B^{s0-1}_{2,1} norm");

    TrajectoryRecord base = integrate(u0, config, params);
    if (base.status != RunStatus::completed)
        throw NumericalFailure("continuous_dependence_probe: base run blew up");
    if (delta == 0.0) return 0.0;

    SpectralField perturbed0 = linear_combination({{1.0, &u0}, {delta, &direction}});
    TrajectoryRecord pert = integrate(perturbed0, config, params);
    if (pert.status != RunStatus::completed)
        throw NumericalFailure("continuous_dependence_probe: perturbed run blew up");

    double sup = 0.0;
    for (std::size_t i = 0; i < base.snapshots.size(); ++i) {
        SpectralField diff = pert.snapshots[i] - base.snapshots[i];
        sup = std::max(sup, besov_norm(diff, {s0 - 1.0, 2, kInf}));
    }
    return sup / std::abs(delta);
}

} // namespace fch
