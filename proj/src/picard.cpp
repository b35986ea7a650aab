#include "fch/picard.hpp"

#include "fch/bony.hpp"
#include "fch/errors.hpp"
#include "fch/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fch {

LifespanEstimate lifespan(const SpectralField& u0, double c_hat, double nu) {
    if (!(c_hat > 0.0)) throw std::invalid_argument("lifespan: c_hat must be positive");
    LifespanEstimate est;
    est.c_hat = c_hat;
    est.u0_norm = besov_norm(u0, {critical_index(nu), 2, 1});
    est.T = 1.0 / c_hat;
    if (est.u0_norm > 0.0) est.T = std::min(est.T, 1.0 / (8.0 * c_hat * est.u0_norm));
    return est;
}

namespace {

// Linear interpolation of a trajectory sampled at t_i = i * dt_grid.
class TrajectoryInterpolant {
  public:
    TrajectoryInterpolant(const std::vector<SpectralField>& samples, double t_end)
        : samples_(samples),
          dt_((samples.size() > 1) ? t_end / static_cast<double>(samples.size() - 1) : t_end) {}

    SpectralField at(double t) const {
        const auto last = samples_.size() - 1;
        double pos = t / dt_;
        auto i = static_cast<std::size_t>(std::floor(pos));
        if (i >= last) return samples_[last];
        double theta = pos - static_cast<double>(i);
        if (theta == 0.0) return samples_[i];
        return linear_combination({{1.0 - theta, &samples_[i]}, {theta, &samples_[i + 1]}});
    }

  private:
    const std::vector<SpectralField>& samples_;
    double dt_;
};

SpectralField transport_rhs(const SpectralField& f, const SpectralField& v,
                            const SpectralField& src) {
    SpectralField fx = derivative(f, 1);
    SpectralField vfx = pointwise_product(v, fx);
    return linear_combination({{1.0, &src}, {-1.0, &fx}, {-1.0, &vfx}});
}

} // namespace

std::vector<SpectralField> transport_solve(const std::vector<SpectralField>& v,
                                           const std::vector<SpectralField>& source,
                                           const SpectralField& f0, double t_end,
                                           double dt_sub) {
    if (v.size() != source.size() || v.size() < 2)
        throw std::invalid_argument("transport_solve: v and source must share a time grid");
    if (!(t_end > 0.0) || !(dt_sub > 0.0))
        throw std::invalid_argument("transport_solve: t_end and dt_sub must be positive");

    const std::size_t intervals = v.size() - 1;
    const double dt_grid = t_end / static_cast<double>(intervals);
    const int nsub = std::max(1, static_cast<int>(std::ceil(dt_grid / dt_sub - 1e-12)));
    const double h = dt_grid / nsub;

    TrajectoryInterpolant vi(v, t_end);
    TrajectoryInterpolant si(source, t_end);

    std::vector<SpectralField> out;
    out.reserve(v.size());
    out.push_back(dealias(f0));

    SpectralField f = out.front();
    for (std::size_t i = 0; i < intervals; ++i) {
        double t0 = dt_grid * static_cast<double>(i);
        for (int s = 0; s < nsub; ++s) {
            double t = t0 + h * s;
            SpectralField v1 = vi.at(t), s1 = si.at(t);
            SpectralField v2 = vi.at(t + 0.5 * h), s2 = si.at(t + 0.5 * h);
            SpectralField v3 = vi.at(t + h), s3 = si.at(t + h);

            SpectralField k1 = transport_rhs(f, v1, s1);
            SpectralField f2 = linear_combination({{1.0, &f}, {0.5 * h, &k1}});
            SpectralField k2 = transport_rhs(f2, v2, s2);
            SpectralField f3 = linear_combination({{1.0, &f}, {0.5 * h, &k2}});
            SpectralField k3 = transport_rhs(f3, v2, s2);
            SpectralField f4 = linear_combination({{1.0, &f}, {h, &k3}});
            SpectralField k4 = transport_rhs(f4, v3, s3);
            f = linear_combination({{1.0, &f},
                                    {h / 6.0, &k1},
                                    {h / 3.0, &k2},
                                    {h / 3.0, &k3},
                                    {h / 6.0, &k4}});
        }
        if (!f.is_finite())
            throw NumericalFailure("transport_solve: solution left the finite range");
        out.push_back(f);
    }
    return out;
}

IterationTrace picard_run(const SpectralField& u0, int n_max, double T,
                          const FchParams& params, int time_steps, double c_hat) {
    if (n_max < 1) throw std::invalid_argument("picard_run: n_max must be >= 1");
    if (time_steps < 1) throw std::invalid_argument("picard_run: time_steps must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("picard_run: T must be positive");
    if (params.form != Form::simplified_32)
        throw std::invalid_argument("picard_run: the iteration uses form simplified_32");
    const double nu = params.nu;
    const double s0 = critical_index(nu);
    const GridPtr grid = u0.grid_ptr();

    IterationTrace trace;
    trace.nu = nu;
    trace.c_hat = c_hat;
    trace.u0_norm = besov_norm(u0, {s0, 2, 1});
    const auto nt = static_cast<std::size_t>(time_steps);
    trace.time_grid.resize(nt + 1);
    for (std::size_t i = 0; i <= nt; ++i)
        trace.time_grid[i] = T * static_cast<double>(i) / static_cast<double>(nt);

    trace.iterates.emplace_back(nt + 1, SpectralField::zero(grid));

    for (int n = 0; n < n_max; ++n) {
        const auto& prev = trace.iterates.back();

        // Frozen sources d_x P(D) f1(u^{(n)}) + P(D) f2(u^{(n)}, u^{(n)}_x)
        // evaluated on the grid times; the transport solver interpolates.
        std::vector<SpectralField> src;
        src.reserve(nt + 1);
        double vmax = 0.0;
        for (const auto& un : prev) {
            SpectralField pf1 = derivative(smoothing_inverse(f1(un), nu, 1.0), 1);
            SpectralField pf2 =
                smoothing_inverse(f2(un, derivative(un, 1), nu), nu, 1.0);
            src.push_back(linear_combination({{-1.0, &pf1}, {-1.0, &pf2}}));
            vmax = std::max(vmax, un.linf_norm());
        }
        // Substep cap keeps RK4 inside its imaginary-axis stability window.
        double dt_stable = 2.0 / ((1.0 + vmax) * grid->max_wavenumber());
        SpectralField f0 = low_cutoff(u0, n + 1);
        trace.iterates.push_back(transport_solve(prev, src, f0, T, dt_stable));
    }

    // Difference and bound diagnostics over the shared grid.
    const BesovSpec diff_spec{s0 - 1.0, 2, kInf};
    for (int n = 0; n < n_max; ++n) {
        std::vector<double> row(nt + 1);
        for (std::size_t i = 0; i <= nt; ++i)
            row[i] = besov_norm(trace.iterates[n + 1][i] - trace.iterates[n][i], diff_spec);
        trace.sup_w1.push_back(*std::max_element(row.begin(), row.end()));
        trace.w1.push_back(std::move(row));
    }
    for (int n = 0; 2 * n <= n_max; ++n) {
        std::vector<double> row(nt + 1);
        for (std::size_t i = 0; i <= nt; ++i)
            row[i] = besov_norm(trace.iterates[2 * n][i] - trace.iterates[n][i], diff_spec);
        trace.wn.push_back(std::move(row));
    }
    const BesovSpec s0_spec{s0, 2, 1};
    for (int n = 0; n <= n_max; ++n) {
        std::vector<double> row(nt + 1);
        for (std::size_t i = 0; i <= nt; ++i) {
            double t = trace.time_grid[i];
            double bound = 2.0 * trace.u0_norm / (1.0 - 4.0 * c_hat * trace.u0_norm * t);
            row[i] = bound - besov_norm(trace.iterates[n][i], s0_spec);
        }
        trace.bound_margin.push_back(std::move(row));
    }
    return trace;
}

BoundCheckReport bound_check(const IterationTrace& trace, double c_hat, double u0_norm) {
    if (trace.time_grid.empty()) throw std::invalid_argument("bound_check: empty trace");
    double T = trace.time_grid.back();
    if (!(4.0 * c_hat * u0_norm * T < 1.0))
        throw std::invalid_argument("bound_check: horizon reaches the bound's singularity");

    const BesovSpec s0_spec{critical_index(trace.nu), 2, 1};
    BoundCheckReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        for (std::size_t i = 0; i < trace.time_grid.size(); ++i) {
            double t = trace.time_grid[i];
            double bound = 2.0 * u0_norm / (1.0 - 4.0 * c_hat * u0_norm * t);
            double norm = besov_norm(trace.iterates[n][i], s0_spec);
            report.min_margin = std::min(report.min_margin, bound - norm);
            if (norm > bound)
                report.violations.push_back({static_cast<int>(n), t, norm, bound});
        }
    }
    return report;
}

} // namespace fch
