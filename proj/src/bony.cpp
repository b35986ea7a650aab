#include "fch/bony.hpp"

#include "fch/littlewood_paley.hpp"
#include "fch/random_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fch {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(op) + ": fields live on different grids");
}

SpectralField accumulate(GridPtr grid, std::vector<SpectralField> terms) {
    if (terms.empty()) return SpectralField::zero(std::move(grid));
    std::vector<std::pair<double, const SpectralField*>> refs;
    refs.reserve(terms.size());
    for (const auto& t : terms) refs.emplace_back(1.0, &t);
    return linear_combination(refs);
}

} // namespace

SpectralField paraproduct(const SpectralField& u, const SpectralField& v) {
    require_same_grid(u, v, "paraproduct");
    const int qmax = dyadic_system(u.grid()).qmax();
    std::vector<SpectralField> terms;
    for (int j = 1; j <= qmax; ++j)
        terms.push_back(pointwise_product(low_cutoff(u, j - 1), dyadic_block(v, j)));
    return accumulate(u.grid_ptr(), std::move(terms));
}

SpectralField bony_remainder(const SpectralField& u, const SpectralField& v) {
    require_same_grid(u, v, "bony_remainder");
    const int qmax = dyadic_system(u.grid()).qmax();
    std::vector<SpectralField> terms;
    for (int j = -1; j <= qmax; ++j) {
        SpectralField bv = dyadic_block(v, j);
        for (int k = std::max(-1, j - 1); k <= j + 1; ++k) {
            if (k > qmax) continue;
            terms.push_back(pointwise_product(dyadic_block(u, k), bv));
        }
    }
    return accumulate(u.grid_ptr(), std::move(terms));
}

SpectralField paraproduct_prime(const SpectralField& v, const SpectralField& u) {
    require_same_grid(u, v, "paraproduct_prime");
    const int qmax = dyadic_system(u.grid()).qmax();
    std::vector<SpectralField> terms;
    for (int j = -1; j <= qmax; ++j)
        terms.push_back(pointwise_product(low_cutoff(v, j + 2), dyadic_block(u, j)));
    return accumulate(u.grid_ptr(), std::move(terms));
}

BonyParts bony_decompose(const SpectralField& u, const SpectralField& v) {
    BonyParts parts{paraproduct(u, v), paraproduct(v, u), bony_remainder(u, v),
                    paraproduct_prime(v, u)};
    return parts;
}

SpectralField commutator(const SpectralField& f, const SpectralField& g, double nu) {
    require_same_grid(f, g, "commutator");
    SpectralField lg = fractional_laplacian(g, nu);
    return pointwise_product(f, lg) - fractional_laplacian(pointwise_product(f, g), nu);
}

CommutatorSplit commutator_split(const SpectralField& f, const SpectralField& g, double nu) {
    require_same_grid(f, g, "commutator_split");
    SpectralField lg = fractional_laplacian(g, nu);

    // [T_f, Lambda] g
    SpectralField tf_comm =
        paraproduct(f, lg) - fractional_laplacian(paraproduct(f, g), nu);
    SpectralField t_lg_f = paraproduct(lg, f);
    SpectralField l_tp = fractional_laplacian(paraproduct_prime(g, f), nu);

    CommutatorSplit split{
        linear_combination({{1.0, &tf_comm}, {1.0, &t_lg_f}, {-1.0, &l_tp}}),
        bony_remainder(f, lg),
        commutator(f, g, nu),
    };
    return split;
}

CommutatorAuditSample commutator_ratios(const SpectralField& f, const SpectralField& g,
                                        double nu) {
    const double s0 = critical_index(nu);
    SpectralField comm = commutator(f, g, nu);

    double lhs_1 = besov_norm(comm, {s0 - 2.0 * nu, 2, 1});
    double lhs_23 = besov_norm(comm, {s0 - 1.0 - 2.0 * nu, 2, kInf});

    double f_s0 = besov_norm(f, {s0, 2, 1});
    double f_s0m1 = besov_norm(f, {s0 - 1.0, 2, 1});
    double g_s0m1 = besov_norm(g, {s0 - 1.0, 2, 1});
    double g_s0m2 = besov_norm(g, {s0 - 2.0, 2, 1});

    auto ratio = [](double lhs, double rhs) { return rhs > 0.0 ? lhs / rhs : 0.0; };
    return {ratio(lhs_1, f_s0 * g_s0m1), ratio(lhs_23, f_s0m1 * g_s0m1),
            ratio(lhs_23, f_s0 * g_s0m2)};
}

CommutatorAuditReport commutator_bound_audit(int ensemble_size, const GridPtr& grid,
                                             double nu, std::uint64_t seed) {
    if (ensemble_size < 1)
        throw std::invalid_argument("commutator_bound_audit: ensemble size must be >= 1");
    const double damping = critical_index(nu) + 0.5;

    CommutatorAuditReport report;
    report.samples.reserve(static_cast<std::size_t>(ensemble_size));
    for (int i = 0; i < ensemble_size; ++i) {
        auto idx = static_cast<std::uint64_t>(i);
        SpectralField f = random_field(grid, damping, ensemble_seed(seed, 2 * idx));
        SpectralField g = random_field(grid, damping, ensemble_seed(seed, 2 * idx + 1));
        report.samples.push_back(commutator_ratios(f, g, nu));
    }
    for (const auto& s : report.samples) {
        report.max_e1 = std::max(report.max_e1, s.ratio_e1);
        report.max_e2 = std::max(report.max_e2, s.ratio_e2);
        report.max_e3 = std::max(report.max_e3, s.ratio_e3);
        report.mean_e1 += s.ratio_e1;
        report.mean_e2 += s.ratio_e2;
        report.mean_e3 += s.ratio_e3;
    }
    const auto n = static_cast<double>(report.samples.size());
    report.mean_e1 /= n;
    report.mean_e2 /= n;
    report.mean_e3 /= n;
    report.empirical_c = std::max({report.max_e1, report.max_e2, report.max_e3});
    return report;
}

double product_bound_audit(int ensemble_size, const GridPtr& grid, double nu,
                           std::uint64_t seed) {
    if (ensemble_size < 1)
        throw std::invalid_argument("product_bound_audit: ensemble size must be >= 1");
    const double s0 = critical_index(nu);
    const double damping = s0 + 0.5;
    double max_ratio = 0.0;
    for (int i = 0; i < ensemble_size; ++i) {
        auto idx = static_cast<std::uint64_t>(i);
        SpectralField f = random_field(grid, damping, ensemble_seed(seed, 2 * idx));
        SpectralField g = random_field(grid, damping, ensemble_seed(seed, 2 * idx + 1));
        double rhs = besov_norm(f, {s0, 2, 1}) * besov_norm(g, {s0, 2, 1});
        if (rhs <= 0.0) continue;
        double lhs = besov_norm(pointwise_product(f, g), {s0, 2, 1});
        max_ratio = std::max(max_ratio, lhs / rhs);
    }
    return max_ratio;
}

} // namespace fch
