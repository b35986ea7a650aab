#include "fch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fch {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t dealias_cutoff(std::size_t n, double fraction) {
    // Retain |m| <= fraction*N/2; the +eps keeps fraction == 1 at the Nyquist.
    double limit = fraction * static_cast<double>(n) / 2.0;
    auto cut = static_cast<std::size_t>(std::floor(limit * (1.0 + 1e-12)));
    return std::min(cut, n / 2);
}

} // namespace

Grid::Grid(double length, std::size_t size, double dealias_fraction)
    : length_(length), size_(size), dealias_fraction_(dealias_fraction),
      cutoff_(dealias_cutoff(size, dealias_fraction)),
      k0_(2.0 * std::numbers::pi / length) {}

GridPtr make_grid(double length, std::size_t size, double dealias_fraction) {
    if (!(length > 0.0))
        throw std::invalid_argument("make_grid: period must be positive");
    if (!is_power_of_two(size) || size < 16)
        throw std::invalid_argument("make_grid: resolution must be a power of two >= 16");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        throw std::invalid_argument("make_grid: dealias fraction must lie in (0, 1]");
    return std::make_shared<const Grid>(length, size, dealias_fraction);
}

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* op) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(op) + ": fields live on different grids");
}

std::vector<double> synthesize(const Grid& grid, const std::vector<std::complex<double>>& c) {
    std::vector<double> values(grid.size());
    detail::inverse_fft(grid.size(), c.data(), values.data());
    return values;
}

std::vector<std::complex<double>> analyse(const Grid& grid, const std::vector<double>& v) {
    std::vector<std::complex<double>> coeffs(grid.num_modes());
    detail::forward_fft(grid.size(), v.data(), coeffs.data());
    return coeffs;
}

// Real data keeps the zero and Nyquist coefficients real.
void enforce_real_symmetry(std::vector<std::complex<double>>& c) {
    c.front() = {c.front().real(), 0.0};
    c.back() = {c.back().real(), 0.0};
}

} // namespace

SpectralField SpectralField::zero(GridPtr grid) {
    std::vector<double> values(grid->size(), 0.0);
    std::vector<std::complex<double>> coeffs(grid->num_modes(), {0.0, 0.0});
    return SpectralField(std::move(grid), std::move(values), std::move(coeffs));
}

SpectralField SpectralField::from_values(GridPtr grid, std::vector<double> values) {
    if (values.size() != grid->size())
        throw std::invalid_argument("from_values: sample count does not match grid");
    auto coeffs = analyse(*grid, values);
    enforce_real_symmetry(coeffs);
    return SpectralField(std::move(grid), std::move(values), std::move(coeffs));
}

SpectralField SpectralField::from_coefficients(GridPtr grid,
                                               std::vector<std::complex<double>> coeffs) {
    if (coeffs.size() != grid->num_modes())
        throw std::invalid_argument("from_coefficients: mode count does not match grid");
    enforce_real_symmetry(coeffs);
    auto values = synthesize(*grid, coeffs);
    return SpectralField(std::move(grid), std::move(values), std::move(coeffs));
}

SpectralField SpectralField::sample(GridPtr grid, const std::function<double(double)>& f) {
    std::vector<double> values(grid->size());
    for (std::size_t j = 0; j < grid->size(); ++j) values[j] = f(grid->node(j));
    return from_values(std::move(grid), std::move(values));
}

double SpectralField::l2_norm() const {
    // Parseval: int |u|^2 dx = L * sum over the full lattice of |c_m|^2.
    double sum = std::norm(coeffs_.front()) + std::norm(coeffs_.back());
    for (std::size_t m = 1; m + 1 < coeffs_.size(); ++m) sum += 2.0 * std::norm(coeffs_[m]);
    return std::sqrt(grid_->length() * sum);
}

double SpectralField::linf_norm() const {
    double mx = 0.0;
    for (double v : values_) mx = std::max(mx, std::abs(v));
    return mx;
}

double SpectralField::mean() const { return coeffs_.front().real(); }

bool SpectralField::is_finite() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

SpectralField apply(const MultiplierOp& op, const SpectralField& u) {
    if (!op.symbol || !std::isfinite(op.symbol(0.0)))
        throw std::invalid_argument("apply: multiplier symbol must be finite at 0");
    const Grid& g = u.grid();
    std::vector<std::complex<double>> c = u.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) c[m] *= op.symbol(g.wavenumber(m));
    return SpectralField::from_coefficients(u.grid_ptr(), std::move(c));
}

SpectralField fractional_laplacian(const SpectralField& u, double nu) {
    if (nu < 1.0)
        throw std::invalid_argument("fractional_laplacian: requires nu >= 1");
    const double p = 2.0 * nu;
    return apply({[p](double k) { return std::pow(k, p); }, "|k|^(2nu)"}, u);
}

SpectralField smoothing_inverse(const SpectralField& u, double nu, double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("smoothing_inverse: weight a must be positive");
    if (!(nu > 0.0))
        throw std::invalid_argument("smoothing_inverse: requires nu > 0");
    const double p = 2.0 * nu;
    return apply({[p, a](double k) { return 1.0 / (1.0 + a * std::pow(k, p)); },
                  "(1 + a|k|^(2nu))^-1"},
                 u);
}

SpectralField derivative(const SpectralField& u, int order) {
    if (order < 1) throw std::invalid_argument("derivative: order must be >= 1");
    const Grid& g = u.grid();
    std::vector<std::complex<double>> c = u.coefficients();
    for (std::size_t m = 0; m < c.size(); ++m) {
        std::complex<double> ik(0.0, g.wavenumber(m));
        std::complex<double> factor = 1.0;
        for (int d = 0; d < order; ++d) factor *= ik;
        c[m] *= factor;
    }
    if (order % 2 == 1) c.back() = 0.0;
    return SpectralField::from_coefficients(u.grid_ptr(), std::move(c));
}

SpectralField dealias(const SpectralField& u) {
    const Grid& g = u.grid();
    if (g.cutoff() == g.size() / 2) return u;
    std::vector<std::complex<double>> c = u.coefficients();
    for (std::size_t m = g.cutoff() + 1; m < c.size(); ++m) c[m] = 0.0;
    return SpectralField::from_coefficients(u.grid_ptr(), std::move(c));
}

SpectralField pointwise_product(const SpectralField& u, const SpectralField& v) {
    require_same_grid(u, v, "pointwise_product");
    const Grid& g = u.grid();
    const std::size_t n = g.size();
    const std::size_t nf = 2 * n;
    const std::size_t nyq = n / 2;

    // Pad to the doubled grid. The coarse Nyquist coefficient represents
    // cos-content that splits evenly across +-N/2 on the fine lattice.
    auto pad = [&](const std::vector<std::complex<double>>& c) {
        std::vector<std::complex<double>> fine(nf / 2 + 1, {0.0, 0.0});
        for (std::size_t m = 0; m < nyq; ++m) fine[m] = c[m];
        fine[nyq] = 0.5 * c[nyq];
        return fine;
    };
    std::vector<double> wu(nf), wv(nf);
    {
        auto cu = pad(u.coefficients());
        auto cv = pad(v.coefficients());
        detail::inverse_fft(nf, cu.data(), wu.data());
        detail::inverse_fft(nf, cv.data(), wv.data());
    }
    for (std::size_t j = 0; j < nf; ++j) wu[j] *= wv[j];

    std::vector<std::complex<double>> fine(nf / 2 + 1);
    detail::forward_fft(nf, wu.data(), fine.data());

    std::vector<std::complex<double>> c(g.num_modes(), {0.0, 0.0});
    for (std::size_t m = 0; m <= g.cutoff(); ++m) c[m] = fine[m];
    if (g.cutoff() == nyq) c[nyq] = 2.0 * fine[nyq].real();
    return SpectralField::from_coefficients(u.grid_ptr(), std::move(c));
}

SpectralField linear_combination(
    const std::vector<std::pair<double, const SpectralField*>>& terms) {
    if (terms.empty())
        throw std::invalid_argument("linear_combination: needs at least one term");
    const SpectralField& first = *terms.front().second;
    for (const auto& [c, f] : terms) require_same_grid(first, *f, "linear_combination");

    std::vector<std::complex<double>> coeffs(first.grid().num_modes(), {0.0, 0.0});
    for (const auto& [c, f] : terms) {
        const auto& fc = f->coefficients();
        for (std::size_t m = 0; m < coeffs.size(); ++m) coeffs[m] += c * fc[m];
    }
    return SpectralField::from_coefficients(first.grid_ptr(), std::move(coeffs));
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    return linear_combination({{1.0, &a}, {1.0, &b}});
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    return linear_combination({{1.0, &a}, {-1.0, &b}});
}

SpectralField operator*(double c, const SpectralField& a) {
    return linear_combination({{c, &a}});
}

} // namespace fch
