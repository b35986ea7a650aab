#ifndef FCH_SPECTRAL_HPP
#define FCH_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fch {

/** Uniform periodic grid of period L with N nodes x_j = j L / N.
 *
 *  Fourier modes live on the lattice k_m = 2*pi*m/L. Real data is stored
 *  in half-spectrum form (m = 0..N/2); negative modes are implied by
 *  conjugate symmetry. Modes with |m| > dealias_fraction*N/2 are dropped
 *  after every nonlinear operation (2/3 rule by default, sized for a
 *  quadratic nonlinearity). */
class Grid {
  public:
    Grid(double length, std::size_t size, double dealias_fraction = 2.0 / 3.0);

    double length() const { return length_; }
    std::size_t size() const { return size_; }
    double dealias_fraction() const { return dealias_fraction_; }

    /** Number of stored half-spectrum coefficients, N/2 + 1. */
    std::size_t num_modes() const { return size_ / 2 + 1; }
    /** Largest retained mode index under the dealias rule. */
    std::size_t cutoff() const { return cutoff_; }

    double dx() const { return length_ / static_cast<double>(size_); }
    double node(std::size_t j) const { return dx() * static_cast<double>(j); }
    /** Physical wavenumber of mode m, valid for m = 0..N/2. */
    double wavenumber(std::size_t m) const { return k0_ * static_cast<double>(m); }
    /** Largest retained physical wavenumber. */
    double max_wavenumber() const { return wavenumber(cutoff_); }

    bool operator==(const Grid& other) const {
        return length_ == other.length_ && size_ == other.size_ &&
               dealias_fraction_ == other.dealias_fraction_;
    }

  private:
    double length_;
    std::size_t size_;
    double dealias_fraction_;
    std::size_t cutoff_;
    double k0_;
};

using GridPtr = std::shared_ptr<const Grid>;

/** Validates and builds a grid. N must be a power of two >= 16, L > 0. */
GridPtr make_grid(double length, std::size_t size, double dealias_fraction = 2.0 / 3.0);

/** A real periodic function carried simultaneously as grid samples and
 *  half-spectrum Fourier coefficients, consistent under the DFT.
 *  Immutable after construction; all operations return new fields. */
class SpectralField {
  public:
    static SpectralField zero(GridPtr grid);
    static SpectralField from_values(GridPtr grid, std::vector<double> values);
    static SpectralField from_coefficients(GridPtr grid,
                                           std::vector<std::complex<double>> coeffs);
    /** Samples f at the grid nodes. The result is not dealiased. */
    static SpectralField sample(GridPtr grid, const std::function<double(double)>& f);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }

    /** L2 norm sqrt(int |u|^2 dx) via the coefficient-space Parseval sum. */
    double l2_norm() const;
    double linf_norm() const;
    /** Mean value of u, i.e. the zero-mode coefficient. */
    double mean() const;
    bool is_finite() const;

  private:
    SpectralField(GridPtr grid, std::vector<double> values,
                  std::vector<std::complex<double>> coeffs)
        : grid_(std::move(grid)), values_(std::move(values)), coeffs_(std::move(coeffs)) {}

    GridPtr grid_;
    std::vector<double> values_;
    std::vector<std::complex<double>> coeffs_;
};

/** A Fourier multiplier with real even symbol, given as a function of the
 *  wavenumber magnitude. The symbol must be finite at 0. */
struct MultiplierOp {
    std::function<double(double)> symbol;
    std::string description;
};

SpectralField apply(const MultiplierOp& op, const SpectralField& u);

/** (-d_xx)^nu as the multiplier |k|^(2 nu). Requires nu >= 1. */
SpectralField fractional_laplacian(const SpectralField& u, double nu);

/** (1 + a (-d_xx)^nu)^(-1). The symbol 1 + a|k|^(2 nu) never vanishes. */
SpectralField smoothing_inverse(const SpectralField& u, double nu, double a);

/** Exact spectral derivative of the band-limited interpolant. The Nyquist
 *  coefficient is zeroed for odd orders (unpaired mode, sign ambiguity). */
SpectralField derivative(const SpectralField& u, int order);

/** Zeroes all modes above the grid's dealias cutoff. */
SpectralField dealias(const SpectralField& u);

/** Alias-free product of the two band-limited interpolants, evaluated on a
 *  doubled grid and truncated back to the dealias band. */
SpectralField pointwise_product(const SpectralField& u, const SpectralField& v);

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(double c, const SpectralField& a);

/** sum_i terms[i].first * (*terms[i].second), evaluated pointwise in both
 *  representations; cheaper than chained operator+ in stage loops. */
SpectralField linear_combination(
    const std::vector<std::pair<double, const SpectralField*>>& terms);

namespace detail {
/** Normalized forward transform: out[m] = (1/n) sum_j in[j] e^{-2 pi i j m / n},
 *  m = 0..n/2. Plans are cached per size and safe for concurrent use. */
void forward_fft(std::size_t n, const double* in, std::complex<double>* out);
/** Inverse of forward_fft; synthesizes samples from half-spectrum coefficients. */
void inverse_fft(std::size_t n, const std::complex<double>* in, double* out);
} // namespace detail

} // namespace fch

#endif
