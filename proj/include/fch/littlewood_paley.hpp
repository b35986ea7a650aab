#ifndef FCH_LITTLEWOOD_PALEY_HPP
#define FCH_LITTLEWOOD_PALEY_HPP

#include "fch/spectral.hpp"

#include <limits>
#include <vector>

namespace fch {

/** Marker for p = infinity / r = infinity in Besov exponents. */
inline constexpr int kInf = std::numeric_limits<int>::max();

/** Low-pass profile: 1 on |xi| <= 1, smooth taper, 0 on |xi| >= 4/3. */
double chi(double xi);
/** Annular profile chi(xi/2) - chi(xi); supported in 1 < |xi| < 8/3. */
double phi(double xi);

/** Dyadic filter bank for one grid: per-block symbol tables
 *  (q = -1 applies chi, q >= 0 applies phi(2^-q .)) and the largest block
 *  index whose annulus intersects the retained modes. The tables satisfy
 *  chi(k) + sum_q phi(2^-q k) = 1 at every retained lattice wavenumber.
 *  Immutable; safe to share across threads. */
class DyadicSystem {
  public:
    explicit DyadicSystem(const Grid& grid);

    int qmax() const { return qmax_; }
    /** Symbol value of block q at mode m; zero for q > qmax. */
    double weight(int q, std::size_t m) const;
    /** Low-pass symbol chi(2^-q k_m) of the partial sum S_q. */
    double low_pass_weight(int q, std::size_t m) const;

  private:
    const Grid grid_;
    int qmax_;
    // weights_[q + 1][m] for q = -1..qmax.
    std::vector<std::vector<double>> weights_;
};

/** Cached per-grid filter bank (keyed by L, N, dealias fraction). */
const DyadicSystem& dyadic_system(const Grid& grid);

/** Frequency-localization block Delta_q u; q = -1 is the chi ball. Blocks
 *  beyond the grid's qmax are identically zero. Requires q >= -1. */
SpectralField dyadic_block(const SpectralField& u, int q);

/** Low-frequency cut-off S_q u = sum_{p <= q-1} Delta_p u. Requires q >= 0. */
SpectralField low_cutoff(const SpectralField& u, int q);

/** ||Delta_q u||_{L^2} straight from the coefficients (no transform). */
double block_l2(const SpectralField& u, int q);
/** max_x |Delta_q u| (synthesizes the block). */
double block_linf(const SpectralField& u, int q);

/** Besov exponents (s, p, r); p in {2, kInf}, r in {1, 2, kInf}. */
struct BesovSpec {
    double s;
    int p = 2;
    int r = 1;
};

/** ||u||_{B^s_{p,r}} = l^r over q of 2^{qs} ||Delta_q u||_{L^p}. */
double besov_norm(const SpectralField& u, const BesovSpec& spec);

/** Critical regularity: 2 nu - 1/2 for nu > 3/2, else 5/2. Requires nu > 1. */
double critical_index(double nu);

/** Truncated analytic-scale norm: max over k = 0..kmax of
 *  s^k ||d^k u/dx^k||_{B^{s0}_{2,1}} (k+1)^2 / k!, with s0 = s0(nu).
 *  Coefficients below 1e-13 of the peak magnitude are treated as transform
 *  noise and dropped before the derivative amplification. The result is
 *  flagged non-converged when the maximizer sits at kmax. */
struct EsNorm {
    double value = 0.0;
    int argmax_k = 0;
    bool converged = true;
};

EsNorm es_norm_truncated(const SpectralField& u, double s, int kmax, double nu);

} // namespace fch

#endif
