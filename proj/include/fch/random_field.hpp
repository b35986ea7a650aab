#ifndef FCH_RANDOM_FIELD_HPP
#define FCH_RANDOM_FIELD_HPP

#include "fch/spectral.hpp"

#include <cstdint>
#include <random>

namespace fch {

/** Deterministic stream of standard-normal deviates: mt19937_64 (fully
 *  specified by the standard) plus an explicit Box-Muller step, so streams
 *  are bit-reproducible across platforms. std::normal_distribution is
 *  implementation-defined and deliberately avoided. */
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/** Band-limited random field: independent complex Gaussian coefficients on
 *  every retained mode, damped by (1 + |k|)^-damping. The per-mode law
 *  depends only on the physical wavenumber, so ensembles on different
 *  resolutions of the same box are draws from matched laws. */
SpectralField random_field(const GridPtr& grid, double damping, std::uint64_t seed);

/** Sub-seed derivation for sample `index` of an ensemble rooted at `seed`. */
std::uint64_t ensemble_seed(std::uint64_t seed, std::uint64_t index);

} // namespace fch

#endif
