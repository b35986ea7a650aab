#include "fch/random_field.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace fch {

std::uint64_t ensemble_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over (seed, index); decorrelates neighbouring sub-streams.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SpectralField random_field(const GridPtr& grid, double damping, std::uint64_t seed) {
    NormalStream normal(seed);
    std::vector<std::complex<double>> c(grid->num_modes(), {0.0, 0.0});
    const std::size_t nyq = grid->size() / 2;
    for (std::size_t m = 0; m <= grid->cutoff(); ++m) {
        double re = normal.next();
        double im = normal.next();
        double k = grid->wavenumber(m);
        double damp = std::pow(1.0 + k, -damping);
        if (m == 0 || m == nyq) im = 0.0; // real data: unpaired modes stay real
        c[m] = 0.5 * damp * std::complex<double>(re, im);
    }
    return SpectralField::from_coefficients(grid, std::move(c));
}

} // namespace fch
