#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fch/littlewood_paley.hpp"
#include "fch/random_field.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace fch;
using namespace fch::test;

TEST_CASE("chi profile: plateau, taper, support") {
    CHECK(chi(0.0) == 1.0);
    CHECK(chi(1.0) == 1.0);
    CHECK(chi(-0.5) == 1.0);
    CHECK(chi(4.0 / 3.0) == 0.0);
    CHECK(chi(2.0) == 0.0);
    double mid = chi(1.15);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);
    CHECK(chi(1.15) == chi(-1.15));
}

TEST_CASE("partition of unity at every retained wavenumber") {
    for (auto [L, N] : {std::pair{2.0 * kPi, std::size_t{512}},
                        std::pair{32.0 * kPi, std::size_t{256}}}) {
        auto g = make_grid(L, N);
        const DyadicSystem& sys = dyadic_system(*g);
        for (std::size_t m = 0; m <= g->cutoff(); ++m) {
            double sum = 0.0;
            for (int q = -1; q <= sys.qmax(); ++q) sum += sys.weight(q, m);
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("dyadic_block: constants live in the chi ball") {
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField c = make_constant(g, 2.5);
    CHECK(rel_l2_error(dyadic_block(c, -1), c) < 1e-15);
    for (int q = 0; q <= dyadic_system(*g).qmax() + 2; ++q)
        CHECK(dyadic_block(c, q).l2_norm() == 0.0);
    CHECK_THROWS_AS(dyadic_block(c, -2), std::invalid_argument);
}

TEST_CASE("dyadic_block: cos(2x) occupies exactly block 0") {
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = make_cos(g, 1.0, 2);
    // chi(2) = 0, phi(2) = chi(1) - chi(2) = 1, phi(1) = 0.
    CHECK(rel_l2_error(dyadic_block(u, 0), u) < 1e-15);
    CHECK(dyadic_block(u, -1).l2_norm() == 0.0);
    for (int q = 1; q <= dyadic_system(*g).qmax(); ++q)
        CHECK(dyadic_block(u, q).l2_norm() == 0.0);
}

TEST_CASE("reconstruction: blocks sum back to the field") {
    auto g = make_grid(32.0 * kPi, 256);
    SpectralField u = random_field(g, 0.5, 17);
    const DyadicSystem& sys = dyadic_system(*g);
    SpectralField sum = dyadic_block(u, -1);
    for (int q = 0; q <= sys.qmax(); ++q) sum = sum + dyadic_block(u, q);
    CHECK(rel_l2_error(sum, u) < 1e-12);
}

TEST_CASE("quasi-orthogonality: distant blocks annihilate") {
    auto g = make_grid(2.0 * kPi, 256);
    SpectralField u = random_field(g, 0.3, 4);
    const DyadicSystem& sys = dyadic_system(*g);
    for (int p = -1; p <= sys.qmax(); ++p)
        for (int q = -1; q <= sys.qmax(); ++q) {
            if (std::abs(p - q) < 2) continue;
            CHECK(dyadic_block(dyadic_block(u, q), p).l2_norm() == 0.0);
        }
}

TEST_CASE("block and cutoff boundedness in L2") {
    auto g = make_grid(2.0 * kPi, 256);
    SpectralField u = random_field(g, 0.2, 8);
    const DyadicSystem& sys = dyadic_system(*g);
    for (int q = -1; q <= sys.qmax(); ++q) CHECK(block_l2(u, q) <= u.l2_norm() * (1 + 1e-15));
    for (int q = 0; q <= sys.qmax() + 1; ++q)
        CHECK(low_cutoff(u, q).l2_norm() <= u.l2_norm() * (1 + 1e-15));
}

TEST_CASE("low_cutoff: partial sums, constants, convergence") {
    auto g = make_grid(2.0 * kPi, 128);
    const DyadicSystem& sys = dyadic_system(*g);

    SpectralField u = random_field(g, 0.4, 23);
    for (int q : {0, 1, 3}) {
        SpectralField partial = dyadic_block(u, -1);
        for (int p = 0; p <= q - 1; ++p) partial = partial + dyadic_block(u, p);
        CHECK(rel_l2_error(low_cutoff(u, q), partial) < 1e-12);
    }

    // chi(2) = 0 kills cos(2x) at q = 0.
    CHECK(low_cutoff(make_cos(g, 1.0, 2), 0).l2_norm() == 0.0);

    SpectralField c = make_constant(g, -1.5);
    for (int q = 0; q < 4; ++q) CHECK(rel_l2_error(low_cutoff(c, q), c) < 1e-15);

    CHECK(rel_l2_error(low_cutoff(u, sys.qmax() + 1), u) < 1e-13);
    CHECK_THROWS_AS(low_cutoff(u, -1), std::invalid_argument);
}

TEST_CASE("besov_norm: single-harmonic oracle") {
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = make_cos(g, 1.0, 2);
    // One block at q = 0, so the norm is 2^{0*s} ||cos 2x||_{L2} = sqrt(pi)
    // for every summation exponent; the L2 value comes from quadrature.
    double l2 = quadrature_l2(u);
    CHECK(l2 == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    for (int r : {1, 2, kInf}) {
        for (double s : {-1.0, 0.0, 2.5}) {
            CHECK(besov_norm(u, {s, 2, r}) == doctest::Approx(l2).epsilon(1e-13));
        }
    }
}

TEST_CASE("besov_norm: zero field, lr monotonicity, embedding") {
    auto g = make_grid(32.0 * kPi, 256);
    CHECK(besov_norm(SpectralField::zero(g), {2.5, 2, 1}) == 0.0);

    SpectralField u = random_field(g, 0.4, 29);
    for (double s : {0.0, 1.5, 2.5}) {
        double n_inf = besov_norm(u, {s, 2, kInf});
        double n_2 = besov_norm(u, {s, 2, 2});
        double n_1 = besov_norm(u, {s, 2, 1});
        CHECK(n_inf <= n_2 * (1 + 1e-15));
        CHECK(n_2 <= n_1 * (1 + 1e-15));
    }

    CHECK_THROWS_AS(besov_norm(u, {1.0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(besov_norm(u, {1.0, 2, 5}), std::invalid_argument);
}

TEST_CASE("besov_norm: B^0_{2,2} sits within the L2 equivalence window") {
    auto g = make_grid(2.0 * kPi, 256);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        SpectralField u = random_field(g, 0.6, seed);
        double b = besov_norm(u, {0.0, 2, 2});
        double l2 = u.l2_norm();
        CHECK(b <= l2 * (1 + 1e-13));
        CHECK(b >= l2 / std::sqrt(2.0) * (1 - 1e-13));
    }
}

TEST_CASE("besov_norm: p = inf blocks use the grid maximum") {
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = make_cos(g, 3.0, 2);
    CHECK(besov_norm(u, {0.0, kInf, kInf}) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("critical_index branches") {
    CHECK(critical_index(2.0) == doctest::Approx(3.5));
    CHECK(critical_index(1.2) == doctest::Approx(2.5));
    CHECK(critical_index(1.5) == doctest::Approx(2.5));
    CHECK(critical_index(1.75) == doctest::Approx(3.0));
    CHECK_THROWS_AS(critical_index(1.0), std::invalid_argument);
    CHECK_THROWS_AS(critical_index(0.5), std::invalid_argument);
}

TEST_CASE("es_norm_truncated: zero field and domain checks") {
    auto g = make_grid(2.0 * kPi, 64);
    EsNorm z = es_norm_truncated(SpectralField::zero(g), 0.5, 24, 2.0);
    CHECK(z.value == 0.0);
    CHECK(z.argmax_k == 0);
    CHECK(z.converged);
    SpectralField u = make_cos(g, 1.0, 1);
    CHECK_THROWS_AS(es_norm_truncated(u, 0.0, 24, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(es_norm_truncated(u, 1.5, 24, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(es_norm_truncated(u, 0.5, 0, 2.0), std::invalid_argument);
}

TEST_CASE("es_norm_truncated: k = 0 term recovers the Besov norm") {
    auto g = make_grid(2.0 * kPi, 128);
    // A constant has no derivatives: the supremum is the k = 0 term itself.
    SpectralField c = make_constant(g, 0.7);
    EsNorm n = es_norm_truncated(c, 1.0, 8, 1.4);
    CHECK(n.argmax_k == 0);
    CHECK(n.value == doctest::Approx(besov_norm(c, {critical_index(1.4), 2, 1})).epsilon(1e-14));
}

TEST_CASE("es_norm_truncated: explicit sequence for a single harmonic") {
    // cos(x) on the 2 pi box sits in block -1 alone (chi(1) = 1), and every
    // x-derivative keeps |k| = 1, so the Besov factor is the constant
    // w = 2^{-s0} sqrt(pi). Brute-force the sequence w s^k (k+1)^2 / k!.
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = make_cos(g, 1.0, 1);
    const double nu = 2.0;
    const double s0 = critical_index(nu); // 7/2
    const double w = std::exp2(-s0) * std::sqrt(kPi);
    const double s = 0.5;
    const int kmax = 24;

    double best = 0.0;
    int best_k = 0;
    double s_pow = 1.0, factorial = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            s_pow *= s;
            factorial *= k;
        }
        double kk = k + 1.0;
        double term = w * s_pow * kk * kk / factorial;
        if (term > best) {
            best = term;
            best_k = k;
        }
    }
    // The sequence peaks at k = 1 with value 2w for s = 1/2.
    CHECK(best_k == 1);
    CHECK(best == doctest::Approx(2.0 * w).epsilon(1e-14));

    EsNorm n = es_norm_truncated(u, s, kmax, nu);
    CHECK(n.argmax_k == best_k);
    CHECK(n.value == doctest::Approx(best).epsilon(1e-12));
    CHECK(n.converged);
}

TEST_CASE("es_norm_truncated: non-convergence is flagged") {
    // s = 1 keeps the factorial race alive long enough that a tiny kmax
    // puts the maximizer on the truncation boundary.
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = make_cos(g, 1.0, 1);
    EsNorm n = es_norm_truncated(u, 1.0, 1, 2.0);
    CHECK(n.argmax_k == 1);
    CHECK_FALSE(n.converged);
}
