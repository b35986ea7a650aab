#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fch/bony.hpp"
#include "fch/littlewood_paley.hpp"
#include "fch/random_field.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace fch;
using namespace fch::test;

TEST_CASE("paraproduct: constants") {
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField u = random_field(g, 0.5, 3);
    SpectralField c = make_constant(g, 1.7);

    // Constants sit in block -1 where S_{j-2} has nothing below them.
    CHECK(paraproduct(u, c).l2_norm() == 0.0);

    // S_{j-1} of a constant is the constant, so T_c v = c v for a
    // single-block v (cos 8x lives in block 2 on this box).
    SpectralField v = make_cos(g, 1.0, 8);
    CHECK(rel_l2_error(paraproduct(c, v), make_cos(g, 1.7, 8)) < 1e-13);
}

TEST_CASE("bony_remainder: diagonal pairs only") {
    auto g = make_grid(2.0 * kPi, 256);
    SpectralField cu = make_constant(g, 2.0);
    SpectralField cv = make_constant(g, -1.5);
    CHECK(rel_l2_error(bony_remainder(cu, cv), make_constant(g, -3.0)) < 1e-14);

    // Pure block-1 against pure block-5 content: |k - j| >= 2 everywhere.
    SpectralField b1 = make_cos(g, 1.0, 3);
    SpectralField b5 = make_cos(g, 1.0, 48);
    CHECK(dyadic_block(b1, 1).l2_norm() == doctest::Approx(b1.l2_norm()));
    CHECK(dyadic_block(b5, 5).l2_norm() == doctest::Approx(b5.l2_norm()));
    CHECK(bony_remainder(b1, b5).l2_norm() == 0.0);

    SpectralField u = random_field(g, 0.6, 5);
    SpectralField v = random_field(g, 0.6, 6);
    CHECK(rel_l2_error(bony_remainder(u, v), bony_remainder(v, u)) < 1e-13);
}

TEST_CASE("decomposition closure: T_uv + T_vu + R(u,v) = uv") {
    auto g = make_grid(32.0 * kPi, 256);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SpectralField u = random_field(g, 1.0, ensemble_seed(100, 2 * seed));
        SpectralField v = random_field(g, 1.0, ensemble_seed(100, 2 * seed + 1));
        SpectralField uv = pointwise_product(u, v);
        BonyParts parts = bony_decompose(u, v);

        SpectralField sum = linear_combination(
            {{1.0, &parts.Tuv}, {1.0, &parts.Tvu}, {1.0, &parts.Ruv}});
        CHECK((uv - sum).l2_norm() < 1e-11 * uv.l2_norm());

        // Alternate closure through T'.
        SpectralField sum2 = parts.Tuv + parts.Tprime_vu;
        CHECK((uv - sum2).l2_norm() < 1e-11 * uv.l2_norm());

        // T' collects the remainder: T'_vu = T_vu + R(u,v).
        SpectralField tv_r = parts.Tvu + parts.Ruv;
        CHECK((parts.Tprime_vu - tv_r).l2_norm() < 1e-11 * uv.l2_norm());
    }
}

TEST_CASE("paraproduct is bilinear") {
    auto g = make_grid(2.0 * kPi, 128);
    SpectralField u1 = random_field(g, 0.8, 41);
    SpectralField u2 = random_field(g, 0.8, 42);
    SpectralField v = random_field(g, 0.8, 43);
    SpectralField combo = linear_combination({{2.0, &u1}, {-3.0, &u2}});
    SpectralField lhs = paraproduct(combo, v);
    SpectralField t1 = paraproduct(u1, v);
    SpectralField t2 = paraproduct(u2, v);
    SpectralField rhs = linear_combination({{2.0, &t1}, {-3.0, &t2}});
    CHECK(rel_l2_error(lhs, rhs) < 1e-12);
}

TEST_CASE("commutator: kills constants") {
    // The wide box keeps |k|^{2nu} round-off amplification small enough to
    // see the cancellation at full precision.
    auto g = make_grid(32.0 * kPi, 128);
    SpectralField gfield = random_field(g, 0.7, 51);
    for (double c : {0.3, -10.0, 7.5}) {
        SpectralField f = make_constant(g, c);
        CHECK(commutator(f, gfield, 1.3).l2_norm() < 1e-13 * gfield.l2_norm());
    }
}

TEST_CASE("commutator: closed-form harmonic oracle") {
    // f = cos x, g = d/dx cos x = -sin x, nu = 1:
    //   f Lambda g = -cos x sin x = -(1/2) sin 2x
    //   Lambda(fg) = -d_xx(-(1/2) sin 2x) = -2 sin 2x
    //   [f, Lambda] g = (3/2) sin 2x.
    auto g = make_grid(2.0 * kPi, 64);
    SpectralField f = make_cos(g, 1.0, 1);
    SpectralField gx = make_sin(g, -1.0, 1);
    CHECK(rel_l2_error(commutator(f, gx, 1.0), make_sin(g, 1.5, 2)) < 1e-13);
}

TEST_CASE("commutator is bilinear") {
    auto g = make_grid(2.0 * kPi, 128);
    SpectralField f1 = random_field(g, 0.8, 61);
    SpectralField f2 = random_field(g, 0.8, 62);
    SpectralField w = random_field(g, 0.8, 63);
    SpectralField fsum = f1 + f2;
    SpectralField lhs = commutator(fsum, w, 1.5);
    SpectralField rhs = commutator(f1, w, 1.5) + commutator(f2, w, 1.5);
    double scale = lhs.l2_norm();
    CHECK((lhs - rhs).l2_norm() < 1e-12 * scale);
}

TEST_CASE("commutator_split: F + G recovers the commutator") {
    auto g = make_grid(32.0 * kPi, 256);
    for (double nu : {1.2, 1.5, 2.0}) {
        SpectralField f = random_field(g, critical_index(nu) + 0.5, 71);
        SpectralField w = random_field(g, critical_index(nu) + 0.5, 72);
        CommutatorSplit split = commutator_split(f, w, nu);
        SpectralField sum = split.F + split.G;
        CHECK((sum - split.total).l2_norm() < 1e-11 * split.total.l2_norm());
    }
}

TEST_CASE("commutator_split: degenerate arguments") {
    auto g = make_grid(2.0 * kPi, 128);
    SpectralField w = random_field(g, 1.0, 81);

    // Constant f: the split degenerates to F = -c Lambda S_1 g = -G, so the
    // two parts cancel (they vanish individually only when S_1 g = 0).
    SpectralField cfield = make_constant(g, 4.0);
    CommutatorSplit cf = commutator_split(cfield, w, 1.4);
    double part_scale = std::max(cf.F.l2_norm(), cf.G.l2_norm());
    CHECK((cf.F + cf.G).l2_norm() < 1e-11 * part_scale);
    SpectralField oracle = -4.0 * fractional_laplacian(low_cutoff(w, 1), 1.4);
    CHECK(rel_l2_error(cf.F, oracle) < 1e-11);

    // ...and with high-pass g both parts vanish (F only to round-off: its
    // bracket term carries Lambda-amplified transform noise).
    SpectralField whi = make_cos(g, 1.0, 8); // S_1 kills it: chi(4) = 0
    CommutatorSplit chi_f = commutator_split(cfield, whi, 1.4);
    double term_scale = 4.0 * fractional_laplacian(whi, 1.4).l2_norm();
    CHECK(chi_f.F.l2_norm() < 1e-13 * term_scale);
    CHECK(chi_f.G.l2_norm() == 0.0);

    // Lambda of a constant vanishes, so G = R(f, 0) = 0 and F carries all.
    CommutatorSplit cg = commutator_split(w, make_constant(g, 2.0), 1.4);
    CHECK(cg.G.l2_norm() == 0.0);
    CHECK((cg.F - cg.total).l2_norm() < 1e-11 * std::max(cg.total.l2_norm(), 1e-30));
}

TEST_CASE("commutator audit: deterministic and scale invariant") {
    auto g = make_grid(32.0 * kPi, 128);
    CommutatorAuditReport a = commutator_bound_audit(6, g, 1.4, 12345);
    CommutatorAuditReport b = commutator_bound_audit(6, g, 1.4, 12345);
    REQUIRE(a.samples.size() == 6);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].ratio_e1 == b.samples[i].ratio_e1);
        CHECK(a.samples[i].ratio_e2 == b.samples[i].ratio_e2);
        CHECK(a.samples[i].ratio_e3 == b.samples[i].ratio_e3);
    }
    CHECK(a.empirical_c > 0.0);
    CHECK(a.empirical_c ==
          doctest::Approx(std::max({a.max_e1, a.max_e2, a.max_e3})).epsilon(1e-15));

    // Both sides of each estimate are 1-homogeneous in f and in g, and
    // scaling by powers of two is exact in floating point.
    double damping = critical_index(1.4) + 0.5;
    SpectralField f = random_field(g, damping, 991);
    SpectralField w = random_field(g, damping, 992);
    CommutatorAuditSample base = commutator_ratios(f, w, 1.4);
    for (double lam : {0.25, 4.0}) {
        for (double mu : {0.25, 4.0}) {
            CommutatorAuditSample scaled =
                commutator_ratios(lam * f, mu * w, 1.4);
            CHECK(scaled.ratio_e1 == doctest::Approx(base.ratio_e1).epsilon(1e-12));
            CHECK(scaled.ratio_e2 == doctest::Approx(base.ratio_e2).epsilon(1e-12));
            CHECK(scaled.ratio_e3 == doctest::Approx(base.ratio_e3).epsilon(1e-12));
        }
    }

    // A constant first argument has zero commutator, hence zero ratios.
    CommutatorAuditSample zero = commutator_ratios(make_constant(g, 3.0), w, 1.4);
    CHECK(zero.ratio_e1 < 1e-13);
    CHECK(zero.ratio_e2 < 1e-13);
    CHECK(zero.ratio_e3 < 1e-13);
}

TEST_CASE("product audit runs and is positive") {
    auto g = make_grid(2.0 * kPi, 128);
    double c = product_bound_audit(4, g, 1.4, 7);
    CHECK(c > 0.0);
    CHECK(c == product_bound_audit(4, g, 1.4, 7));
}
