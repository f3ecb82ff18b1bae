#include "cross/yamabe.hpp"

#include "cross/errors.hpp"
#include "cross/geometry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <sstream>

using namespace cross;
using oracles::rel_diff;

TEST_SUITE_BEGIN("yamabe");

TEST_CASE("stability polynomial values and symmetry") {
    CHECK(stability_poly(1, 1, 1, 1) == doctest::Approx(27).epsilon(1e-13));
    CHECK(stability_poly(2, 0.7, 0.7, 0.0) == doctest::Approx(0.0));
    CHECK(stability_poly(3, 0.2, 0.9, 0.0) ==
          doctest::Approx((0.2 - 0.9) * (0.2 - 0.9)).epsilon(1e-12));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const double z = oracles::log_uniform(rng, 0.01, 10.0);
        CHECK(rel_diff(stability_poly(1, 1, 1, z), 3 * z * z + 24 * z) < 1e-12);
    }
    for (int i = 0; i < 50; ++i) {
        const double x = oracles::log_uniform(rng, 0.05, 5.0);
        const double y = oracles::log_uniform(rng, 0.05, 5.0);
        const double z = oracles::log_uniform(rng, 0.05, 5.0);
        const double ref = stability_poly(2, x, y, z);
        CHECK(stability_poly(2, x, z, y) == ref);
        CHECK(stability_poly(2, y, x, z) == ref);
        CHECK(stability_poly(2, y, z, x) == ref);
        CHECK(stability_poly(2, z, x, y) == ref);
        CHECK(stability_poly(2, z, y, x) == ref);
    }
}

TEST_CASE("stability is unbounded: p > 0 on the far grid") {
    for (int n : {1, 2, 3})
        for (double x = 9.0 / 8.0; x <= 4; x += 0.7)
            for (double y = x; y <= 4; y += 0.7)
                for (double z = y; z <= 4; z += 0.7) CHECK(stability_poly(n, x, y, z) > 0);
}

TEST_CASE("classification of the reference metrics") {
    StabilityReport r = classify(MetricSpec::quat(1, 1, 1, 1, Quotient::Sphere));
    CHECK(r.classification == YamabeClass::Degenerate);
    CHECK(r.lambda1 == doctest::Approx(7).epsilon(1e-12));
    CHECK(r.jacobi_gap == doctest::Approx(0.0));
    CHECK(r.kernel_dim == 8);

    r = classify(MetricSpec::quat(1, 1, 1, 1, Quotient::Projective));
    CHECK(r.classification == YamabeClass::StableNondegenerate);
    CHECK(r.lambda1 == doctest::Approx(16).epsilon(1e-12));

    r = classify(MetricSpec::quat(1, 0.1, 0.1, 0.1, Quotient::Sphere));
    CHECK(r.classification == YamabeClass::Unstable);
    CHECK(r.morse_index >= 1);
    CHECK(stability_poly(1, 0.01, 0.01, 0.01) < 0);
}

TEST_CASE("Morse index") {
    CHECK(morse_index(MetricSpec::quat(1, 2, 2, 2, Quotient::Sphere)).index == 0);

    const MorseResult round7 = morse_index(MetricSpec::quat(1, 1, 1, 1, Quotient::Sphere));
    CHECK(round7.index == 0);
    CHECK(round7.kernel_dim == 8);

    // i_Morse of hcheck(t) is nonincreasing in t and blows up as t -> 0
    std::uint64_t prev = 0;
    bool first = true;
    for (double t : {0.5, 0.2, 0.1, 0.05}) {
        const std::uint64_t idx = morse_index(MetricSpec::cp_check(1, t)).index;
        if (!first) CHECK(idx >= prev);
        prev = idx;
        first = false;
    }
    CHECK(prev > 100);
}

TEST_CASE("polynomial criterion matches the spectral gap on both quotients") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 60; ++i) {
            const std::array<double, 3> t{oracles::log_uniform(rng, 0.1, 10.0),
                                          oracles::log_uniform(rng, 0.1, 10.0),
                                          oracles::log_uniform(rng, 0.1, 10.0)};
            const double p = stability_poly(n, t[0] * t[0], t[1] * t[1], t[2] * t[2]);
            const auto sph = classify(MetricSpec::quat(n, t[0], t[1], t[2], Quotient::Sphere));
            const auto prj =
                classify(MetricSpec::quat(n, t[0], t[1], t[2], Quotient::Projective));
            CHECK((sph.jacobi_gap > 0) == (p > 0));
            CHECK((prj.jacobi_gap > 0) == (p > 0));
        }
        // exact degeneracy at the round sphere, no exception on the projective side
        CHECK(classify(MetricSpec::quat(n, 1, 1, 1, Quotient::Sphere)).classification ==
              YamabeClass::Degenerate);
        CHECK(classify(MetricSpec::quat(n, 1, 1, 1, Quotient::Projective)).classification ==
              YamabeClass::StableNondegenerate);
        CHECK(stability_poly(n, 1, 1, 1) > 0);
    }
}

TEST_CASE("boundary mesh") {
    for (int n : {1, 2}) {
        const BoundaryMesh mesh = boundary_mesh(n, 24);
        CHECK(mesh.warning.empty());
        CHECK(!mesh.points.empty());
        for (const auto& pt : mesh.points) {
            const double norm = pt.x * pt.x + pt.y * pt.y + pt.z * pt.z;
            CHECK(std::abs(pt.p_residual) <= 1e-9 * std::max(1.0, norm * norm));
            CHECK(pt.x < 9.0 / 8.0);
            CHECK(pt.y < 9.0 / 8.0);
            CHECK(pt.z < 9.0 / 8.0);
            CHECK(pt.t1 == doctest::Approx(std::sqrt(pt.x)).epsilon(1e-14));
        }
        // orbit closure: each point's coordinate permutations are present (6 per cell)
        CHECK(mesh.points.size() % 6 == 0);
    }

    std::ostringstream csv;
    const BoundaryMesh m1 = boundary_mesh(1, 4);
    m1.write_csv(csv);
    CHECK(csv.str().rfind("t1,t2,t3,x,y,z,p_residual\n", 0) == 0);
    std::ostringstream obj;
    m1.write_obj(obj);
    CHECK(obj.str().find("\nv ") != std::string::npos);
}

TEST_CASE("diagonal crossing of the boundary") {
    // p(x,x,x) = x^2 (6n x^2 + 8(n^2+n+1) x - 3); for n = 1 the positive root
    // of 2x^2 + 8x - 1 = 0, i.e. t = sqrt((-8+sqrt(72))/4).
    const double x_root = (-8.0 + std::sqrt(72.0)) / 4.0;
    CHECK(x_root == doctest::Approx(0.121320343560).epsilon(1e-9));
    CHECK(std::abs(stability_poly(1, x_root, x_root, x_root)) < 1e-12);
    const double t_root = std::sqrt(x_root);

    std::vector<std::array<double, 3>> diag;
    for (double t = 1.0; t >= 0.0999; t -= 0.05) diag.push_back({t, t, t});
    const auto crossings = bifurcation_scan(1, diag, Quotient::Sphere);
    REQUIRE(crossings.size() == 1);
    CHECK(std::abs(crossings[0].t[0] - t_root) < 1e-6);
    CHECK(std::abs(crossings[0].p_residual) <= 1e-10);

    std::vector<std::array<double, 3>> far;
    for (double t = 2.0; t <= 5.0; t += 0.5) far.push_back({t, t + 1, t + 2});
    CHECK(bifurcation_scan(1, far, Quotient::Sphere).empty());

    const std::vector<std::array<double, 3>> constant(8, {0.5, 0.5, 0.5});
    CHECK(bifurcation_scan(1, constant, Quotient::Sphere).empty());
}

TEST_CASE("accumulation endpoint ell_n") {
    CHECK(ell_n(1) == doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-14));
    CHECK(ell_n(2) == doctest::Approx((std::sqrt(51.0) - 7.0) / 2.0).epsilon(1e-14));

    // the x = y boundary branch tends to ell_n as z -> 0+
    for (int n : {1, 2}) {
        const double ell = ell_n(n);
        for (double z : {1e-4, 1e-6}) {
            // root of p(x, x, z) in x near ell
            double lo = 0.25 * ell, hi = 4.0 * ell;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                // p(x,x,z) = z * 4x (n x^2 + 2(n^2+n+1) x - 1) + O(z^2): increasing in x
                if (stability_poly(n, mid, mid, z) > 0)
                    hi = mid;
                else
                    lo = mid;
            }
            CHECK(std::abs(0.5 * (lo + hi) - ell) < 50 * z + 1e-9);
        }
    }
}

TEST_CASE("jacobi kernel multiplicity at the critical parameter") {
    // At t_* the threshold meets the flat branch; the level there is (1,1).
    const MorseResult m = morse_index(MetricSpec::cp_check(1, cp_critical_t(1)));
    CHECK(m.index == 0);
    CHECK(m.kernel_dim == 5);
}

TEST_CASE("first bifurcation value of hcheck") {
    CHECK(cp_critical_t(1) == doctest::Approx(0.485868).epsilon(1e-5));
    for (int n : {1, 2, 3}) {
        const double ts = cp_critical_t(n);
        // jacobi gap changes sign exactly there
        CHECK(classify(MetricSpec::cp_check(n, ts + 1e-3)).classification ==
              YamabeClass::StableNondegenerate);
        CHECK(classify(MetricSpec::cp_check(n, ts - 1e-3)).classification ==
              YamabeClass::Unstable);
        const double gap_at = lambda1(MetricSpec::cp_check(n, ts)).value -
                              scal(MetricSpec::cp_check(n, ts)) / (4 * n + 1);
        CHECK(std::abs(gap_at) < 1e-9);
    }
}

TEST_CASE("spin9 stability threshold") {
    const double want = std::sqrt(0.5 * (std::sqrt(19.0) - 4.0));
    for (Quotient q : {Quotient::Sphere, Quotient::Projective}) {
        double lo = 0.2, hi = 0.9;
        auto gap = [&](double t) {
            const MetricSpec spec = MetricSpec::spin9(t, q);
            return lambda1(spec).value - scal(spec) / 14.0;
        };
        REQUIRE(gap(lo) < 0);
        REQUIRE(gap(hi) > 0);
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (gap(mid) < 0 ? lo : hi) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - want) < 1e-6);
    }
}

TEST_CASE("berger and S^3 families are never unstable") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const double t = oracles::log_uniform(rng, 0.05, 10.0);
        for (Quotient q : {Quotient::Sphere, Quotient::Projective}) {
            CHECK(classify(MetricSpec::berger(1 + i % 4, t, q)).classification !=
                  YamabeClass::Unstable);
            const MetricSpec s3 =
                MetricSpec::quat(0, t, oracles::log_uniform(rng, 0.05, 10.0),
                                 oracles::log_uniform(rng, 0.05, 10.0), q);
            CHECK(classify(s3).classification != YamabeClass::Unstable);
        }
    }
    // the S^3 diagonal is homothetic to round: degenerate for every t
    for (double t : {0.3, 1.0, 2.5})
        CHECK(classify(MetricSpec::quat(0, t, t, t, Quotient::Sphere)).classification ==
              YamabeClass::Degenerate);
}

TEST_SUITE_END();
