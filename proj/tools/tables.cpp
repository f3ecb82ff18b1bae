#include "tables.hpp"

#include "cross/geometry.hpp"
#include "cross/isospec.hpp"
#include "cross/metric.hpp"
#include "cross/rep_enum.hpp"
#include "cross/spectrum.hpp"
#include "cross/su2_rep.hpp"
#include "cross/yamabe.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

namespace {

using namespace cross;

int g_failures = 0;

void cell(const char* table, const std::string& row, const std::string& check, bool ok,
          double got, double want) {
    std::printf("[%s] %s | %-24s | %-44s | got %.12g want %.12g\n", ok ? "PASS" : "FAIL", table,
                row.c_str(), check.c_str(), got, want);
    if (!ok) ++g_failures;
}

void cell(const char* table, const std::string& row, const std::string& check, bool ok) {
    std::printf("[%s] %s | %-24s | %-44s |\n", ok ? "PASS" : "FAIL", table, row.c_str(),
                check.c_str());
    if (!ok) ++g_failures;
}

bool close(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Smallest positive level of the truncated spectrum near the closed-form value.
Lambda1 brute_lambda1(const MetricSpec& spec) {
    const Lambda1 closed = lambda1(spec);
    const SpectrumSlice slice = truncated_spectrum(spec, 1.25 * closed.value);
    const std::size_t idx = slice.first_positive();
    if (idx == static_cast<std::size_t>(-1)) return {-1.0, 0, "none"};
    return {slice.levels[idx].value, slice.levels[idx].multiplicity, "brute"};
}

double jacobi_gap_at(const MetricSpec& spec) {
    return lambda1(spec).value - scal(spec) / (spec.dimension() - 1);
}

// Root of the jacobi gap along a one-parameter family, bracketed in [lo, hi].
double bisect_gap(const std::function<MetricSpec(double)>& make, double lo, double hi) {
    double glo = jacobi_gap_at(make(lo));
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = jacobi_gap_at(make(mid));
        if ((glo < 0) == (gm < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// sigma-polynomial route for scal/vol of g_{(a,b,c,s)}, used as the second
// algebraic path against the t-parameter formulas.
double scal_sigma(int n, const ABCSParams& par) {
    const SymTriple sig = sym_triple(par.axes());
    const double s2 = par.s * par.s;
    return 16.0 * n * (n + 2) * s2 + 16.0 * sig.s1 - 2.0 * n * sig.s2 * s2 * s2 / sig.s3 -
           4.0 * sig.s2 * sig.s2 / sig.s3;
}

double vol_sigma(int n, const ABCSParams& par) {
    const SymTriple sig = sym_triple(par.axes());
    const double c = 2.0 * std::exp((2.0 * n + 2.0) * std::log(std::numbers::pi) -
                                    std::lgamma(2.0 * n + 2.0));
    return c / (2.0 * std::sqrt(2.0 * sig.s3) * std::pow(par.s, 4.0 * n));
}

// ---- Table 1: simply connected spaces ----------------------------------------

void table1() {
    const char* T = "table1";

    for (int d : {7, 11, 15}) {
        const int m = (d - 3) / 4;
        const std::string row = "S^" + std::to_string(d) + " round";
        const MetricSpec round = MetricSpec::round_sphere(d);
        const MetricSpec h1 = MetricSpec::quat(m, 1, 1, 1, Quotient::Sphere);
        const Lambda1 lam = lambda1(round);
        const Lambda1 brute = brute_lambda1(h1);
        cell(T, row, "lambda1 = d (rep-enum route)", close(lam.value, brute.value), lam.value,
             brute.value);
        cell(T, row, "lambda1 mult = d+1 (Weyl route)",
             lam.multiplicity == brute.multiplicity &&
                 lam.multiplicity == round_multiplicity(d, 1),
             static_cast<double>(brute.multiplicity), static_cast<double>(lam.multiplicity));
        cell(T, row, "scal d(d-1) (Gray-O'Neill route)", close(scal(round), scal(h1)),
             scal(h1), scal(round));
        cell(T, row, "volume (h(1,1,1) route)", close(volume(round), volume(h1)), volume(h1),
             volume(round));
    }

    {
        const double ts[3] = {0.6, 1.4, 0.8};
        const int ns[3] = {1, 3, 5};
        for (int i = 0; i < 3; ++i) {
            const int n = ns[i], d = 2 * n + 1;
            const double t = ts[i];
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "S^%d g(%g)", d, t);
            const MetricSpec g = MetricSpec::berger(n, t, Quotient::Sphere);
            const MetricSpec h = MetricSpec::quat((d - 3) / 4, t, 1, 1, Quotient::Sphere);
            const Lambda1 lam = lambda1(g);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1 (h(t,1,1) route)", close(lam.value, brute.value),
                 lam.value, brute.value);
            cell(T, rowbuf, "lambda1 mult (h(t,1,1) route)",
                 lam.multiplicity == brute.multiplicity, static_cast<double>(lam.multiplicity),
                 static_cast<double>(brute.multiplicity));
            cell(T, rowbuf, "scal (h(t,1,1) route)", close(scal(g), scal(h)), scal(g), scal(h));
            cell(T, rowbuf, "volume (h(t,1,1) route)", close(volume(g), volume(h)), volume(g),
                 volume(h));
        }
    }

    {
        const double trip[3][3] = {{0.7, 1.1, 1.6}, {0.5, 0.9, 2.2}, {0.4, 1.2, 1.3}};
        for (int n = 1; n <= 3; ++n) {
            const auto& tt = trip[n - 1];
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "S^%d h(%g,%g,%g)", 4 * n + 3, tt[0], tt[1],
                          tt[2]);
            const MetricSpec h = MetricSpec::quat(n, tt[0], tt[1], tt[2], Quotient::Sphere);
            const Lambda1 lam = lambda1(h);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1 (truncated-spectrum route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            const ABCSParams par = to_abcs(h);
            cell(T, rowbuf, "scal (sigma route)", close(scal(h), scal_sigma(n, par)), scal(h),
                 scal_sigma(n, par));
            cell(T, rowbuf, "volume (sigma route)", close(volume(h), vol_sigma(n, par)),
                 volume(h), vol_sigma(n, par));
        }
    }

    {
        const double trip[3][3] = {{0.5, 1.0, 1.5}, {0.8, 1.2, 2.0}, {2.0, 3.0, 4.0}};
        for (const auto& tt : trip) {
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "S^3 h(%g,%g,%g)", tt[0], tt[1], tt[2]);
            const MetricSpec h = MetricSpec::quat(0, tt[0], tt[1], tt[2], Quotient::Sphere);
            const Lambda1 lam = lambda1(h);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1 (nu-spectrum route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            const TriAxis ax = s3_axes(h);
            const SymTriple sig = sym_triple(ax);
            const double scal_abc =
                4.0 * sig.s1 - 2.0 * (sig.s2 * sig.s2 - 2.0 * sig.s1 * sig.s3) / sig.s3;
            cell(T, rowbuf, "scal (sigma route)", close(scal(h), scal_abc), scal(h), scal_abc);
            const double vol_abc = 2.0 * std::numbers::pi * std::numbers::pi / std::sqrt(sig.s3);
            cell(T, rowbuf, "volume (sigma route)", close(volume(h), vol_abc), volume(h),
                 vol_abc);
        }
    }

    for (double t : {0.5, 1.0, 2.0}) {
        char rowbuf[64];
        std::snprintf(rowbuf, sizeof rowbuf, "S^15 k(%g)", t);
        const MetricSpec k = MetricSpec::spin9(t, Quotient::Sphere);
        const Lambda1 lam = lambda1(k);
        const Lambda1 brute = brute_lambda1(k); // series brute-min over all (k,l)
        cell(T, rowbuf, "lambda1 = series minimum",
             close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
             lam.value, brute.value);
        if (t == 1.0) {
            cell(T, rowbuf, "scal = round scal", close(scal(k), 210.0), scal(k), 210.0);
            cell(T, rowbuf, "volume = round volume",
                 close(volume(k), volume(MetricSpec::round_sphere(15))), volume(k),
                 volume(MetricSpec::round_sphere(15)));
        } else {
            const MetricSpec k1 = MetricSpec::spin9(1.0, Quotient::Sphere);
            cell(T, rowbuf, "volume / round = t^7",
                 close(volume(k) / volume(k1), std::pow(t, 7.0)), volume(k) / volume(k1),
                 std::pow(t, 7.0));
            const MetricSpec ks = MetricSpec::spin9(t, Quotient::Sphere, 2.0);
            cell(T, rowbuf, "scal homothety covariance", close(scal(ks) * 2.0, scal(k)),
                 scal(ks) * 2.0, scal(k));
        }
    }

    for (int ncp : {3, 4, 5}) {
        const std::string row = "CP^" + std::to_string(ncp) + " FS";
        const MetricSpec fs = MetricSpec::fs_cp(ncp);
        const Lambda1 lam = lambda1(fs);
        cell(T, row, "lambda1 = 4(n+1) (series route)", close(lam.value, brute_lambda1(fs).value),
             lam.value, 4.0 * (ncp + 1));
        if (ncp % 2 == 1) {
            const MetricSpec hc = MetricSpec::cp_check((ncp - 1) / 2, 1.0);
            const Lambda1 other = lambda1(hc);
            cell(T, row, "lambda1+mult (hcheck(1) route)",
                 close(lam.value, other.value) && lam.multiplicity == other.multiplicity,
                 lam.value, other.value);
            cell(T, row, "scal (hcheck(1) route)", close(scal(fs), scal(hc)), scal(fs),
                 scal(hc));
            cell(T, row, "volume (hcheck(1) route)", close(volume(fs), volume(hc)), volume(fs),
                 volume(hc));
            const ComparisonVerdict v = compare(fs, hc, 6.0 * lam.value);
            cell(T, row, "isospectral to hcheck(1) below cutoff", v.matched());
        } else {
            cell(T, row, "lambda1 mult = n(n+2)",
                 lam.multiplicity == static_cast<std::uint64_t>(ncp) * (ncp + 2),
                 static_cast<double>(lam.multiplicity), static_cast<double>(ncp) * (ncp + 2));
            cell(T, row, "scal = 4n(n+1)", close(scal(fs), 4.0 * ncp * (ncp + 1)), scal(fs),
                 4.0 * ncp * (ncp + 1));
        }
    }
    {
        // CP^1 with curvature in [1,4] is the round 2-sphere of radius 1/2.
        const ComparisonVerdict v =
            compare(MetricSpec::fs_cp(1), MetricSpec::round_sphere(2, 0.25), 200.0);
        cell(T, "CP^1 FS", "isospectral to S^2 * scale 1/4", v.matched());
    }

    {
        const int ns[3] = {1, 2, 3};
        const double ts[3] = {0.7, 1.5, 0.9};
        for (int i = 0; i < 3; ++i) {
            const int n = ns[i];
            const double t = ts[i];
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "CP^%d hcheck(%g)", 2 * n + 1, t);
            const MetricSpec hc = MetricSpec::cp_check(n, t);
            const Lambda1 lam = lambda1(hc);
            const Lambda1 brute = brute_lambda1(hc);
            cell(T, rowbuf, "lambda1 (truncated-spectrum route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            // S^1-bundle volume relation over the same base.
            const MetricSpec tot = MetricSpec::quat(n, 0.37, t, t, Quotient::Sphere);
            cell(T, rowbuf, "volume via S^1-bundle relation",
                 close(volume(tot), 2.0 * std::numbers::pi * 0.37 * volume(hc)), volume(tot),
                 2.0 * std::numbers::pi * 0.37 * volume(hc));
            const MetricSpec hcs = MetricSpec::cp_check(n, t, 3.0);
            cell(T, rowbuf, "scal homothety covariance", close(scal(hcs) * 3.0, scal(hc)),
                 scal(hcs) * 3.0, scal(hc));
        }
    }

    for (int n : {1, 2, 3}) {
        const std::string row = "HP^" + std::to_string(n) + " FS";
        const MetricSpec fs = MetricSpec::fs_hp(n);
        const Lambda1 lam = lambda1(fs);
        cell(T, row, "lambda1 = Casimir of (1,1)",
             close(lam.value, casimir_scalar(n, {1, 1})), lam.value,
             casimir_scalar(n, {1, 1}));
        cell(T, row, "lambda1 mult = d_{1,1}", lam.multiplicity == dim_pq(n, {1, 1}),
             static_cast<double>(lam.multiplicity), static_cast<double>(dim_pq(n, {1, 1})));
        ABCSParams unit{1, 1, 1, 1};
        const double lvl2 = eigenvalue_pqj(n, {2, 2}, 1, unit);
        const SpectrumSlice hp_slice = truncated_spectrum(fs, 1.05 * lvl2);
        cell(T, row, "level 2 = basic eigenvalue (2,2)",
             hp_slice.levels.size() >= 3 && close(hp_slice.levels[2].value, lvl2),
             hp_slice.levels.size() >= 3 ? hp_slice.levels[2].value : -1.0, lvl2);
        if (n == 1) {
            const ComparisonVerdict v = compare(fs, MetricSpec::round_sphere(4, 0.25), 300.0);
            cell(T, row, "isospectral to S^4 * scale 1/4", v.matched());
        }
    }

    {
        const MetricSpec cap = MetricSpec::fs_cayley();
        const Lambda1 lam = lambda1(cap);
        const Lambda1 brute = brute_lambda1(cap);
        cell(T, "CaP^2 FS", "lambda1 = 48, mult 26 (series route)",
             close(lam.value, brute.value) && brute.multiplicity == 26 &&
                 lam.multiplicity == 26,
             brute.value, 48.0);
        cell(T, "CaP^2 FS", "scal / lambda1 = 12", close(scal(cap) / lam.value, 12.0),
             scal(cap) / lam.value, 12.0);
        // The five dimension-16 CROSSes have pairwise distinct scal/lambda1.
        const double r1 = scal(MetricSpec::round_sphere(16)) /
                          lambda1(MetricSpec::round_sphere(16)).value;
        const double r2 = scal(MetricSpec::round_projective(16)) /
                          lambda1(MetricSpec::round_projective(16)).value;
        const double r3 = scal(MetricSpec::fs_cp(8)) / lambda1(MetricSpec::fs_cp(8)).value;
        const double r4 = scal(MetricSpec::fs_hp(4)) / lambda1(MetricSpec::fs_hp(4)).value;
        const double r5 = scal(cap) / lam.value;
        const double rs[5] = {r1, r2, r3, r4, r5};
        bool distinct = true;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (close(rs[i], rs[j], 1e-6)) distinct = false;
        cell(T, "CaP^2 FS", "dim-16 heat ratios pairwise distinct", distinct);
    }
}

// ---- Table 2: projective quotients --------------------------------------------

void table2() {
    const char* T = "table2";

    for (int d : {7, 11, 15}) {
        const int m = (d - 3) / 4;
        const std::string row = "RP^" + std::to_string(d) + " round";
        const MetricSpec rp = MetricSpec::round_projective(d);
        const MetricSpec h1 = MetricSpec::quat(m, 1, 1, 1, Quotient::Projective);
        const Lambda1 lam = lambda1(rp);
        const Lambda1 brute = brute_lambda1(h1);
        cell(T, row, "lambda1 = 2(d+1) (rep-enum route)",
             close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
             lam.value, brute.value);
        cell(T, row, "volume = sphere/2",
             close(volume(rp), 0.5 * volume(MetricSpec::round_sphere(d))), volume(rp),
             0.5 * volume(MetricSpec::round_sphere(d)));
        cell(T, row, "scal equals sphere", close(scal(rp), scal(MetricSpec::round_sphere(d))),
             scal(rp), scal(MetricSpec::round_sphere(d)));
    }

    {
        const double ts[3] = {0.6, 1.4, 0.8};
        const int ns[3] = {1, 3, 5};
        for (int i = 0; i < 3; ++i) {
            const int n = ns[i], d = 2 * n + 1;
            const double t = ts[i];
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "RP^%d g(%g)", d, t);
            const MetricSpec g = MetricSpec::berger(n, t, Quotient::Projective);
            const MetricSpec h = MetricSpec::quat((d - 3) / 4, t, 1, 1, Quotient::Projective);
            const Lambda1 lam = lambda1(g);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1+mult (h(t,1,1) route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            cell(T, rowbuf, "volume = sphere/2",
                 close(volume(g), 0.5 * volume(MetricSpec::berger(n, t, Quotient::Sphere))),
                 volume(g), 0.5 * volume(MetricSpec::berger(n, t, Quotient::Sphere)));
        }
    }

    {
        const double trip[3][3] = {{0.7, 1.1, 1.6}, {0.5, 0.9, 2.2}, {0.4, 1.2, 1.3}};
        for (int n = 1; n <= 3; ++n) {
            const auto& tt = trip[n - 1];
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "RP^%d h(%g,%g,%g)", 4 * n + 3, tt[0], tt[1],
                          tt[2]);
            const MetricSpec h = MetricSpec::quat(n, tt[0], tt[1], tt[2], Quotient::Projective);
            const Lambda1 lam = lambda1(h);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1+mult (truncated route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            const MetricSpec hs = MetricSpec::quat(n, tt[0], tt[1], tt[2], Quotient::Sphere);
            cell(T, rowbuf, "volume = sphere/2", close(volume(h), 0.5 * volume(hs)), volume(h),
                 0.5 * volume(hs));
            cell(T, rowbuf, "scal equals sphere", close(scal(h), scal(hs)), scal(h), scal(hs));
        }
    }

    {
        const double trip[3][3] = {{0.5, 1.0, 1.5}, {0.8, 1.2, 2.0}, {1.0, 1.0, 1.0}};
        for (const auto& tt : trip) {
            char rowbuf[64];
            std::snprintf(rowbuf, sizeof rowbuf, "RP^3 h(%g,%g,%g)", tt[0], tt[1], tt[2]);
            const MetricSpec h = MetricSpec::quat(0, tt[0], tt[1], tt[2], Quotient::Projective);
            const Lambda1 lam = lambda1(h);
            const Lambda1 brute = brute_lambda1(h);
            cell(T, rowbuf, "lambda1+mult (nu route)",
                 close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
                 lam.value, brute.value);
            const MetricSpec hs = MetricSpec::quat(0, tt[0], tt[1], tt[2], Quotient::Sphere);
            cell(T, rowbuf, "volume = sphere/2", close(volume(h), 0.5 * volume(hs)), volume(h),
                 0.5 * volume(hs));
        }
    }

    for (double t : {0.5, 1.0, 2.0}) {
        char rowbuf[64];
        std::snprintf(rowbuf, sizeof rowbuf, "RP^15 k(%g)", t);
        const MetricSpec k = MetricSpec::spin9(t, Quotient::Projective);
        const Lambda1 lam = lambda1(k);
        const Lambda1 brute = brute_lambda1(k);
        cell(T, rowbuf, "lambda1+mult = series minimum",
             close(lam.value, brute.value) && lam.multiplicity == brute.multiplicity,
             lam.value, brute.value);
        cell(T, rowbuf, "volume = sphere/2",
             close(volume(k), 0.5 * volume(MetricSpec::spin9(t, Quotient::Sphere))), volume(k),
             0.5 * volume(MetricSpec::spin9(t, Quotient::Sphere)));
    }
}

// ---- Table 3: Yamabe stability ranges ------------------------------------------

void table3() {
    const char* T = "table3";

    for (int d : {4, 9, 16}) {
        const std::string row = "S^" + std::to_string(d) + " round";
        cell(T, row, "degenerate stable",
             classify(MetricSpec::round_sphere(d)).classification == YamabeClass::Degenerate);
        cell(T, "RP^" + std::to_string(d) + " round", "stable",
             classify(MetricSpec::round_projective(d)).classification ==
                 YamabeClass::StableNondegenerate);
    }

    {
        const int n = 2;
        cell(T, "S^5 g(t)", "stable at t=0.4",
             classify(MetricSpec::berger(n, 0.4, Quotient::Sphere)).classification ==
                 YamabeClass::StableNondegenerate);
        cell(T, "S^5 g(t)", "degenerate at t=1",
             classify(MetricSpec::berger(n, 1.0, Quotient::Sphere)).classification ==
                 YamabeClass::Degenerate);
        cell(T, "S^5 g(t)", "stable at t=2.5",
             classify(MetricSpec::berger(n, 2.5, Quotient::Sphere)).classification ==
                 YamabeClass::StableNondegenerate);
        for (double t : {0.3, 1.0, 2.5})
            cell(T, "RP^5 g(t)", "stable at t=" + std::to_string(t),
                 classify(MetricSpec::berger(n, t, Quotient::Projective)).classification ==
                     YamabeClass::StableNondegenerate);
    }

    for (int n : {1, 2}) {
        const std::string rs = "S^" + std::to_string(4 * n + 3) + " h";
        const std::string rr = "RP^" + std::to_string(4 * n + 3) + " h";
        const double pts[3][3] = {{2.0, 2.0, 2.0}, {0.2, 0.2, 0.2}, {0.9, 1.0, 1.2}};
        for (const auto& tt : pts) {
            const double p = stability_poly(n, tt[0] * tt[0], tt[1] * tt[1], tt[2] * tt[2]);
            const auto cs = classify(MetricSpec::quat(n, tt[0], tt[1], tt[2], Quotient::Sphere));
            const auto cr =
                classify(MetricSpec::quat(n, tt[0], tt[1], tt[2], Quotient::Projective));
            char buf[96];
            std::snprintf(buf, sizeof buf, "poly criterion at (%g,%g,%g)", tt[0], tt[1], tt[2]);
            const bool want_stable = p > 0;
            cell(T, rs, buf,
                 (cs.classification == YamabeClass::StableNondegenerate) == want_stable &&
                     (cs.classification == YamabeClass::Unstable) == (p < 0));
            cell(T, rr, buf,
                 (cr.classification == YamabeClass::StableNondegenerate) == want_stable &&
                     (cr.classification == YamabeClass::Unstable) == (p < 0));
        }
        cell(T, rs, "degenerate exception at (1,1,1)",
             classify(MetricSpec::quat(n, 1, 1, 1, Quotient::Sphere)).classification ==
                 YamabeClass::Degenerate);
        cell(T, rr, "stable at (1,1,1), no exception",
             classify(MetricSpec::quat(n, 1, 1, 1, Quotient::Projective)).classification ==
                 YamabeClass::StableNondegenerate);
    }

    {
        cell(T, "S^3 h", "stable at (0.5,1,2)",
             classify(MetricSpec::quat(0, 0.5, 1, 2, Quotient::Sphere)).classification ==
                 YamabeClass::StableNondegenerate);
        cell(T, "S^3 h", "stable at (1,1,2)",
             classify(MetricSpec::quat(0, 1, 1, 2, Quotient::Sphere)).classification ==
                 YamabeClass::StableNondegenerate);
        cell(T, "S^3 h", "degenerate at (1,1,1)",
             classify(MetricSpec::quat(0, 1, 1, 1, Quotient::Sphere)).classification ==
                 YamabeClass::Degenerate);
        const double pts[3][3] = {{0.5, 1, 2}, {1, 1, 1}, {2, 3, 4}};
        for (const auto& tt : pts) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "stable at (%g,%g,%g)", tt[0], tt[1], tt[2]);
            cell(T, "RP^3 h", buf,
                 classify(MetricSpec::quat(0, tt[0], tt[1], tt[2], Quotient::Projective))
                         .classification == YamabeClass::StableNondegenerate);
        }
    }

    {
        const double want = std::sqrt(0.5 * (std::sqrt(19.0) - 4.0));
        for (Quotient q : {Quotient::Sphere, Quotient::Projective}) {
            const std::string row = q == Quotient::Sphere ? "S^15 k(t)" : "RP^15 k(t)";
            const double got =
                bisect_gap([&](double t) { return MetricSpec::spin9(t, q); }, 0.2, 0.9);
            cell(T, row, "threshold sqrt((sqrt19-4)/2) via bisection",
                 std::abs(got - want) <= 1e-6, got, want);
            cell(T, row, "unstable at t=0.3",
                 classify(MetricSpec::spin9(0.3, q)).classification == YamabeClass::Unstable);
            cell(T, row, "stable at t=0.7",
                 classify(MetricSpec::spin9(0.7, q)).classification ==
                     YamabeClass::StableNondegenerate);
        }
        cell(T, "S^15 k(t)", "degenerate at t=1",
             classify(MetricSpec::spin9(1.0, Quotient::Sphere)).classification ==
                 YamabeClass::Degenerate);
        cell(T, "RP^15 k(t)", "stable at t=1",
             classify(MetricSpec::spin9(1.0, Quotient::Projective)).classification ==
                 YamabeClass::StableNondegenerate);
    }

    {
        cell(T, "CP^1 FS", "degenerate stable",
             classify(MetricSpec::fs_cp(1)).classification == YamabeClass::Degenerate);
        for (int n : {2, 3})
            cell(T, "CP^" + std::to_string(n) + " FS", "stable",
                 classify(MetricSpec::fs_cp(n)).classification ==
                     YamabeClass::StableNondegenerate);
        cell(T, "HP^1 FS", "degenerate stable",
             classify(MetricSpec::fs_hp(1)).classification == YamabeClass::Degenerate);
        for (int n : {2, 3})
            cell(T, "HP^" + std::to_string(n) + " FS", "stable",
                 classify(MetricSpec::fs_hp(n)).classification ==
                     YamabeClass::StableNondegenerate);
        cell(T, "CaP^2 FS", "stable",
             classify(MetricSpec::fs_cayley()).classification ==
                 YamabeClass::StableNondegenerate);
    }

    for (int n : {1, 2, 3}) {
        const std::string row = "CP^" + std::to_string(2 * n + 1) + " hcheck(t)";
        const double want = cp_critical_t(n);
        const double got =
            bisect_gap([&](double t) { return MetricSpec::cp_check(n, t); }, 0.05, 0.95);
        cell(T, row, "threshold t_* via bisection", std::abs(got - want) <= 1e-6, got, want);
        cell(T, row, "stable above t_*",
             classify(MetricSpec::cp_check(n, want + 1e-3)).classification ==
                 YamabeClass::StableNondegenerate);
        cell(T, row, "unstable below t_*",
             classify(MetricSpec::cp_check(n, want - 1e-3)).classification ==
                 YamabeClass::Unstable);
    }
}

} // namespace

int run_tables(int which) {
    g_failures = 0;
    if (which == 0 || which == 1) table1();
    if (which == 0 || which == 2) table2();
    if (which == 0 || which == 3) table3();
    std::printf("%s: %d cell(s) failed\n", g_failures ? "FAIL" : "OK", g_failures);
    return g_failures;
}
