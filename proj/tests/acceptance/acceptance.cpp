// Acceptance suite: one line per criterion, PASS/FAIL with timing.
// Exit status is the number of failed criteria.

#include "cross/geometry.hpp"
#include "cross/isospec.hpp"
#include "cross/rep_enum.hpp"
#include "cross/spectrum.hpp"
#include "cross/su2_rep.hpp"
#include "cross/yamabe.hpp"
#include "tables.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cross;
using oracles::rel_diff;

int g_failed = 0;

void criterion(int id, const char* title, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] criterion %d (%6.2fs / %gs): %s%s%s\n", ok ? "PASS" : "FAIL", id, secs,
                budget_s, title, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failed;
}

// ---- 1: round-sphere spectra ---------------------------------------------------

bool round_sphere_spectra(std::string& detail) {
    for (int d : {3, 7, 11, 15}) {
        const double cutoff = 10.0 * (10 + d - 1) + 0.5;
        const MetricSpec h_unit = MetricSpec::quat((d - 3) / 4, 1, 1, 1, Quotient::Sphere);
        const SpectrumSlice reps = truncated_spectrum(h_unit, cutoff);
        const SpectrumSlice series = truncated_spectrum(MetricSpec::round_sphere(d), cutoff);
        if (reps.levels.size() != 11 || series.levels.size() != 11) {
            detail = "wrong level count at d=" + std::to_string(d);
            return false;
        }
        for (int k = 0; k <= 10; ++k) {
            const double want = static_cast<double>(k) * (k + d - 1);
            const std::uint64_t mult = round_multiplicity(d, k);
            const auto& lr = reps.levels[static_cast<std::size_t>(k)];
            const auto& ls = series.levels[static_cast<std::size_t>(k)];
            if (std::abs(lr.value - want) > 1e-9 || std::abs(ls.value - want) > 1e-9 ||
                lr.multiplicity != mult || ls.multiplicity != mult) {
                detail = "level mismatch at d=" + std::to_string(d) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

// ---- 2: nu oracle equivalence --------------------------------------------------

bool nu_oracle_equivalence(std::string& detail) {
    std::mt19937_64 rng(20240501);
    NuOptions force_tri;
    force_tri.method = NuMethod::Tridiagonal;
    double worst_oracle = 0.0, worst_closed = 0.0;

    for (int sample = 0; sample < 200; ++sample) {
        const TriAxis ax = oracles::random_axes(rng, 0.2, 5.0);
        const double s1 = ax.a() * ax.a() + ax.b() * ax.b() + ax.c() * ax.c();
        for (int k = 0; k <= 50; ++k) {
            const auto got = nu_spectrum(k, ax, force_tri).values;
            const auto want = oracles::dense_nu(k, ax);
            for (std::size_t j = 0; j < want.size(); ++j)
                worst_oracle = std::max(worst_oracle, rel_diff(got[j], want[j]));

            // closed forms wherever applicable
            if (k == 1)
                for (int j = 0; j < 2; ++j)
                    worst_closed = std::max(worst_closed, rel_diff(got[j], s1));
            if (k == 2) {
                const double e[3] = {4 * (ax.b() * ax.b() + ax.c() * ax.c()),
                                     4 * (ax.a() * ax.a() + ax.c() * ax.c()),
                                     4 * (ax.a() * ax.a() + ax.b() * ax.b())};
                for (int j = 0; j < 3; ++j)
                    worst_closed = std::max(worst_closed, rel_diff(got[j], e[j]));
            }
            if (k == 4)
                worst_closed = std::max(worst_closed, rel_diff(got[0], nu1_quartic(ax)));
        }

        // two-parameter closed form, forced through the tridiagonal path
        const TriAxis axbb(ax.a(), ax.b(), ax.b());
        NuOptions closed;
        closed.method = NuMethod::ClosedForm;
        for (int k : {3, 10, 27, 50}) {
            const auto tri = nu_spectrum(k, axbb, force_tri).values;
            const auto cls = nu_spectrum(k, axbb, closed).values;
            for (std::size_t j = 0; j < tri.size(); ++j)
                worst_closed = std::max(worst_closed, rel_diff(tri[j], cls[j]));
        }
        // fully round closed form
        const TriAxis axaa(ax.a(), ax.a(), ax.a());
        for (int k : {5, 17}) {
            const auto tri = nu_spectrum(k, axaa, force_tri).values;
            for (double v : tri)
                worst_closed = std::max(
                    worst_closed, rel_diff(v, static_cast<double>(k) * (k + 2) * ax.a() * ax.a()));
        }
    }
    std::ostringstream os;
    os << "max rel err: oracle " << worst_oracle << ", closed " << worst_closed;
    detail = os.str();
    return worst_oracle < 1e-10 && worst_closed < 1e-12;
}

// ---- 3: closed-form first eigenvalue, brute-forced ---------------------------------

bool lambda1_brute_force(std::string& detail) {
    std::mt19937_64 rng(20240502);
    auto draw_t = [&] { return oracles::log_uniform(rng, 0.1, 10.0); };
    int checked = 0;
    for (int family = 0; family < 3; ++family) {
        for (int i = 0; i < 500; ++i) {
            const int n = 1 + i % 3;
            MetricSpec spec = MetricSpec::round_sphere(2);
            switch (family) {
            case 0: spec = MetricSpec::quat(n, draw_t(), draw_t(), draw_t(), Quotient::Sphere); break;
            case 1: spec = MetricSpec::quat(n, draw_t(), draw_t(), draw_t(), Quotient::Projective); break;
            case 2: spec = MetricSpec::cp_check(n, draw_t()); break;
            }
            const Lambda1 closed = lambda1(spec);
            const SpectrumSlice slice = truncated_spectrum(spec, 1.1 * closed.value);
            const std::size_t idx = slice.first_positive();
            if (idx == static_cast<std::size_t>(-1)) {
                detail = "no positive level found";
                return false;
            }
            if (rel_diff(closed.value, slice.levels[idx].value) > 1e-9 ||
                closed.multiplicity != slice.levels[idx].multiplicity) {
                std::ostringstream os;
                os << "mismatch: family " << family << " n " << n << " closed ("
                   << closed.value << "," << closed.multiplicity << ") brute ("
                   << slice.levels[idx].value << "," << slice.levels[idx].multiplicity << ")";
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " specs";
    return true;
}

// ---- 4: full-spectrum series identities --------------------------------------------------

bool full_spectrum_series(std::string& detail) {
    for (int n : {1, 2}) {
        for (double t : {0.3, 1.0, 2.5}) {
            for (Quotient q : {Quotient::Sphere, Quotient::Projective}) {
                const MetricSpec ttt = MetricSpec::quat(n, t, t, t, q);
                if (!slices_match(truncated_spectrum(ttt, 100.0),
                                  full_spectrum_closed(ttt, 100.0), 1e-9)) {
                    detail = "h(t,t,t) mismatch";
                    return false;
                }
                const MetricSpec h = MetricSpec::quat(n, t, 1, 1, q);
                const MetricSpec g = MetricSpec::berger(2 * n + 1, t, q);
                if (!slices_match(truncated_spectrum(h, 100.0),
                                  full_spectrum_closed(g, 100.0), 1e-9)) {
                    detail = "h(t,1,1) vs eta series mismatch";
                    return false;
                }
            }
            const MetricSpec cp = MetricSpec::cp_check(n, t);
            if (!slices_match(truncated_spectrum(cp, 100.0),
                              full_spectrum_closed(cp, 100.0), 1e-9)) {
                detail = "hcheck mismatch";
                return false;
            }
        }
    }
    return true;
}

// ---- 5: Weyl identity ------------------------------------------------------------

bool weyl_identity(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        const int d = 4 * n + 3;
        for (int k = 0; k <= 30; ++k) {
            std::uint64_t total = 0;
            for (int p = (k + 1) / 2; p <= k; ++p)
                total += static_cast<std::uint64_t>(2 * p - k + 1) * dim_pq(n, {p, k - p});
            if (total != round_multiplicity(d, k)) {
                detail = "identity fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

// ---- 6: stability equivalence ------------------------------------------------------

bool stability_equivalence(std::string& detail) {
    std::mt19937_64 rng(20240503);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + i % 3;
        const double t1 = oracles::log_uniform(rng, 0.1, 10.0);
        const double t2 = oracles::log_uniform(rng, 0.1, 10.0);
        const double t3 = oracles::log_uniform(rng, 0.1, 10.0);
        const double p = stability_poly(n, t1 * t1, t2 * t2, t3 * t3);
        for (Quotient q : {Quotient::Sphere, Quotient::Projective}) {
            const MetricSpec spec = MetricSpec::quat(n, t1, t2, t3, q);
            const double gap = (4.0 * n + 2) * lambda1(spec).value - scal(spec);
            if ((gap > 0) != (p > 0)) ++disagreements;
        }
    }
    // the round sphere is the exact exception: p > 0 yet the gap vanishes
    for (int n : {1, 2, 3}) {
        const MetricSpec sphere = MetricSpec::quat(n, 1, 1, 1, Quotient::Sphere);
        const MetricSpec proj = MetricSpec::quat(n, 1, 1, 1, Quotient::Projective);
        const double gap_s = (4.0 * n + 2) * lambda1(sphere).value - scal(sphere);
        const double gap_p = (4.0 * n + 2) * lambda1(proj).value - scal(proj);
        if (std::abs(gap_s) > 1e-9 || gap_p <= 0 || stability_poly(n, 1, 1, 1) <= 0)
            ++disagreements;
    }
    detail = std::to_string(disagreements) + " disagreements";
    return disagreements == 0;
}

// ---- 7: thresholds -----------------------------------------------------------------

bool thresholds(std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    auto bisect = [](const std::function<double(double)>& f, double lo, double hi) {
        double flo = f(lo);
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((flo < 0) == (fm < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    const double cp_want = cp_critical_t(1);
    const double cp_got = bisect(
        [](double t) {
            const MetricSpec s = MetricSpec::cp_check(1, t);
            return lambda1(s).value - scal(s) / (s.dimension() - 1);
        },
        0.1, 0.9);
    os << "cp " << cp_got;
    if (std::abs(cp_got - cp_want) > 1e-6 || std::abs(cp_want - 0.485868) > 1e-6) ok = false;

    const double spin_want = std::sqrt(0.5 * (std::sqrt(19.0) - 4.0));
    const double spin_got = bisect(
        [](double t) {
            const MetricSpec s = MetricSpec::spin9(t, Quotient::Sphere);
            return lambda1(s).value - scal(s) / 14.0;
        },
        0.2, 0.9);
    os << ", spin9 " << spin_got;
    if (std::abs(spin_got - spin_want) > 1e-6) ok = false;

    std::vector<std::array<double, 3>> diag;
    for (double t = 1.0; t >= 0.0999; t -= 0.1) diag.push_back({t, t, t});
    const auto crossings = bifurcation_scan(1, diag, Quotient::Sphere);
    const double diag_want = std::sqrt((-8.0 + std::sqrt(72.0)) / 4.0);
    if (crossings.size() != 1 || std::abs(crossings[0].t[0] - diag_want) > 1e-6) ok = false;
    if (!crossings.empty()) os << ", diag " << crossings[0].t[0];

    // boundary-branch limit of the x = y section as z -> 0
    const double ell_want = std::sqrt(10.0) - 3.0;
    const double z0 = 1e-6;
    const double ell_got = bisect(
        [&](double x) { return stability_poly(1, x, x, z0); }, 0.05, 0.6);
    os << ", ell " << ell_got;
    if (std::abs(ell_got - ell_want) > 1e-4 || std::abs(ell_n(1) - ell_want) > 1e-12)
        ok = false;

    detail = os.str();
    return ok;
}

// ---- 8: rigidity probe ----------------------------------------------------------------

bool rigidity(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    const std::pair<Quotient, Quotient> combos[3] = {
        {Quotient::Sphere, Quotient::Sphere},
        {Quotient::Sphere, Quotient::Projective},
        {Quotient::Projective, Quotient::Projective},
    };
    const char* names[3] = {"S-S", "S-RP", "RP-RP"};
    for (int i = 0; i < 3; ++i) {
        ProbeOptions opts;
        opts.n = 1;
        opts.samples = 500;
        opts.seed = 424242 + static_cast<std::uint64_t>(i);
        opts.quotient_a = combos[i].first;
        opts.quotient_b = combos[i].second;
        const ProbeReport report = rigidity_probe(opts);
        os << names[i] << ": " << report.candidates.size() << " candidates";
        if (!report.candidates.empty()) ok = false;
        if (i == 1) {
            os << " (" << report.volume_rejections << " volume rejections)";
            if (report.volume_rejections != 500) ok = false;
        }
        os << "; ";
    }
    detail = os.str();
    return ok;
}

// ---- 9: table regression ----------------------------------------------------------------

bool tables_pass(std::string& detail) {
    int failures = 0;
    for (int which : {1, 2, 3}) failures += run_tables(which);
    detail = std::to_string(failures) + " failed cells";
    return failures == 0;
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion(1, "round-sphere spectra, d in {3,7,11,15}, k <= 10", 5.0, round_sphere_spectra);
    criterion(2, "nu tridiagonal path vs dense oracle and closed forms", 30.0,
              nu_oracle_equivalence);
    criterion(3, "closed-form lambda1 vs truncated spectra (500/family)", 120.0,
              lambda1_brute_force);
    criterion(4, "full-spectrum series vs representation route", 60.0, full_spectrum_series);
    criterion(5, "Weyl identity, exact integers", 5.0, weyl_identity);
    criterion(6, "stability polynomial vs spectral gap (1000 samples)", 60.0,
              stability_equivalence);
    criterion(7, "threshold constants by bisection", 10.0, thresholds);
    criterion(8, "rigidity probe, 500 pairs per quotient combination", 300.0, rigidity);
    criterion(9, "reference-table regression", 120.0, tables_pass);
    std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed;
}
