#include "cross/yamabe.hpp"

#include "cross/errors.hpp"
#include "cross/geometry.hpp"
#include "cross/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cross {

namespace {

double sq(double x) { return x * x; }

} // namespace

std::string classification_name(YamabeClass c) {
    switch (c) {
    case YamabeClass::StableNondegenerate: return "StableNondegenerate";
    case YamabeClass::Degenerate: return "Degenerate";
    case YamabeClass::Unstable: return "Unstable";
    }
    return "?";
}

double stability_poly(int n, double x, double y, double z) {
    if (n < 1) throw std::invalid_argument("stability_poly: n must be >= 1");
    // Sorting makes the evaluation bitwise S3-invariant, not just up to rounding.
    if (x < y) std::swap(x, y);
    if (y < z) std::swap(y, z);
    if (x < y) std::swap(x, y);
    const double xyz = x * y * z;
    return x * x + y * y + z * z - 2.0 * (x * y + x * z + y * z) +
           2.0 * n * (x + y + z) * xyz + 8.0 * (static_cast<double>(n) * n + n + 1) * xyz;
}

MorseResult morse_index(const MetricSpec& spec) {
    const double sc = scal(spec);
    const int dim = spec.dimension();
    const double threshold = sc / (dim - 1);
    MorseResult out;
    if (threshold <= 0.0) return out;

    const double band = 1e-9 * std::max(1.0, threshold);
    const SpectrumSlice slice = truncated_spectrum(spec, threshold + 2.0 * band);
    for (const auto& level : slice.levels) {
        if (level.value <= band) continue; // the zero eigenvalue
        if (level.value < threshold - band)
            out.index += level.multiplicity;
        else if (level.value <= threshold + band)
            out.kernel_dim += level.multiplicity;
    }
    return out;
}

StabilityReport classify(const MetricSpec& spec) {
    StabilityReport r;
    const Lambda1 l1 = lambda1(spec);
    r.lambda1 = l1.value;
    r.lambda1_multiplicity = l1.multiplicity;
    r.lambda1_branch = l1.branch;
    r.scal = scal(spec);
    const int dim = spec.dimension();
    const double threshold = r.scal / (dim - 1);
    r.jacobi_gap = r.lambda1 - threshold;

    const double tol = 1e-9 * std::max(1.0, std::abs(threshold));
    if (r.jacobi_gap > tol) {
        r.classification = YamabeClass::StableNondegenerate;
    } else if (r.jacobi_gap < -tol) {
        r.classification = YamabeClass::Unstable;
        const MorseResult m = morse_index(spec);
        r.morse_index = m.index;
        r.kernel_dim = m.kernel_dim;
    } else {
        r.classification = YamabeClass::Degenerate;
        // The coalesced eigenvalue multiplicity at the threshold; not claimed
        // to equal the full Jacobi kernel.
        r.kernel_dim = l1.multiplicity;
    }
    return r;
}

// ---- boundary surface --------------------------------------------------------

namespace {

// The sigma2 coordinate of Sigma_n over the (sigma1, sigma3) chart.
double sigma2_graph(int n, double s1, double s3) {
    return s1 * s1 / 4.0 + 0.5 * n * s1 * s3 + 2.0 * (static_cast<double>(n) * n + n + 1) * s3;
}

// Delta(s1, sigma2_graph(s1, s3), s3) / s3 is a concave quadratic in s3:
// q(s3) = c0 + c1 s3 + c2 s3^2 with v = n s1/2 + 2(n^2+n+1).
struct ChartQuadratic {
    double c0, c1, c2;
};

ChartQuadratic chart_quadratic(int n, double s1) {
    const double v = 0.5 * n * s1 + 2.0 * (static_cast<double>(n) * n + n + 1);
    return {s1 * s1 * s1 * (2.0 - v * s1) / 4.0,
            -2.0 * s1 * s1 * v * v + 18.0 * s1 * v - 27.0,
            -4.0 * v * v * v};
}

// Largest admissible sigma1: positive root of 2n s1^2 + 8(n^2+n+1) s1 - 9 = 0,
// beyond which the chart quadratic has no positive part.
double sigma1_max(int n) {
    const double K = static_cast<double>(n) * n + n + 1;
    return (-4.0 * K + std::sqrt(16.0 * K * K + 18.0 * n)) / (2.0 * n);
}

} // namespace

double ell_n(int n) {
    if (n < 1) throw std::invalid_argument("ell_n: n must be >= 1");
    const double nn = n;
    return (std::sqrt((nn * nn * nn + nn * nn + 2.0 * nn + 1.0) * (nn + 1.0)) -
            (nn * nn + nn + 1.0)) /
           nn;
}

double cp_critical_t(int n) {
    if (n < 1) throw std::invalid_argument("cp_critical_t: n must be >= 1");
    const double m = 2.0 * static_cast<double>(n) * n + n + 1.0;
    return std::sqrt((std::sqrt(m * m + 4.0 * n) - m) / (2.0 * n));
}

BoundaryMesh boundary_mesh(int n, int resolution) {
    if (n < 1) throw std::invalid_argument("boundary_mesh: n must be >= 1");
    if (resolution < 1) throw std::invalid_argument("boundary_mesh: resolution must be >= 1");

    BoundaryMesh mesh;
    mesh.n = n;

    const double s1_hi = sigma1_max(n) * (1.0 - 1e-9);
    const double s1_lo = s1_hi * 1e-4;
    const int rows = resolution;

    std::vector<std::vector<BoundaryPoint>> row_points(static_cast<std::size_t>(rows));
    parallel_for(static_cast<std::size_t>(rows), [&](std::size_t row) {
        const double f = rows == 1 ? 0.5 : static_cast<double>(row) / (rows - 1);
        const double s1 = s1_lo * std::pow(s1_hi / s1_lo, f);
        const ChartQuadratic quad = chart_quadratic(n, s1);
        const double disc = quad.c1 * quad.c1 - 4.0 * quad.c2 * quad.c0;
        if (disc <= 0.0) return; // no admissible sigma3 at this sigma1
        const double root = std::sqrt(disc);
        // c2 < 0: q > 0 between the roots.
        double lo = (-quad.c1 + root) / (2.0 * quad.c2);
        double hi = (-quad.c1 - root) / (2.0 * quad.c2);
        if (lo > hi) std::swap(lo, hi);
        hi *= 1.0 - 1e-9;
        // Log-uniform sigma3 samples over the admissible interval.
        const double floor_s3 = lo > 0.0 ? lo * (1.0 + 1e-9) : hi * 1e-8;
        if (!(hi > floor_s3)) return;
        auto& out = row_points[row];
        for (int i = 0; i < resolution; ++i) {
            const double g = resolution == 1 ? 0.5 : static_cast<double>(i) / (resolution - 1);
            const double s3 = floor_s3 * std::pow(hi / floor_s3, g);
            const double s2 = sigma2_graph(n, s1, s3);
            TriAxis axes(1, 1, 1);
            try {
                axes = sym_triple_inverse({s1, s2, s3});
            } catch (const numeric_error&) {
                continue; // chart point without three positive distinct roots
            }
            const double xyz[3] = {sq(axes.a()), sq(axes.b()), sq(axes.c())};
            // All six orbit images; the surface is S3-invariant.
            static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (const auto& pm : perms) {
                BoundaryPoint pt;
                pt.x = xyz[pm[0]];
                pt.y = xyz[pm[1]];
                pt.z = xyz[pm[2]];
                pt.t1 = std::sqrt(pt.x);
                pt.t2 = std::sqrt(pt.y);
                pt.t3 = std::sqrt(pt.z);
                pt.p_residual = stability_poly(n, pt.x, pt.y, pt.z);
                out.push_back(pt);
            }
        }
    });

    for (auto& row : row_points)
        mesh.points.insert(mesh.points.end(), row.begin(), row.end());
    if (mesh.points.empty())
        mesh.warning = "boundary_mesh: no admissible chart cells at this resolution";
    return mesh;
}

void BoundaryMesh::write_csv(std::ostream& os) const {
    os << "t1,t2,t3,x,y,z,p_residual\n";
    char line[256];
    for (const auto& p : points) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", p.t1,
                      p.t2, p.t3, p.x, p.y, p.z, p.p_residual);
        os << line;
    }
}

void BoundaryMesh::write_obj(std::ostream& os) const {
    os << "# stability boundary point cloud, n = " << n << "\n";
    char line[160];
    for (const auto& p : points) {
        std::snprintf(line, sizeof line, "v %.12g %.12g %.12g\n", p.t1, p.t2, p.t3);
        os << line;
    }
}

// ---- crossing detection --------------------------------------------------------

std::vector<Crossing> bifurcation_scan(int n, const std::vector<std::array<double, 3>>& curve,
                                       Quotient) {
    if (n < 1) throw std::invalid_argument("bifurcation_scan: n must be >= 1");
    for (const auto& t : curve)
        if (!(t[0] > 0.0) || !(t[1] > 0.0) || !(t[2] > 0.0))
            throw std::invalid_argument("bifurcation_scan: curve samples must be positive");

    auto p_at = [&](const std::array<double, 3>& t) {
        return stability_poly(n, sq(t[0]), sq(t[1]), sq(t[2]));
    };

    std::vector<Crossing> out;
    if (curve.size() < 2) return out;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        double pa = p_at(curve[i]);
        double pb = p_at(curve[i + 1]);
        if (pa == 0.0 || pa * pb > 0.0) continue;

        // Bisect along the connecting segment.
        double lo = 0.0, hi = 1.0;
        std::array<double, 3> tm = curve[i + 1];
        double pm = pb;
        for (int iter = 0; iter < 60; ++iter) {
            const double mid = 0.5 * (lo + hi);
            for (int c = 0; c < 3; ++c)
                tm[c] = curve[i][c] + mid * (curve[i + 1][c] - curve[i][c]);
            pm = p_at(tm);
            if (std::abs(pm) <= 1e-10) break;
            if (pa * pm <= 0.0)
                hi = mid;
            else
                lo = mid;
        }
        out.push_back({i, tm, pm});
    }
    return out;
}

} // namespace cross
