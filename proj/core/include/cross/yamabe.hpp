#pragma once

#include "cross/metric.hpp"
#include "cross/spectrum.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cross {

enum class YamabeClass { StableNondegenerate, Degenerate, Unstable };

// Classification of a constant-scalar-curvature homogeneous metric as a
// solution to the Yamabe problem, driven by the sign of the Jacobi gap
// lambda_1 - scal/(dim-1).
struct StabilityReport {
    double lambda1 = 0.0;
    std::uint64_t lambda1_multiplicity = 0;
    std::string lambda1_branch;
    double scal = 0.0;
    double jacobi_gap = 0.0;
    YamabeClass classification = YamabeClass::StableNondegenerate;
    std::uint64_t morse_index = 0; // nonzero only when Unstable
    std::uint64_t kernel_dim = 0;  // coalesced multiplicity at the threshold
};

std::string classification_name(YamabeClass c);

// p(x, y, z) = x^2+y^2+z^2 - 2(xy+xz+yz) + 2n(x+y+z)xyz + 8(n^2+n+1)xyz,
// in the squared parameters (x, y, z) = (t1^2, t2^2, t3^2). Positive exactly
// on the stable set (with the (1,1,1) sphere exception).
double stability_poly(int n, double x, double y, double z);

StabilityReport classify(const MetricSpec& spec);

struct MorseResult {
    std::uint64_t index = 0;      // eigenvalues strictly below scal/(dim-1)
    std::uint64_t kernel_dim = 0; // eigenvalues within tolerance of the threshold
};

// Multiplicity-counted nonzero Laplace eigenvalues below scal/(dim-1).
MorseResult morse_index(const MetricSpec& spec);

// Sampled point of the stability boundary surface Sigma_n.
struct BoundaryPoint {
    double t1, t2, t3; // parameters, t_i = sqrt of the coordinates below
    double x, y, z;    // point on Sigma_n
    double p_residual; // stability_poly at (x, y, z)
};

struct BoundaryMesh {
    int n = 1;
    std::vector<BoundaryPoint> points;
    std::string warning; // set when the mesh came out empty

    void write_csv(std::ostream& os) const;
    void write_obj(std::ostream& os) const; // Wavefront point cloud of (t1,t2,t3)
};

// Samples Sigma_n through the (sigma1, sigma3) chart of its symmetric-
// polynomial graph and emits all S3-orbit images. resolution is the grid
// size per chart axis.
BoundaryMesh boundary_mesh(int n, int resolution);

struct Crossing {
    std::size_t index = 0;        // p changes sign between samples index, index+1
    std::array<double, 3> t{};    // refined crossing parameters
    double p_residual = 0.0;
};

// Sign changes of the stability polynomial along a sampled parameter curve,
// each refined by bisection on the connecting segment to |p| <= 1e-10.
std::vector<Crossing> bifurcation_scan(int n, const std::vector<std::array<double, 3>>& curve,
                                       Quotient quotient);

// Endpoint of the boundary accumulation segment on each coordinate plane:
// (sqrt((n^3+n^2+2n+1)(n+1)) - (n^2+n+1)) / n.
double ell_n(int n);

// First bifurcation parameter of hcheck(t) on CP^{2n+1}: stable iff t > t_*.
double cp_critical_t(int n);

} // namespace cross
