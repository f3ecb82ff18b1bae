#pragma once

#include "cross/metric.hpp"
#include "cross/spectrum.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cross {

// Fast-rejection fingerprint: the spectrum of a homogeneous space determines
// its volume and total scalar curvature through the first two heat invariants.
struct HeatInvariants {
    double volume = 0.0;
    double scal = 0.0;
    int dimension = 0;
};

HeatInvariants heat_invariants(const MetricSpec& spec);

struct ComparisonVerdict {
    enum class Outcome { MatchUpToCutoff, DifferAt, InvariantMismatch };
    enum class Invariant { Volume, Scal, Dimension };

    Outcome outcome = Outcome::MatchUpToCutoff;
    Invariant which = Invariant::Volume; // for InvariantMismatch
    std::size_t level_index = 0;         // for DifferAt: first discrepant level
    double value_a = 0.0;
    double value_b = 0.0;

    bool matched() const { return outcome == Outcome::MatchUpToCutoff; }
    std::string str() const;
};

// Invariant fingerprint first, then multiset comparison of truncated spectra
// (values paired within tol, multiplicities exact).
ComparisonVerdict compare(const MetricSpec& a, const MetricSpec& b, double cutoff,
                          double tol = 1e-8);

// ---- empirical rigidity probe -------------------------------------------------

struct ProbeOptions {
    int n = 1;
    Quotient quotient_a = Quotient::Sphere;
    Quotient quotient_b = Quotient::Sphere;
    int samples = 500;
    double cutoff = 0.0; // 0 = automatic 4 * max(lambda1) per pair
    double tol = 1e-8;
    std::uint64_t seed = 1;
    double t_min = 0.1; // log-uniform sampling range for the t_i
    double t_max = 10.0;
};

struct ProbeCandidate {
    std::size_t sample_index = 0;
    std::array<double, 3> t_a{};
    std::array<double, 3> t_b{};
    double cutoff_used = 0.0;
};

struct ProbeReport {
    ProbeOptions options;
    std::size_t identical_pairs = 0;  // parameter-identical draws, excluded
    std::size_t volume_rejections = 0;
    std::size_t scal_rejections = 0;
    std::size_t spectrum_rejections = 0;
    std::vector<ProbeCandidate> candidates; // matches that are NOT identical

    std::string to_json() const;
};

// Draws `samples` parameter pairs for h-metrics on S^{4n+3}/RP^{4n+3}
// (canonicalized so isometric implies identical parameters), compares their
// truncated spectra, and reports any non-identical pair that matches up to
// the cutoff. Deterministic for a fixed seed.
ProbeReport rigidity_probe(const ProbeOptions& opts);

// Same probe over caller-supplied parameter pairs (used to plant controls).
ProbeReport rigidity_probe_pairs(
    const ProbeOptions& opts,
    const std::vector<std::pair<std::array<double, 3>, std::array<double, 3>>>& pairs);

} // namespace cross
