#pragma once

#include "cross/metric.hpp"
#include "cross/rep_enum.hpp"
#include "cross/su2_rep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cross {

// Provenance of one summand of a spectrum level: either the j-th eigenvalue
// of the endomorphism on V_{p,q}, or a (k,l) cell of a closed-form series
// (l = -1 marks a pure k-series such as a round sphere).
struct EigLabel {
    enum class Kind { Rep, Series };
    Kind kind = Kind::Series;
    int p = 0, q = 0, j = 0;
    int k = 0, l = -1;

    static EigLabel rep(int p, int q, int j) { return {Kind::Rep, p, q, j, 0, -1}; }
    static EigLabel series(int k, int l = -1) { return {Kind::Series, 0, 0, 0, k, l}; }
    std::string str() const;
    bool operator==(const EigLabel&) const = default;
};

struct SpectrumLevel {
    double value = 0.0;
    std::uint64_t multiplicity = 0;
    std::vector<EigLabel> labels;
};

// Truncated Laplace spectrum: strictly increasing values, entries within the
// merge tolerance coalesced with multiplicities summed and labels concatenated.
struct SpectrumSlice {
    double cutoff = 0.0;
    std::vector<SpectrumLevel> levels;

    std::uint64_t total_multiplicity() const;
    // Index of the first level with value above the zero band, or npos.
    std::size_t first_positive() const;
};

struct SpectrumOptions {
    double merge_rel_tol = 1e-9;
    double merge_abs_tol = 1e-12;
    // Resource caps; exceeding any of them raises resource_error.
    std::uint64_t max_entries = 4'000'000;
    int max_series_k = 200'000;
    int max_rep_p = 20'000;
    // Disables the nu-lower-bound cell pruning (used to verify completeness).
    bool prune = true;
};

// lambda_j^{(p,q)}(a,b,c,s) = (4pn + 4q(p+n+1)) s^2 + 2 nu_j^{(p-q)}(a,b,c).
double eigenvalue_pqj(int n, RepLabel label, int j, const ABCSParams& params);

// lambda-check^{(p,q)}(b,s) = (4pn + 4q(p+n+1)) s^2 + 2(p-q)(p-q+2) b^2,
// defined for p - q even.
double eigenvalue_cp(int n, RepLabel label, double b, double s);

// All eigenvalues <= cutoff with exact multiplicities, for every family.
// Full spectra of BergerG in dimensions d = 1 mod 4 have no supported closed
// description and raise unsupported_error.
SpectrumSlice truncated_spectrum(const MetricSpec& spec, double cutoff,
                                 const SpectrumOptions& opts = {});

struct Lambda1 {
    double value = 0.0;
    std::uint64_t multiplicity = 0;
    std::string branch; // names the argmin among the closed-form candidates
};

// Closed-form smallest positive eigenvalue with its multiplicity case table.
Lambda1 lambda1(const MetricSpec& spec);

// Closed-form full spectra: QuatH with t1 = t2 = t3, CPCheckH, BergerG in
// dimensions 3 mod 4, Round, and Spin9K. Other inputs raise unsupported_error.
SpectrumSlice full_spectrum_closed(const MetricSpec& spec, double cutoff,
                                   const SpectrumOptions& opts = {});

// Union over k of nu_j^{(k)}(axes), each value with multiplicity k+1
// (projective quotient keeps even k only).
SpectrumSlice s3_spectrum(const TriAxis& axes, Quotient quotient, double cutoff,
                          const SpectrumOptions& opts = {});

// Multiset equality of two slices: values paired within tol, multiplicities
// exact. Levels within the guard band of the cutoff are ignored.
bool slices_match(const SpectrumSlice& a, const SpectrumSlice& b, double tol,
                  std::size_t* first_mismatch = nullptr);

} // namespace cross
