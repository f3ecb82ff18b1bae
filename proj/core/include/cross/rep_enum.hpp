#pragma once

#include <cstdint>
#include <vector>

namespace cross {

// Highest weight p*eps1 + q*eps2 of a spherical representation of Sp(n+1).
struct RepLabel {
    int p = 0;
    int q = 0;
    bool operator==(const RepLabel&) const = default;
};

enum class QuotientKind { Sphere, RealProjective, ComplexProjective };

// Exact dimension d_{p,q} by the Weyl dimension formula,
//   d_{p,q} = (p+q+2n+1)(p-q+1) / ((2n+1)(p+1)) * C(p+2n, p) * C(q+2n-1, q),
// computed multiply-before-divide in 128-bit arithmetic; the division is
// always exact. Overflow of the result type is an explicit error.
std::uint64_t dim_pq(int n, RepLabel label);

// Casimir scalar on V_{p,q}: 2p(p+2n+2) + 2q(q+2n). Zero iff (p,q) = (0,0).
double casimir_scalar(int n, RepLabel label);

// All labels p >= q >= 0 with p <= p_max obeying the parity rule of the
// quotient (RealProjective / ComplexProjective keep only p - q even),
// in lexicographic (p, q) order.
std::vector<RepLabel> spherical_reps(int n, QuotientKind kind, int p_max);

// Multiplicity of the k-th round-sphere eigenvalue: C(k+d, d) - C(k+d-2, d),
// with C(a, b) = 0 when a < b.
std::uint64_t round_multiplicity(int d, int k);

} // namespace cross
