#pragma once

#include <array>
#include <vector>

namespace cross {

// Axis lengths of a left-invariant diagonal inner product on sp(1) ~ su(2).
// Canonicalized to a >= b >= c > 0; every quantity computed from a TriAxis is
// invariant under permuting the inputs, so the original order is never kept.
class TriAxis {
public:
    TriAxis(double a, double b, double c);

    double a() const { return v_[0]; }
    double b() const { return v_[1]; }
    double c() const { return v_[2]; }
    const std::array<double, 3>& values() const { return v_; }

    bool operator==(const TriAxis&) const = default;

private:
    std::array<double, 3> v_;
};

// The (k+1) x (k+1) matrix of tau_k(-a^2 X1^2 - b^2 X2^2 - c^2 X3^2) in the
// monomial basis. Nonzero entries sit on the diagonal and two steps off it:
//   diag[j]  = m_{j,j}   = (k-2j)^2 a^2 + ((2j+1)k - 2j^2)(b^2+c^2)
//   upper[j] = m_{j,j+2} = -(j+1)(j+2)(b^2-c^2)          (column j+2 rule)
//   lower[j] = m_{j+2,j} = -(k-1-j)(k-j)(b^2-c^2)
// The basis is orthogonal but not orthonormal, so the matrix is not symmetric;
// it is similar to a positive-semidefinite symmetric matrix.
struct TauMatrix {
    int k = 0;
    std::vector<double> diag;  // size k+1
    std::vector<double> upper; // size max(k-1, 0), upper[j] at (j, j+2)
    std::vector<double> lower; // size max(k-1, 0), lower[j] at (j+2, j)

    int size() const { return k + 1; }
    double at(int i, int j) const; // dense accessor, zero off the pattern
};

enum class NuMethod {
    Auto,        // closed forms when axes are degenerate, tridiagonal otherwise
    Tridiagonal, // force the parity-block tridiagonal path
    ClosedForm,  // force eq-style closed forms; requires b == c
};

struct NuOptions {
    NuMethod method = NuMethod::Auto;
    // Hard cap on k to bound memory; configurable.
    int k_cap = 10000;
    // |b - c| <= degenerate_rel_tol * max(b, c) dispatches to the closed form.
    double degenerate_rel_tol = 1e-12;
};

// Eigenvalues nu_1 <= ... <= nu_{k+1} of tau_k(-a^2X1^2 - b^2X2^2 - c^2X3^2).
struct NuSpectrum {
    int k = 0;
    std::vector<double> values; // sorted ascending, size k+1
};

TauMatrix tau_matrix(int k, const TriAxis& axes);

NuSpectrum nu_spectrum(int k, const TriAxis& axes, const NuOptions& opts = {});

// 2k b^2 + k^2 c^2, improved to max with a^2 + (2k-1) b^2 + k^2 c^2 for odd k.
// Guaranteed <= nu_1^{(k)}.
double nu_lower_bound(int k, const TriAxis& axes);

// Smallest eigenvalue of the tau_4 operator in closed form:
//   8(a^2+b^2+c^2) - 8 sqrt(a^4+b^4+c^4 - a^2b^2 - a^2c^2 - b^2c^2) = 8 beta.
double nu1_quartic(const TriAxis& axes);

// sigma1 - sqrt(sigma1^2 - 3 sigma2) in the squared axes; nu1_quartic / 8.
double beta_quartic(const TriAxis& axes);

// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL,
// returned sorted ascending. off has size diag.size() - 1.
// Throws numeric_error if a row fails to converge or a value is non-finite.
std::vector<double> tridiag_eigenvalues(std::vector<double> diag, std::vector<double> off);

} // namespace cross
