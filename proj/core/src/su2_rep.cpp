#include "cross/su2_rep.hpp"

#include "cross/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cross {

TriAxis::TriAxis(double a, double b, double c) : v_{a, b, c} {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a + b + c))
        throw std::invalid_argument("TriAxis: axes must be positive finite reals");
    std::sort(v_.begin(), v_.end(), std::greater<double>());
}

double TauMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i > k || j > k) throw std::out_of_range("TauMatrix::at");
    if (i == j) return diag[static_cast<std::size_t>(j)];
    if (i + 2 == j) return upper[static_cast<std::size_t>(i)];
    if (i == j + 2) return lower[static_cast<std::size_t>(j)];
    return 0.0;
}

TauMatrix tau_matrix(int k, const TriAxis& axes) {
    if (k < 0) throw std::invalid_argument("tau_matrix: k must be nonnegative");
    const double a2 = axes.a() * axes.a();
    const double bc_sum = axes.b() * axes.b() + axes.c() * axes.c();
    const double bc_dif = axes.b() * axes.b() - axes.c() * axes.c();

    TauMatrix m;
    m.k = k;
    m.diag.resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        const double kj = static_cast<double>(k - 2 * j);
        m.diag[static_cast<std::size_t>(j)] =
            kj * kj * a2 + (static_cast<double>(2 * j + 1) * k - 2.0 * j * j) * bc_sum;
    }
    if (k >= 2) {
        m.upper.resize(static_cast<std::size_t>(k) - 1);
        m.lower.resize(static_cast<std::size_t>(k) - 1);
        for (int j = 2; j <= k; ++j)
            m.upper[static_cast<std::size_t>(j - 2)] =
                -static_cast<double>(j - 1) * j * bc_dif;
        for (int j = 0; j <= k - 2; ++j)
            m.lower[static_cast<std::size_t>(j)] =
                -static_cast<double>(k - 1 - j) * (k - j) * bc_dif;
    }
    return m;
}

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    if (e.size() + 1 != d.size())
        throw std::invalid_argument("tridiag_eigenvalues: off-diagonal size mismatch");
    e.push_back(0.0);

    double scale = 0.0;
    for (double x : d) scale = std::max(scale, std::abs(x));
    for (double x : e) scale = std::max(scale, std::abs(x));
    const double floor_tol = 1e-13 * scale;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= floor_tol ||
                    std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m != l) {
                if (++iter > 64)
                    throw numeric_error("tridiag_eigenvalues: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (i < l) {
                    d[l] -= p;
                    e[l] = g;
                    e[m] = 0.0;
                }
            }
        } while (m != l);
    }

    for (double x : d)
        if (!std::isfinite(x)) throw numeric_error("tridiag_eigenvalues: non-finite eigenvalue");
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

// nu_j^{(k)} closed form when two axes coincide; `a` is the distinct axis
// and `b` the repeated one (by permutation invariance the slot order of the
// inputs does not matter). j = 1..k+1 before sorting.
std::vector<double> nu_closed_bc_equal(int k, double a, double b) {
    std::vector<double> vals(static_cast<std::size_t>(k) + 1);
    const double a2 = a * a, b2 = b * b;
    for (int j = 1; j <= k + 1; ++j) {
        const double w = static_cast<double>(k - 2 * (j - 1));
        vals[static_cast<std::size_t>(j - 1)] =
            w * w * a2 + 2.0 * (static_cast<double>(2 * j - 1) * k - 2.0 * (j - 1) * (j - 1)) * b2;
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

// Split into even/odd index blocks, symmetrize each block with the geometric
// mean of the paired off-diagonal entries (both nonpositive for a >= b >= c,
// so the product is >= 0 and the replacement preserves the spectrum), then
// run the symmetric tridiagonal solver on each block.
std::vector<double> nu_tridiagonal(int k, const TriAxis& axes) {
    const TauMatrix m = tau_matrix(k, axes);
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(k) + 1);
    for (int parity = 0; parity <= std::min(k, 1); ++parity) {
        std::vector<double> d, e;
        for (int j = parity; j <= k; j += 2) d.push_back(m.diag[static_cast<std::size_t>(j)]);
        for (int j = parity; j + 2 <= k; j += 2) {
            const double prod = m.upper[static_cast<std::size_t>(j)] *
                                m.lower[static_cast<std::size_t>(j)];
            e.push_back(-std::sqrt(std::max(prod, 0.0)));
        }
        auto ev = tridiag_eigenvalues(std::move(d), std::move(e));
        all.insert(all.end(), ev.begin(), ev.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

NuSpectrum nu_spectrum(int k, const TriAxis& axes, const NuOptions& opts) {
    if (k < 0) throw std::invalid_argument("nu_spectrum: k must be nonnegative");
    if (k > opts.k_cap)
        throw resource_error("nu_spectrum: k exceeds cap " + std::to_string(opts.k_cap));

    NuSpectrum out;
    out.k = k;
    if (k == 0) {
        out.values = {0.0};
        return out;
    }

    const double a = axes.a(), b = axes.b(), c = axes.c();
    const bool bc_equal = (b - c) <= opts.degenerate_rel_tol * b;
    const bool ab_equal = (a - b) <= opts.degenerate_rel_tol * a;
    const bool all_equal = bc_equal && ab_equal;

    switch (opts.method) {
    case NuMethod::ClosedForm:
        if (bc_equal)
            out.values = nu_closed_bc_equal(k, a, b);
        else if (ab_equal)
            out.values = nu_closed_bc_equal(k, c, a); // distinct axis is c
        else
            throw unsupported_error("nu_spectrum: closed form requires two equal axes");
        break;
    case NuMethod::Tridiagonal:
        out.values = nu_tridiagonal(k, axes);
        break;
    case NuMethod::Auto:
        if (all_equal) {
            out.values.assign(static_cast<std::size_t>(k) + 1,
                              static_cast<double>(k) * (k + 2) * a * a);
        } else if (bc_equal) {
            out.values = nu_closed_bc_equal(k, a, b);
        } else if (ab_equal) {
            out.values = nu_closed_bc_equal(k, c, a);
        } else {
            out.values = nu_tridiagonal(k, axes);
        }
        break;
    }

    for (double& v : out.values) {
        if (!std::isfinite(v)) throw numeric_error("nu_spectrum: non-finite eigenvalue");
        if (v < 0.0 && v > -1e-12 * a * a) v = 0.0; // clamp solver dust on the PSD bound
    }
    return out;
}

double nu_lower_bound(int k, const TriAxis& axes) {
    if (k < 0) throw std::invalid_argument("nu_lower_bound: k must be nonnegative");
    const double a2 = axes.a() * axes.a();
    const double b2 = axes.b() * axes.b();
    const double c2 = axes.c() * axes.c();
    double bound = 2.0 * k * b2 + static_cast<double>(k) * k * c2;
    if (k % 2 == 1)
        bound = std::max(bound, a2 + (2.0 * k - 1.0) * b2 + static_cast<double>(k) * k * c2);
    return bound;
}

double beta_quartic(const TriAxis& axes) {
    const double a2 = axes.a() * axes.a();
    const double b2 = axes.b() * axes.b();
    const double c2 = axes.c() * axes.c();
    const double s1 = a2 + b2 + c2;
    const double s2 = a2 * b2 + a2 * c2 + b2 * c2;
    return s1 - std::sqrt(std::max(s1 * s1 - 3.0 * s2, 0.0));
}

double nu1_quartic(const TriAxis& axes) { return 8.0 * beta_quartic(axes); }

} // namespace cross
