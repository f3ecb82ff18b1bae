#include "cross/geometry.hpp"

#include "cross/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cross {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(m*log(pi) - lgamma(z)); factorial constants in volume formulas are
// evaluated through log-gamma so large n never overflows.
double pi_pow_over_gamma(double m, double z) {
    return std::exp(m * std::log(kPi) - std::lgamma(z));
}

double sq(double x) { return x * x; }

} // namespace

double SymTriple::discriminant() const {
    return s1 * s1 * s2 * s2 - 4.0 * s2 * s2 * s2 - 4.0 * s1 * s1 * s1 * s3 -
           27.0 * s3 * s3 + 18.0 * s1 * s2 * s3;
}

SymTriple sym_triple(const TriAxis& axes) {
    const double x = sq(axes.a()), y = sq(axes.b()), z = sq(axes.c());
    return {x + y + z, x * y + x * z + y * z, x * y * z};
}

TriAxis sym_triple_inverse(const SymTriple& sigma) {
    if (!(sigma.s1 > 0.0) || !(sigma.s2 > 0.0) || !(sigma.s3 > 0.0))
        throw numeric_error("sym_triple_inverse: sigma_i must be positive");
    const double disc = sigma.discriminant();
    const double s1_6 = sq(sigma.s1) * sq(sigma.s1) * sq(sigma.s1);
    if (disc < -1e-10 * std::max(1.0, s1_6))
        throw numeric_error("sym_triple_inverse: negative discriminant, no real triple");

    // Depressed cubic: r = u + s1/3, u^3 + p u + q = 0, three real roots.
    const double p = sigma.s2 - sq(sigma.s1) / 3.0;
    const double q =
        -2.0 * sigma.s1 * sq(sigma.s1) / 27.0 + sigma.s1 * sigma.s2 / 3.0 - sigma.s3;
    double roots[3];
    if (p >= -1e-300) {
        // Triple root up to rounding.
        roots[0] = roots[1] = roots[2] = sigma.s1 / 3.0;
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int i = 0; i < 3; ++i)
            roots[i] = m * std::cos(theta - 2.0 * kPi * i / 3.0) + sigma.s1 / 3.0;
    }
    std::sort(roots, roots + 3, std::greater<double>());
    for (double r : roots)
        if (!(r > 0.0))
            throw numeric_error("sym_triple_inverse: nonpositive root, no valid axes");

    // Residual check on the monic cubic.
    const double res_scale = std::max(1.0, sigma.s1 * sigma.s1 * sigma.s1);
    for (double r : roots) {
        const double res = ((r - sigma.s1) * r + sigma.s2) * r - sigma.s3;
        if (std::abs(res) > 1e-12 * res_scale)
            throw numeric_error("sym_triple_inverse: cubic residual too large");
    }
    return TriAxis(std::sqrt(roots[0]), std::sqrt(roots[1]), std::sqrt(roots[2]));
}

double scal(const MetricSpec& spec) {
    double s = 0.0;
    switch (spec.family) {
    case Family::Round: {
        const double d = spec.n;
        s = d * (d - 1.0);
        break;
    }
    case Family::BergerG: {
        const double n = spec.n, t2 = sq(spec.t1);
        s = 2.0 * n * (2.0 * n + 2.0 - t2);
        break;
    }
    case Family::QuatH: {
        const double n = spec.n;
        const double x = sq(spec.t1), y = sq(spec.t2), z = sq(spec.t3);
        s = 16.0 * n * (n + 2.0) + 4.0 * (1.0 / x + 1.0 / y + 1.0 / z) -
            2.0 * (x / (y * z) + y / (x * z) + z / (x * y)) - 4.0 * n * (x + y + z);
        break;
    }
    case Family::Spin9K: {
        const double t2 = sq(spec.t1);
        s = 14.0 * (3.0 / t2 + 16.0 - 4.0 * t2);
        break;
    }
    case Family::CPCheckH: {
        const double n = spec.n, t2 = sq(spec.t1);
        s = 8.0 / t2 + 16.0 * n * (n + 2.0) - 8.0 * n * t2;
        break;
    }
    case Family::FSCP: {
        const double n = spec.n;
        s = 4.0 * n * (n + 1.0);
        break;
    }
    case Family::FSHP: {
        const double n = spec.n;
        s = 16.0 * n * (n + 2.0);
        break;
    }
    case Family::FSCayley:
        s = 576.0;
        break;
    }
    return s / spec.scale;
}

double volume(const MetricSpec& spec) {
    double v = 0.0;
    switch (spec.family) {
    case Family::Round: {
        const double d = spec.n;
        v = 2.0 * pi_pow_over_gamma((d + 1.0) / 2.0, (d + 1.0) / 2.0);
        if (spec.quotient == Quotient::Projective) v *= 0.5;
        break;
    }
    case Family::BergerG: {
        const double n = spec.n;
        v = 2.0 * pi_pow_over_gamma(n + 1.0, n + 1.0) * spec.t1;
        if (spec.quotient == Quotient::Projective) v *= 0.5;
        break;
    }
    case Family::QuatH: {
        const double n = spec.n;
        v = 2.0 * pi_pow_over_gamma(2.0 * n + 2.0, 2.0 * n + 2.0) * spec.t1 * spec.t2 * spec.t3;
        if (spec.quotient == Quotient::Projective) v *= 0.5;
        break;
    }
    case Family::Spin9K: {
        v = 2.0 * pi_pow_over_gamma(8.0, 8.0) * std::pow(spec.t1, 7.0);
        if (spec.quotient == Quotient::Projective) v *= 0.5;
        break;
    }
    case Family::CPCheckH: {
        const double n = spec.n;
        v = pi_pow_over_gamma(2.0 * n + 1.0, 2.0 * n + 2.0) * sq(spec.t1);
        break;
    }
    case Family::FSCP: {
        const double n = spec.n;
        v = pi_pow_over_gamma(n, n + 1.0);
        break;
    }
    case Family::FSHP: {
        const double n = spec.n;
        v = pi_pow_over_gamma(2.0 * n, 2.0 * n + 2.0);
        break;
    }
    case Family::FSCayley:
        v = 6.0 * pi_pow_over_gamma(8.0, 12.0);
        break;
    }
    return v * std::pow(spec.scale, spec.dimension() / 2.0);
}

} // namespace cross
