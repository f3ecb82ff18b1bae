#include "cross/metric.hpp"

#include "cross/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cross {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be a positive finite real");
}

} // namespace

int MetricSpec::dimension() const {
    switch (family) {
    case Family::Round: return n;
    case Family::BergerG: return 2 * n + 1;
    case Family::QuatH: return 4 * n + 3;
    case Family::Spin9K: return 15;
    case Family::CPCheckH: return 4 * n + 2;
    case Family::FSCP: return 2 * n;
    case Family::FSHP: return 4 * n;
    case Family::FSCayley: return 16;
    }
    throw std::logic_error("MetricSpec::dimension: bad family");
}

MetricSpec MetricSpec::round_sphere(int d, double scale) {
    if (d < 2) throw std::invalid_argument("round sphere requires d >= 2");
    require_positive(scale, "scale");
    return {Family::Round, Quotient::Sphere, d, 1, 1, 1, scale};
}

MetricSpec MetricSpec::round_projective(int d, double scale) {
    if (d < 2) throw std::invalid_argument("round projective space requires d >= 2");
    require_positive(scale, "scale");
    return {Family::Round, Quotient::Projective, d, 1, 1, 1, scale};
}

MetricSpec MetricSpec::berger(int n, double t, Quotient q, double scale) {
    if (n < 1) throw std::invalid_argument("berger family requires n >= 1");
    require_positive(t, "t");
    require_positive(scale, "scale");
    return {Family::BergerG, q, n, t, 1, 1, scale};
}

MetricSpec MetricSpec::quat(int n, double t1, double t2, double t3, Quotient q, double scale) {
    if (n < 0) throw std::invalid_argument("quat family requires n >= 0");
    require_positive(t1, "t1");
    require_positive(t2, "t2");
    require_positive(t3, "t3");
    require_positive(scale, "scale");
    std::array<double, 3> t{t1, t2, t3};
    std::sort(t.begin(), t.end());
    return {Family::QuatH, q, n, t[0], t[1], t[2], scale};
}

MetricSpec MetricSpec::spin9(double t, Quotient q, double scale) {
    require_positive(t, "t");
    require_positive(scale, "scale");
    return {Family::Spin9K, q, 3, t, 1, 1, scale};
}

MetricSpec MetricSpec::cp_check(int n, double t, double scale) {
    if (n < 1) throw std::invalid_argument("cp_check family requires n >= 1");
    require_positive(t, "t");
    require_positive(scale, "scale");
    return {Family::CPCheckH, Quotient::Sphere, n, t, 1, 1, scale};
}

MetricSpec MetricSpec::fs_cp(int n, double scale) {
    if (n < 1) throw std::invalid_argument("fs_cp requires n >= 1");
    require_positive(scale, "scale");
    return {Family::FSCP, Quotient::Sphere, n, 1, 1, 1, scale};
}

MetricSpec MetricSpec::fs_hp(int n, double scale) {
    if (n < 1) throw std::invalid_argument("fs_hp requires n >= 1");
    require_positive(scale, "scale");
    return {Family::FSHP, Quotient::Sphere, n, 1, 1, 1, scale};
}

MetricSpec MetricSpec::fs_cayley(double scale) {
    require_positive(scale, "scale");
    return {Family::FSCayley, Quotient::Sphere, 2, 1, 1, 1, scale};
}

ABCSParams to_abcs(const MetricSpec& spec) {
    const double root_scale = std::sqrt(spec.scale);
    if (spec.family == Family::QuatH && spec.n >= 1) {
        // t1 <= t2 <= t3 gives a >= b >= c directly.
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        return {inv_sqrt2 / (spec.t1 * root_scale), inv_sqrt2 / (spec.t2 * root_scale),
                inv_sqrt2 / (spec.t3 * root_scale), 1.0 / root_scale};
    }
    if (spec.family == Family::CPCheckH) {
        const double b = 1.0 / (std::sqrt(2.0) * spec.t1 * root_scale);
        return {b, b, b, 1.0 / root_scale};
    }
    throw unsupported_error("to_abcs: defined for QuatH (n >= 1) and CPCheckH only");
}

MetricSpec from_abcs(int n, const ABCSParams& p, Quotient q) {
    if (n < 1) throw std::invalid_argument("from_abcs: n must be >= 1");
    require_positive(p.s, "s");
    const double f = p.s / std::sqrt(2.0);
    return MetricSpec::quat(n, f / p.a, f / p.b, f / p.c, q, 1.0 / (p.s * p.s));
}

MetricSpec from_bs(int n, double b, double s) {
    if (n < 1) throw std::invalid_argument("from_bs: n must be >= 1");
    require_positive(b, "b");
    require_positive(s, "s");
    return MetricSpec::cp_check(n, s / (std::sqrt(2.0) * b), 1.0 / (s * s));
}

TriAxis s3_axes(const MetricSpec& spec) {
    if (spec.family != Family::QuatH || spec.n != 0)
        throw unsupported_error("s3_axes: defined for the S^3 family (QuatH, n = 0)");
    const double root_scale = std::sqrt(spec.scale);
    return TriAxis(1.0 / (spec.t1 * root_scale), 1.0 / (spec.t2 * root_scale),
                   1.0 / (spec.t3 * root_scale));
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Round: return "round";
    case Family::BergerG: return "g";
    case Family::QuatH: return "h";
    case Family::Spin9K: return "k";
    case Family::CPCheckH: return "hcheck";
    case Family::FSCP: return "fs-cp";
    case Family::FSHP: return "fs-hp";
    case Family::FSCayley: return "fs-cap2";
    }
    return "?";
}

} // namespace cross
