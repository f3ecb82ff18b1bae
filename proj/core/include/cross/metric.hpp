#pragma once

#include "cross/su2_rep.hpp"

#include <array>
#include <string>

namespace cross {

// The homogeneous metric families on compact rank one symmetric spaces.
enum class Family {
    Round,    // round S^d / RP^d, any d >= 2
    BergerG,  // g(t) on S^{2n+1} / RP^{2n+1}
    QuatH,    // h(t1,t2,t3) on S^{4n+3} / RP^{4n+3}; n = 0 is the S^3 case
    Spin9K,   // k(t) on S^15 / RP^15
    CPCheckH, // hcheck(t) on CP^{2n+1}
    FSCP,     // Fubini-Study CP^n
    FSHP,     // Fubini-Study HP^n
    FSCayley, // Fubini-Study Cayley plane
};

enum class Quotient { Sphere, Projective };

// A homogeneous CROSS metric: family tag, positive parameters, quotient
// selector, and an optional global homothety (the metric is scale * g).
// QuatH parameters are stored canonically with t1 <= t2 <= t3.
struct MetricSpec {
    Family family = Family::Round;
    Quotient quotient = Quotient::Sphere;
    int n = 1;        // Round: the dimension d; others: the family index n
    double t1 = 1.0;  // QuatH: smallest axis; BergerG/Spin9K/CPCheckH: the parameter t
    double t2 = 1.0;
    double t3 = 1.0;
    double scale = 1.0;

    int dimension() const;
    double t() const { return t1; } // one-parameter families
    std::array<double, 3> t_triple() const { return {t1, t2, t3}; }

    bool operator==(const MetricSpec&) const = default;

    static MetricSpec round_sphere(int d, double scale = 1.0);
    static MetricSpec round_projective(int d, double scale = 1.0);
    static MetricSpec berger(int n, double t, Quotient q, double scale = 1.0);
    static MetricSpec quat(int n, double t1, double t2, double t3, Quotient q,
                           double scale = 1.0);
    static MetricSpec spin9(double t, Quotient q, double scale = 1.0);
    static MetricSpec cp_check(int n, double t, double scale = 1.0);
    static MetricSpec fs_cp(int n, double scale = 1.0);
    static MetricSpec fs_hp(int n, double scale = 1.0);
    static MetricSpec fs_cayley(double scale = 1.0);
};

// Diagonal inner-product parameters of g_{(a,b,c,s)}, a >= b >= c > 0, s > 0.
struct ABCSParams {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;
    double s = 1.0;

    TriAxis axes() const { return TriAxis(a, b, c); }
};

// scale * h(t1,t2,t3) ~ g_{(a,b,c,s)} with (a,b,c,s) = (1/(sqrt2 t1), 1/(sqrt2 t2),
// 1/(sqrt2 t3), 1) / sqrt(scale), reordered descending. For CPCheckH the fiber
// parameter maps to b = c = 1/(sqrt2 t). Requires QuatH/CPCheckH with n >= 1.
ABCSParams to_abcs(const MetricSpec& spec);

// Inverse: g_{(a,b,c,s)} ~ (1/s^2) h(s/(sqrt2 a), s/(sqrt2 b), s/(sqrt2 c)).
MetricSpec from_abcs(int n, const ABCSParams& params, Quotient q = Quotient::Sphere);
MetricSpec from_bs(int n, double b, double s);

// Axes of the S^3 family: h(t1,t2,t3) ~ g_{(1/t1, 1/t2, 1/t3)} (no sqrt2).
TriAxis s3_axes(const MetricSpec& spec);

std::string family_name(Family f);

} // namespace cross
