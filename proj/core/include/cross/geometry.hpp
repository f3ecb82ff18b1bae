#pragma once

#include "cross/metric.hpp"
#include "cross/su2_rep.hpp"

namespace cross {

// Elementary symmetric polynomials in (a^2, b^2, c^2).
struct SymTriple {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    // Discriminant of r^3 - s1 r^2 + s2 r - s3; >= 0 on realizable triples.
    double discriminant() const;
};

SymTriple sym_triple(const TriAxis& axes);

// Recovers the sorted axes by solving the cubic (trigonometric method).
// Throws numeric_error when the triple is not realizable (negative
// discriminant or nonpositive roots beyond tolerance).
TriAxis sym_triple_inverse(const SymTriple& sigma);

// Scalar curvature of the metric (Gray-O'Neill / Table forms).
double scal(const MetricSpec& spec);

// Riemannian volume. A global homothety alpha * g scales it by alpha^{d/2}.
double volume(const MetricSpec& spec);

} // namespace cross
