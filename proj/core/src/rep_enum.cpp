#include "cross/rep_enum.hpp"

#include "cross/checked_int.hpp"

#include <stdexcept>

namespace cross {

namespace {

void require_label(int n, RepLabel label) {
    if (n < 1) throw std::invalid_argument("rep_enum: n must be >= 1");
    if (label.q < 0 || label.p < label.q)
        throw std::invalid_argument("rep_enum: label must satisfy p >= q >= 0");
}

} // namespace

std::uint64_t dim_pq(int n, RepLabel label) {
    require_label(n, label);
    const int p = label.p, q = label.q;
    u128 num = static_cast<u128>(p + q + 2 * n + 1);
    num = mul_u128(num, static_cast<u128>(p - q + 1), "dim_pq");
    num = mul_u128(num, binomial(p + 2 * n, p), "dim_pq");
    num = mul_u128(num, binomial(q + 2 * n - 1, q), "dim_pq");
    const u128 den = static_cast<u128>(2 * n + 1) * static_cast<u128>(p + 1);
    return exact_div(num, den, "dim_pq");
}

double casimir_scalar(int n, RepLabel label) {
    require_label(n, label);
    const double p = label.p, q = label.q;
    return 2.0 * p * (p + 2 * n + 2) + 2.0 * q * (q + 2 * n);
}

std::vector<RepLabel> spherical_reps(int n, QuotientKind kind, int p_max) {
    if (n < 1) throw std::invalid_argument("spherical_reps: n must be >= 1");
    if (p_max < 0) throw std::invalid_argument("spherical_reps: p_max must be >= 0");
    std::vector<RepLabel> out;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= p; ++q) {
            if (kind != QuotientKind::Sphere && (p - q) % 2 != 0) continue;
            out.push_back({p, q});
        }
    return out;
}

std::uint64_t round_multiplicity(int d, int k) {
    if (d < 2) throw std::invalid_argument("round_multiplicity: d must be >= 2");
    if (k < 0) throw std::invalid_argument("round_multiplicity: k must be >= 0");
    const std::uint64_t hi = binomial(k + d, d);
    const std::uint64_t lo = binomial(k + d - 2, d);
    return hi - lo;
}

} // namespace cross
