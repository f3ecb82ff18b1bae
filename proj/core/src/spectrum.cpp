#include "cross/spectrum.hpp"

#include "cross/checked_int.hpp"
#include "cross/errors.hpp"
#include "cross/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cross {

namespace {

double sq(double x) { return x * x; }

bool nearly_equal(double u, double v, double rel = 1e-12) {
    return std::abs(u - v) <= rel * std::max({std::abs(u), std::abs(v), 1e-300});
}

// ---- level assembly --------------------------------------------------------

struct RawEntry {
    double value;
    std::uint64_t multiplicity;
    EigLabel label;
};

class SliceBuilder {
public:
    SliceBuilder(double cutoff, const SpectrumOptions& opts) : opts_(opts) {
        slice_.cutoff = cutoff;
        accept_ = cutoff + std::max(opts.merge_abs_tol,
                                    opts.merge_rel_tol * std::max(1.0, std::abs(cutoff)));
    }

    double accept_limit() const { return accept_; }

    void add(double value, std::uint64_t mult, EigLabel label) {
        if (value > accept_) return;
        if (entries_.size() >= opts_.max_entries)
            throw resource_error("truncated_spectrum: entry cap exceeded; lower the cutoff");
        entries_.push_back({value, mult, label});
    }

    SpectrumSlice finish() {
        std::sort(entries_.begin(), entries_.end(),
                  [](const RawEntry& x, const RawEntry& y) { return x.value < y.value; });
        for (const RawEntry& e : entries_) {
            const bool merge =
                !slice_.levels.empty() &&
                e.value - slice_.levels.back().value <=
                    std::max(opts_.merge_abs_tol,
                             opts_.merge_rel_tol *
                                 std::max(std::abs(e.value), std::abs(slice_.levels.back().value)));
            if (merge) {
                slice_.levels.back().multiplicity += e.multiplicity;
                slice_.levels.back().labels.push_back(e.label);
            } else {
                slice_.levels.push_back({e.value, e.multiplicity, {e.label}});
            }
        }
        return std::move(slice_);
    }

private:
    SpectrumOptions opts_;
    double accept_ = 0.0;
    std::vector<RawEntry> entries_;
    SpectrumSlice slice_;
};

// ---- closed-form multiplicity helpers --------------------------------------

// dim of the SU(2)-style block for the n = 0 (d = 3) Berger case.
std::uint64_t dpq_or_su2(int n, int p, int q) {
    if (n == 0) return q == 0 ? static_cast<std::uint64_t>(p + 1) : 0;
    return dim_pq(n, {p, q});
}

// mtilde_{k,l}: sum of d_{p,q} over p+q = k, 1 <= j <= p-q+1, p-q-2(j-1) = +-l.
std::uint64_t mtilde_kl(int n, int k, int l) {
    std::uint64_t total = 0;
    for (int p = (k + 1) / 2; p <= k; ++p) {
        const int q = k - p;
        const int m = p - q;
        std::uint64_t d = 0;
        bool have_d = false;
        for (int j = 1; j <= m + 1; ++j) {
            if (std::abs(m - 2 * (j - 1)) != l) continue;
            if (!have_d) {
                d = dpq_or_su2(n, p, q);
                have_d = true;
            }
            total += d;
        }
    }
    return total;
}

// Fiber-harmonic multiplicities of the octonionic Hopf fibration on S^15:
// closed form of the Weyl dimension for Spin(9) weights (a, l/2, l/2, l/2),
// a = (k-l)/2. Integer for all admissible (k, l).
std::uint64_t spin9_mult(int k, int l) {
    if (l < 0 || l > k || (k - l) % 2 != 0)
        throw std::invalid_argument("spin9_mult: need 0 <= l <= k, k = l mod 2");
    u128 num = static_cast<u128>(k + 7);
    const long long f[] = {k + l + 8,  k + l + 10, k + l + 12, k - l + 2, k - l + 4,
                           k - l + 6,  l + 1,      l + 2,      l + 3,     l + 3,
                           l + 4,      l + 5};
    for (long long x : f) num = mul_u128(num, static_cast<u128>(x), "spin9_mult");
    return exact_div(num, static_cast<u128>(116121600ULL), "spin9_mult");
}

// k-th eigenvalue multiplicity of (CP^n, g_FS): C(n+k,k)^2 - C(n+k-1,k-1)^2.
std::uint64_t cp_fs_mult(int n, int k) {
    const std::uint64_t hi = binomial(n + k, k);
    const std::uint64_t lo = k >= 1 ? binomial(n + k - 1, k - 1) : 0;
    const u128 m = mul_u128(hi, hi, "cp_fs_mult") - mul_u128(lo, lo, "cp_fs_mult");
    return narrow_u64(m, "cp_fs_mult");
}

// k-th eigenvalue multiplicity of the Cayley plane: 6(2k+11) C(k+7,7) C(k+10,7) / 7920.
std::uint64_t cayley_mult(int k) {
    u128 num = static_cast<u128>(6) * static_cast<u128>(2 * k + 11);
    num = mul_u128(num, binomial(k + 7, 7), "cayley_mult");
    num = mul_u128(num, binomial(k + 10, 7), "cayley_mult");
    return exact_div(num, static_cast<u128>(7920), "cayley_mult");
}

// ---- series emitters --------------------------------------------------------

void emit_round_series(SliceBuilder& b, int d, bool even_only, double inv_scale,
                       const SpectrumOptions& opts) {
    const double limit = b.accept_limit();
    for (int k = 0;; k += even_only ? 2 : 1) {
        if (k > opts.max_series_k) throw resource_error("round series: k cap exceeded");
        const double v = static_cast<double>(k) * (k + d - 1) * inv_scale;
        if (v > limit) break;
        b.add(v, round_multiplicity(d, k), EigLabel::series(k));
    }
}

// One (k,l) series family: value = base(k) + coeff * w(l), l = k mod 2, l <= k.
// Termination uses a monotone lower envelope of the row minimum: base(k) when
// coeff >= 0, and base(k) + coeff * w(k) when coeff < 0 (then coeff > -1 for
// every family here, making that envelope increasing in k as well).
template <typename BaseFn, typename WeightFn, typename MultFn>
void emit_kl_series(SliceBuilder& b, bool even_only, double inv_scale, BaseFn base,
                    WeightFn w, double coeff, MultFn mult, const SpectrumOptions& opts) {
    const double limit = b.accept_limit();
    for (int k = 0;; k += even_only ? 2 : 1) {
        if (k > opts.max_series_k) throw resource_error("series enumeration: k cap exceeded");
        const double row_floor = coeff >= 0.0 ? base(k) : base(k) + coeff * w(k);
        if (row_floor * inv_scale > limit) break;
        for (int l = k % 2; l <= k; l += 2) {
            const double v = (base(k) + coeff * w(l)) * inv_scale;
            if (v <= limit) b.add(v, mult(k, l), EigLabel::series(k, l));
        }
    }
}

// ---- representation enumeration ---------------------------------------------

SpectrumSlice rep_spectrum_quat(const MetricSpec& spec, double cutoff,
                                const SpectrumOptions& opts) {
    const int n = spec.n;
    const ABCSParams par = to_abcs(spec); // homothety folded into the parameters
    const TriAxis axes = par.axes();
    const double s2 = sq(par.s);
    const bool even_only = spec.quotient == Quotient::Projective;

    SliceBuilder builder(cutoff, opts);
    const double limit = builder.accept_limit();

    const int p_max = static_cast<int>(std::floor(limit / (4.0 * n * s2)));
    if (p_max > opts.max_rep_p)
        throw resource_error("truncated_spectrum: representation cap exceeded");

    struct Cell {
        int p, q;
        double base;
    };
    std::vector<Cell> cells;
    std::vector<char> k_needed(static_cast<std::size_t>(p_max) + 1, 0);
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= p; ++q) {
            if (even_only && (p - q) % 2 != 0) continue;
            const double base = (4.0 * p * n + 4.0 * q * (p + n + 1)) * s2;
            if (base > limit) break; // base grows with q
            const int k = p - q;
            if (opts.prune && base + 2.0 * nu_lower_bound(k, axes) > limit) continue;
            cells.push_back({p, q, base});
            k_needed[static_cast<std::size_t>(k)] = 1;
        }
    }

    std::vector<int> ks;
    for (int k = 0; k <= p_max; ++k)
        if (k_needed[static_cast<std::size_t>(k)]) ks.push_back(k);
    std::vector<std::optional<NuSpectrum>> nu(static_cast<std::size_t>(p_max) + 1);
    parallel_for(ks.size(), [&](std::size_t i) {
        nu[static_cast<std::size_t>(ks[i])] = nu_spectrum(ks[i], axes);
    });

    for (const Cell& cell : cells) {
        const int k = cell.p - cell.q;
        const std::uint64_t d = dim_pq(n, {cell.p, cell.q});
        const auto& values = nu[static_cast<std::size_t>(k)]->values;
        for (int j = 1; j <= k + 1; ++j) {
            const double lam = cell.base + 2.0 * values[static_cast<std::size_t>(j - 1)];
            if (lam <= limit) builder.add(lam, d, EigLabel::rep(cell.p, cell.q, j));
        }
    }
    return builder.finish();
}

SpectrumSlice rep_spectrum_cp(const MetricSpec& spec, double cutoff,
                              const SpectrumOptions& opts) {
    const int n = spec.n;
    const ABCSParams par = to_abcs(spec);
    const double s2 = sq(par.s), b2 = sq(par.b);

    SliceBuilder builder(cutoff, opts);
    const double limit = builder.accept_limit();
    const int p_max = static_cast<int>(std::floor(limit / (4.0 * n * s2)));
    if (p_max > opts.max_rep_p)
        throw resource_error("truncated_spectrum: representation cap exceeded");

    for (int p = 0; p <= p_max; ++p) {
        for (int q = p % 2; q <= p; q += 2) {
            const double base = (4.0 * p * n + 4.0 * q * (p + n + 1)) * s2;
            if (base > limit) break;
            const double k = p - q;
            const double lam = base + 2.0 * k * (k + 2.0) * b2;
            if (lam <= limit)
                builder.add(lam, dim_pq(n, {p, q}), EigLabel::rep(p, q, 0));
        }
    }
    return builder.finish();
}

} // namespace

// ---- public surface ---------------------------------------------------------

std::string EigLabel::str() const {
    std::ostringstream os;
    if (kind == Kind::Rep) {
        os << '(' << p << ',' << q;
        if (j > 0) os << ';' << j;
        os << ')';
    } else {
        os << '[' << k;
        if (l >= 0) os << ',' << l;
        os << ']';
    }
    return os.str();
}

std::uint64_t SpectrumSlice::total_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& lv : levels) total += lv.multiplicity;
    return total;
}

std::size_t SpectrumSlice::first_positive() const {
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i].value > 1e-9) return i;
    return static_cast<std::size_t>(-1);
}

double eigenvalue_pqj(int n, RepLabel label, int j, const ABCSParams& params) {
    if (n < 1) throw std::invalid_argument("eigenvalue_pqj: n must be >= 1");
    const int k = label.p - label.q;
    if (j < 1 || j > k + 1)
        throw std::invalid_argument("eigenvalue_pqj: j out of range [1, p-q+1]");
    const NuSpectrum nu = nu_spectrum(k, params.axes());
    return (4.0 * label.p * n + 4.0 * label.q * (label.p + n + 1)) * sq(params.s) +
           2.0 * nu.values[static_cast<std::size_t>(j - 1)];
}

double eigenvalue_cp(int n, RepLabel label, double b, double s) {
    if (n < 1) throw std::invalid_argument("eigenvalue_cp: n must be >= 1");
    if ((label.p - label.q) % 2 != 0)
        throw std::invalid_argument("eigenvalue_cp: p - q must be even");
    const double k = label.p - label.q;
    return (4.0 * label.p * n + 4.0 * label.q * (label.p + n + 1)) * sq(s) +
           2.0 * k * (k + 2.0) * sq(b);
}

SpectrumSlice s3_spectrum(const TriAxis& axes, Quotient quotient, double cutoff,
                          const SpectrumOptions& opts) {
    SliceBuilder builder(cutoff, opts);
    const double limit = builder.accept_limit();
    const double b2 = sq(axes.b()), c2 = sq(axes.c());
    const int step = quotient == Quotient::Projective ? 2 : 1;
    for (int k = 0;; k += step) {
        if (k > opts.max_series_k) throw resource_error("s3_spectrum: k cap exceeded");
        if (2.0 * k * b2 + static_cast<double>(k) * k * c2 > limit) break;
        if (nu_lower_bound(k, axes) > limit) continue;
        const NuSpectrum nu = nu_spectrum(k, axes);
        for (int j = 1; j <= k + 1; ++j) {
            const double v = nu.values[static_cast<std::size_t>(j - 1)];
            if (v <= limit)
                builder.add(v, static_cast<std::uint64_t>(k) + 1, EigLabel::rep(k, 0, j));
        }
    }
    return builder.finish();
}

SpectrumSlice full_spectrum_closed(const MetricSpec& spec, double cutoff,
                                   const SpectrumOptions& opts) {
    const bool even_only = spec.quotient == Quotient::Projective;
    const double inv_scale = 1.0 / spec.scale;
    SliceBuilder builder(cutoff, opts);

    switch (spec.family) {
    case Family::Round:
        emit_round_series(builder, spec.n, even_only, inv_scale, opts);
        return builder.finish();

    case Family::QuatH: {
        if (!nearly_equal(spec.t1, spec.t3) || !nearly_equal(spec.t1, spec.t2))
            throw unsupported_error(
                "full_spectrum_closed: QuatH requires t1 = t2 = t3; the general "
                "three-parameter spectrum has no closed description");
        const double coeff = 1.0 / sq(spec.t1) - 1.0;
        if (spec.n == 0) {
            // S^3: each level is k(k+2)/t^2 with the full round multiplicity.
            for (int k = 0;; k += even_only ? 2 : 1) {
                if (k > opts.max_series_k) throw resource_error("S^3 series: k cap exceeded");
                const double v = static_cast<double>(k) * (k + 2) / sq(spec.t1) * inv_scale;
                if (v > builder.accept_limit()) break;
                builder.add(v, round_multiplicity(3, k), EigLabel::series(k));
            }
            return builder.finish();
        }
        const int n = spec.n;
        emit_kl_series(
            builder, even_only, inv_scale,
            [n](int k) { return static_cast<double>(k) * (k + 4 * n + 2); },
            [](int l) { return static_cast<double>(l) * (l + 2); }, coeff,
            [n](int k, int l) {
                const std::uint64_t m = dim_pq(n, {(k + l) / 2, (k - l) / 2});
                return narrow_u64(mul_u128(m, static_cast<u128>(l) + 1, "mu mult"), "mu mult");
            },
            opts);
        return builder.finish();
    }

    case Family::CPCheckH: {
        const int n = spec.n;
        const double coeff = 1.0 / sq(spec.t1) - 1.0;
        emit_kl_series(
            builder, /*even_only=*/true, inv_scale,
            [n](int k) { return static_cast<double>(k) * (k + 4 * n + 2); },
            [](int l) { return static_cast<double>(l) * (l + 2); }, coeff,
            [n](int k, int l) { return dim_pq(n, {(k + l) / 2, (k - l) / 2}); }, opts);
        return builder.finish();
    }

    case Family::BergerG: {
        const int d = spec.dimension();
        if (d % 4 != 3)
            throw unsupported_error(
                "full_spectrum_closed: BergerG full spectra are supported for d = 3 mod 4 "
                "only; d = 1 mod 4 ships just the first eigenvalue");
        const int nsp = (d - 3) / 4;
        const double coeff = 1.0 / sq(spec.t1) - 1.0;
        emit_kl_series(
            builder, even_only, inv_scale,
            [d](int k) { return static_cast<double>(k) * (k + d - 1); },
            [](int l) { return static_cast<double>(l) * l; }, coeff,
            [nsp](int k, int l) { return mtilde_kl(nsp, k, l); }, opts);
        return builder.finish();
    }

    case Family::Spin9K: {
        const double coeff = 1.0 / sq(spec.t1) - 1.0;
        emit_kl_series(
            builder, even_only, inv_scale,
            [](int k) { return static_cast<double>(k) * (k + 14); },
            [](int l) { return static_cast<double>(l) * (l + 6); }, coeff,
            [](int k, int l) { return spin9_mult(k, l); }, opts);
        return builder.finish();
    }

    default:
        throw unsupported_error("full_spectrum_closed: unsupported family " +
                                family_name(spec.family));
    }
}

SpectrumSlice truncated_spectrum(const MetricSpec& spec, double cutoff,
                                 const SpectrumOptions& opts) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("truncated_spectrum: cutoff must be > 0");

    switch (spec.family) {
    case Family::Round:
    case Family::BergerG:
    case Family::Spin9K:
        return full_spectrum_closed(spec, cutoff, opts);

    case Family::QuatH:
        if (spec.n == 0) return s3_spectrum(s3_axes(spec), spec.quotient, cutoff, opts);
        return rep_spectrum_quat(spec, cutoff, opts);

    case Family::CPCheckH:
        return rep_spectrum_cp(spec, cutoff, opts);

    case Family::FSCP: {
        SliceBuilder builder(cutoff, opts);
        for (int k = 0;; ++k) {
            if (k > opts.max_series_k) throw resource_error("FS series: k cap exceeded");
            const double v = 4.0 * k * (k + spec.n) / spec.scale;
            if (v > builder.accept_limit()) break;
            builder.add(v, cp_fs_mult(spec.n, k), EigLabel::series(k));
        }
        return builder.finish();
    }
    case Family::FSHP: {
        SliceBuilder builder(cutoff, opts);
        for (int k = 0;; ++k) {
            if (k > opts.max_series_k) throw resource_error("FS series: k cap exceeded");
            const double v = 4.0 * k * (k + 2 * spec.n + 1) / spec.scale;
            if (v > builder.accept_limit()) break;
            builder.add(v, dim_pq(spec.n, {k, k}), EigLabel::series(k));
        }
        return builder.finish();
    }
    case Family::FSCayley: {
        SliceBuilder builder(cutoff, opts);
        for (int k = 0;; ++k) {
            if (k > opts.max_series_k) throw resource_error("FS series: k cap exceeded");
            const double v = 4.0 * k * (k + 11) / spec.scale;
            if (v > builder.accept_limit()) break;
            builder.add(v, cayley_mult(k), EigLabel::series(k));
        }
        return builder.finish();
    }
    }
    throw std::logic_error("truncated_spectrum: bad family");
}

// ---- first eigenvalues -------------------------------------------------------

namespace {

Lambda1 pick_two(double va, const char* na, std::uint64_t ma, double vb, const char* nb,
                 std::uint64_t mb, std::uint64_t mtie) {
    if (nearly_equal(va, vb)) return {va, mtie, std::string(na) + "=" + nb};
    if (va < vb) return {va, ma, na};
    return {vb, mb, nb};
}

Lambda1 lambda1_quat_sphere(int n, double x1, double x2, double x3) {
    // x_i = 1/t_i^2, descending.
    const double l10 = 4.0 * n + x1 + x2 + x3;
    const double l20 = 8.0 * n + 4.0 * (x2 + x3);
    const double l11 = 8.0 * (n + 1.0);
    const std::uint64_t N = static_cast<std::uint64_t>(n);
    const bool e10_20 = nearly_equal(l10, l20);
    const bool e10_11 = nearly_equal(l10, l11);
    const bool e20_11 = nearly_equal(l20, l11);

    if (e10_20 && e10_11)
        return {l10, 4 * N * N + 12 * N + 7, "(1,0)=(2,0)=(1,1)"};
    if (e10_11 && l10 < l20) return {l10, 2 * N * N + 7 * N + 4, "(1,0)=(1,1)"};
    if (e10_20 && l10 < l11) return {l10, 2 * N * N + 9 * N + 7, "(1,0)=(2,0)"};
    if (e20_11 && l20 < l10) return {l20, 4 * N * N + 8 * N + 3, "(2,0)=(1,1)"};
    if (l10 < l20 && l10 < l11) return {l10, 4 * (N + 1), "(1,0)"};
    if (l11 < l10 && l11 < l20) return {l11, N * (2 * N + 3), "(1,1)"};
    return {l20, (N + 1) * (2 * N + 3), "(2,0)"};
}

Lambda1 lambda1_quat_projective(int n, const MetricSpec& spec) {
    const double x2 = 1.0 / sq(spec.t2), x3 = 1.0 / sq(spec.t3);
    const double l20 = 8.0 * n + 4.0 * (x2 + x3);
    const double l11 = 8.0 * (n + 1.0);
    const std::uint64_t N = static_cast<std::uint64_t>(n);
    // a > b iff t1 < t2; a = b = c iff t1 = t2 = t3.
    const bool ab = nearly_equal(spec.t1, spec.t2);
    const bool bc = nearly_equal(spec.t2, spec.t3);
    std::uint64_t r = ab ? (bc ? 3 : 2) : 1;

    if (nearly_equal(l20, l11)) {
        const std::uint64_t m = (r == 1 ? 2 * N + 1 : r == 2 ? 3 * N + 2 : 4 * N + 3);
        return {l20, m * (2 * N + 3), "(2,0)=(1,1)"};
    }
    if (l11 < l20) return {l11, N * (2 * N + 3), "(1,1)"};
    return {l20, r * (N + 1) * (2 * N + 3), "(2,0)"};
}

Lambda1 lambda1_s3(const MetricSpec& spec) {
    const TriAxis ax = s3_axes(MetricSpec::quat(0, spec.t1, spec.t2, spec.t3, spec.quotient));
    const double A = sq(ax.a()) + sq(ax.b()) + sq(ax.c());
    const double B = 4.0 * (sq(ax.b()) + sq(ax.c()));
    // Count of nu_j^{(2)} values equal to nu_1^{(2)} = 4(b^2+c^2).
    const bool ab = nearly_equal(ax.a(), ax.b());
    const bool bc = nearly_equal(ax.b(), ax.c());
    const std::uint64_t r = ab ? (bc ? 3 : 2) : 1;
    if (spec.quotient == Quotient::Projective) return {B, 3 * r, "k2"};
    if (nearly_equal(A, B)) return {A, 4 + 3 * r, "k1=k2"};
    if (A < B) return {A, 4, "k1"};
    return {B, 3 * r, "k2"};
}

} // namespace

Lambda1 lambda1(const MetricSpec& spec) {
    Lambda1 out;
    switch (spec.family) {
    case Family::Round: {
        const std::uint64_t d = static_cast<std::uint64_t>(spec.n);
        if (spec.quotient == Quotient::Sphere)
            out = {static_cast<double>(d), d + 1, "k1"};
        else
            out = {2.0 * (d + 1.0), d * (d + 3) / 2, "k2"};
        break;
    }
    case Family::BergerG: {
        const double n = spec.n, it2 = 1.0 / sq(spec.t1);
        const std::uint64_t d = static_cast<std::uint64_t>(spec.dimension());
        if (spec.quotient == Quotient::Sphere)
            out = pick_two(2.0 * n + it2, "[1,1]", d + 1, 4.0 * (n + 1.0), "[2,0]",
                           (d - 1) * (d + 3) / 4, (d * d + 6 * d + 1) / 4);
        else
            out = pick_two(4.0 * n + 4.0 * it2, "[2,2]", (d + 1) * (d + 3) / 4,
                           4.0 * (n + 1.0), "[2,0]", (d - 1) * (d + 3) / 4, d * (d + 3) / 2);
        break;
    }
    case Family::QuatH:
        if (spec.n == 0)
            out = lambda1_s3(spec);
        else if (spec.quotient == Quotient::Sphere)
            out = lambda1_quat_sphere(spec.n, 1.0 / sq(spec.t1), 1.0 / sq(spec.t2),
                                      1.0 / sq(spec.t3));
        else
            out = lambda1_quat_projective(spec.n, spec);
        break;
    case Family::Spin9K: {
        const double it2 = 1.0 / sq(spec.t1);
        if (spec.quotient == Quotient::Sphere)
            out = pick_two(8.0 + 7.0 * it2, "[1,1]", 16, 32.0, "[2,0]", 9, 25);
        else
            out = pick_two(16.0 + 16.0 * it2, "[2,2]", 126, 32.0, "[2,0]", 9, 135);
        break;
    }
    case Family::CPCheckH: {
        const double n = spec.n, it2 = 1.0 / sq(spec.t1);
        const std::uint64_t N = static_cast<std::uint64_t>(spec.n);
        out = pick_two(8.0 * n + 8.0 * it2, "(2,0)", (N + 1) * (2 * N + 3),
                       8.0 * (n + 1.0), "(1,1)", N * (2 * N + 3), (2 * N + 1) * (2 * N + 3));
        break;
    }
    case Family::FSCP: {
        const std::uint64_t N = static_cast<std::uint64_t>(spec.n);
        out = {4.0 * (spec.n + 1.0), N * (N + 2), "k1"};
        break;
    }
    case Family::FSHP: {
        const std::uint64_t N = static_cast<std::uint64_t>(spec.n);
        out = {8.0 * (spec.n + 1.0), N * (2 * N + 3), "k1"};
        break;
    }
    case Family::FSCayley:
        out = {48.0, 26, "k1"};
        break;
    }
    out.value /= spec.scale;
    return out;
}

bool slices_match(const SpectrumSlice& a, const SpectrumSlice& b, double tol,
                  std::size_t* first_mismatch) {
    const double lim = std::min(a.cutoff, b.cutoff);
    const double guard = lim - std::max(1e-12, 10.0 * tol * std::max(1.0, lim));
    std::size_t na = a.levels.size(), nb = b.levels.size();
    while (na > 0 && a.levels[na - 1].value > guard) --na;
    while (nb > 0 && b.levels[nb - 1].value > guard) --nb;
    const std::size_t common = std::min(na, nb);
    for (std::size_t i = 0; i < common; ++i) {
        const auto& la = a.levels[i];
        const auto& lb = b.levels[i];
        const bool value_ok =
            std::abs(la.value - lb.value) <= tol * std::max({1.0, la.value, lb.value});
        if (!value_ok || la.multiplicity != lb.multiplicity) {
            if (first_mismatch) *first_mismatch = i;
            return false;
        }
    }
    if (na != nb) {
        if (first_mismatch) *first_mismatch = common;
        return false;
    }
    return true;
}

} // namespace cross
