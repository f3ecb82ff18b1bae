#include "cross/isospec.hpp"

#include "cross/geometry.hpp"
#include "cross/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace cross {

HeatInvariants heat_invariants(const MetricSpec& spec) {
    return {volume(spec), scal(spec), spec.dimension()};
}

std::string ComparisonVerdict::str() const {
    std::ostringstream os;
    switch (outcome) {
    case Outcome::MatchUpToCutoff:
        os << "MatchUpToCutoff";
        break;
    case Outcome::DifferAt:
        os << "DifferAt(level " << level_index << ": " << value_a << " vs " << value_b << ")";
        break;
    case Outcome::InvariantMismatch:
        os << "InvariantMismatch("
           << (which == Invariant::Volume ? "volume"
                                          : which == Invariant::Scal ? "scal" : "dimension")
           << ": " << value_a << " vs " << value_b << ")";
        break;
    }
    return os.str();
}

ComparisonVerdict compare(const MetricSpec& a, const MetricSpec& b, double cutoff, double tol) {
    ComparisonVerdict v;
    const HeatInvariants ha = heat_invariants(a);
    const HeatInvariants hb = heat_invariants(b);
    if (ha.dimension != hb.dimension) {
        v.outcome = ComparisonVerdict::Outcome::InvariantMismatch;
        v.which = ComparisonVerdict::Invariant::Dimension;
        v.value_a = ha.dimension;
        v.value_b = hb.dimension;
        return v;
    }
    if (std::abs(ha.volume - hb.volume) > tol * std::max({1.0, ha.volume, hb.volume})) {
        v.outcome = ComparisonVerdict::Outcome::InvariantMismatch;
        v.which = ComparisonVerdict::Invariant::Volume;
        v.value_a = ha.volume;
        v.value_b = hb.volume;
        return v;
    }
    if (std::abs(ha.scal - hb.scal) >
        tol * std::max({1.0, std::abs(ha.scal), std::abs(hb.scal)})) {
        v.outcome = ComparisonVerdict::Outcome::InvariantMismatch;
        v.which = ComparisonVerdict::Invariant::Scal;
        v.value_a = ha.scal;
        v.value_b = hb.scal;
        return v;
    }

    const SpectrumSlice sa = truncated_spectrum(a, cutoff);
    const SpectrumSlice sb = truncated_spectrum(b, cutoff);
    std::size_t where = 0;
    if (!slices_match(sa, sb, tol, &where)) {
        v.outcome = ComparisonVerdict::Outcome::DifferAt;
        v.level_index = where;
        v.value_a = where < sa.levels.size() ? sa.levels[where].value : -1.0;
        v.value_b = where < sb.levels.size() ? sb.levels[where].value : -1.0;
        return v;
    }
    return v;
}

namespace {

std::array<double, 3> draw_triple(std::mt19937_64& rng, double t_min, double t_max) {
    std::uniform_real_distribution<double> unif(std::log(t_min), std::log(t_max));
    std::array<double, 3> t{std::exp(unif(rng)), std::exp(unif(rng)), std::exp(unif(rng))};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

ProbeReport rigidity_probe_pairs(
    const ProbeOptions& opts,
    const std::vector<std::pair<std::array<double, 3>, std::array<double, 3>>>& pairs) {
    ProbeReport report;
    report.options = opts;

    struct Outcome {
        int kind = 0; // 0 identical, 1 volume, 2 scal, 3 spectrum, 4 candidate
        ProbeCandidate candidate;
    };
    std::vector<Outcome> outcomes(pairs.size());

    parallel_for(pairs.size(), [&](std::size_t i) {
        auto ta = pairs[i].first;
        auto tb = pairs[i].second;
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        const MetricSpec a = MetricSpec::quat(opts.n, ta[0], ta[1], ta[2], opts.quotient_a);
        const MetricSpec b = MetricSpec::quat(opts.n, tb[0], tb[1], tb[2], opts.quotient_b);
        if (opts.quotient_a == opts.quotient_b && ta == tb) {
            outcomes[i].kind = 0; // isometric by construction; not a candidate
            return;
        }
        double cutoff = opts.cutoff;
        if (cutoff <= 0.0) cutoff = 4.0 * std::max(lambda1(a).value, lambda1(b).value);
        const ComparisonVerdict verdict = compare(a, b, cutoff, opts.tol);
        if (verdict.matched()) {
            outcomes[i].kind = 4;
            outcomes[i].candidate = {i, ta, tb, cutoff};
        } else if (verdict.outcome == ComparisonVerdict::Outcome::DifferAt) {
            outcomes[i].kind = 3;
        } else {
            outcomes[i].kind =
                verdict.which == ComparisonVerdict::Invariant::Volume ? 1 : 2;
        }
    });

    for (const Outcome& o : outcomes) {
        switch (o.kind) {
        case 0: ++report.identical_pairs; break;
        case 1: ++report.volume_rejections; break;
        case 2: ++report.scal_rejections; break;
        case 3: ++report.spectrum_rejections; break;
        case 4: report.candidates.push_back(o.candidate); break;
        }
    }
    return report;
}

ProbeReport rigidity_probe(const ProbeOptions& opts) {
    if (opts.samples < 1) throw std::invalid_argument("rigidity_probe: samples must be >= 1");
    std::mt19937_64 rng(opts.seed);
    std::vector<std::pair<std::array<double, 3>, std::array<double, 3>>> pairs;
    pairs.reserve(static_cast<std::size_t>(opts.samples));
    for (int i = 0; i < opts.samples; ++i) {
        auto ta = draw_triple(rng, opts.t_min, opts.t_max);
        auto tb = draw_triple(rng, opts.t_min, opts.t_max);
        pairs.emplace_back(ta, tb);
    }
    return rigidity_probe_pairs(opts, pairs);
}

std::string ProbeReport::to_json() const {
    std::ostringstream os;
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf);
    };
    os << "{\"seed\":" << options.seed << ",\"samples\":" << options.samples << ",\"n\":"
       << options.n << ",\"quotients\":\""
       << (options.quotient_a == Quotient::Sphere ? "S" : "RP") << "-"
       << (options.quotient_b == Quotient::Sphere ? "S" : "RP") << "\",\"cutoff\":"
       << (options.cutoff > 0.0 ? num(options.cutoff) : std::string("\"auto\""))
       << ",\"identical_pairs\":" << identical_pairs
       << ",\"volume_rejections\":" << volume_rejections
       << ",\"scal_rejections\":" << scal_rejections
       << ",\"spectrum_rejections\":" << spectrum_rejections << ",\"candidates\":[";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        if (i) os << ',';
        os << "{\"sample\":" << c.sample_index << ",\"t_a\":[" << num(c.t_a[0]) << ','
           << num(c.t_a[1]) << ',' << num(c.t_a[2]) << "],\"t_b\":[" << num(c.t_b[0]) << ','
           << num(c.t_b[1]) << ',' << num(c.t_b[2]) << "],\"cutoff\":" << num(c.cutoff_used)
           << '}';
    }
    os << "]}";
    return os.str();
}

} // namespace cross
