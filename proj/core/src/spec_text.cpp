#include "cross/spec_text.hpp"

#include "cross/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace cross {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool try_literal(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected '") + c + "' " + what);
        ++pos_;
    }

    int parse_uint(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("integer out of range");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    double parse_positive_real(const char* what) {
        const std::string rest(text_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail(std::string("expected ") + what);
        if (!(v > 0.0) || !std::isfinite(v))
            fail(std::string(what) + " must be a positive finite real");
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return v;
    }

    [[noreturn]] void fail(const std::string& reason) const { throw parse_error(pos_, reason); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Shortest decimal that round-trips the exact double.
std::string format_real(double v) {
    char buf[48];
    for (int prec = 12; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

} // namespace

MetricSpec parse_metric(std::string_view text) {
    double scale = 1.0;
    std::string_view body = text;
    if (const auto star = text.rfind("*scale="); star != std::string_view::npos) {
        const std::string rest(text.substr(star + 7));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str() || *end != '\0')
            throw parse_error(star + 7 + static_cast<std::size_t>(end - rest.c_str()),
                              "malformed scale value");
        if (!(v > 0.0) || !std::isfinite(v))
            throw parse_error(star + 7, "scale must be a positive finite real");
        scale = v;
        body = text.substr(0, star);
    }
    Cursor c(body);

    MetricSpec spec;
    if (c.try_literal("CaP2")) {
        c.expect(':', "before metric tag");
        if (!c.try_literal("fs")) c.fail("CaP2 carries only the fs metric");
        spec = MetricSpec::fs_cayley(scale);
    } else if (c.try_literal("CPn(")) {
        const int n = c.parse_uint("complex projective index");
        c.expect(')', "after index");
        c.expect(':', "before metric tag");
        if (!c.try_literal("fs")) c.fail("CPn(n) carries only the fs metric");
        if (n < 1) c.fail("CPn requires n >= 1");
        spec = MetricSpec::fs_cp(n, scale);
    } else if (c.try_literal("HPn(")) {
        const int n = c.parse_uint("quaternionic projective index");
        c.expect(')', "after index");
        c.expect(':', "before metric tag");
        if (!c.try_literal("fs")) c.fail("HPn(n) carries only the fs metric");
        if (n < 1) c.fail("HPn requires n >= 1");
        spec = MetricSpec::fs_hp(n, scale);
    } else if (c.try_literal("Sd(") || c.try_literal("RPd(")) {
        const bool projective = body[0] == 'R';
        const int d = c.parse_uint("dimension");
        c.expect(')', "after dimension");
        c.expect(':', "before metric tag");
        if (!c.try_literal("round")) c.fail("Sd/RPd carry only the round metric");
        if (d < 2) c.fail("round spaces require d >= 2");
        spec = projective ? MetricSpec::round_projective(d, scale)
                          : MetricSpec::round_sphere(d, scale);
    } else if (c.try_literal("CP")) {
        const int m = c.parse_uint("complex projective dimension");
        c.expect(':', "before metric tag");
        if (!c.try_literal("hcheck(")) c.fail("CP<m> carries the hcheck(t) metric");
        const double t = c.parse_positive_real("t");
        c.expect(')', "after parameter");
        if (m < 3 || m % 2 == 0) c.fail("hcheck lives on CP^{2n+1} with n >= 1");
        spec = MetricSpec::cp_check((m - 1) / 2, t, scale);
    } else if (c.try_literal("RP") || c.try_literal("S")) {
        const bool projective = body[0] == 'R';
        const int d = c.parse_uint("sphere dimension");
        c.expect(':', "before metric tag");
        const Quotient q = projective ? Quotient::Projective : Quotient::Sphere;
        if (c.try_literal("h(")) {
            const double t1 = c.parse_positive_real("t1");
            c.expect(',', "between parameters");
            const double t2 = c.parse_positive_real("t2");
            c.expect(',', "between parameters");
            const double t3 = c.parse_positive_real("t3");
            c.expect(')', "after parameters");
            if (d < 3 || d % 4 != 3) c.fail("h metrics live on S^{4n+3}, d = 3 mod 4");
            spec = MetricSpec::quat((d - 3) / 4, t1, t2, t3, q, scale);
        } else if (c.try_literal("g(")) {
            const double t = c.parse_positive_real("t");
            c.expect(')', "after parameter");
            if (d < 3 || d % 2 == 0) c.fail("g metrics live on odd spheres S^{2n+1}, n >= 1");
            spec = MetricSpec::berger((d - 1) / 2, t, q, scale);
        } else if (c.try_literal("k(")) {
            const double t = c.parse_positive_real("t");
            c.expect(')', "after parameter");
            if (d != 15) c.fail("k metrics live on S^15 only");
            spec = MetricSpec::spin9(t, q, scale);
        } else {
            c.fail("expected metric tag h(...), g(...), or k(...)");
        }
    } else {
        c.fail("expected a space tag (S<d>, RP<d>, CP<m>, Sd(d), RPd(d), CPn(n), HPn(n), CaP2)");
    }

    if (!c.done()) c.fail("trailing characters");
    return spec;
}

std::string format_metric(const MetricSpec& spec) {
    std::string out;
    const bool projective = spec.quotient == Quotient::Projective;
    switch (spec.family) {
    case Family::Round:
        out = (projective ? "RPd(" : "Sd(") + std::to_string(spec.n) + "):round";
        break;
    case Family::BergerG:
        out = (projective ? "RP" : "S") + std::to_string(2 * spec.n + 1) + ":g(" +
              format_real(spec.t1) + ")";
        break;
    case Family::QuatH:
        out = (projective ? "RP" : "S") + std::to_string(4 * spec.n + 3) + ":h(" +
              format_real(spec.t1) + "," + format_real(spec.t2) + "," + format_real(spec.t3) +
              ")";
        break;
    case Family::Spin9K:
        out = (projective ? "RP15:k(" : "S15:k(") + format_real(spec.t1) + ")";
        break;
    case Family::CPCheckH:
        out = "CP" + std::to_string(2 * spec.n + 1) + ":hcheck(" + format_real(spec.t1) + ")";
        break;
    case Family::FSCP:
        out = "CPn(" + std::to_string(spec.n) + "):fs";
        break;
    case Family::FSHP:
        out = "HPn(" + std::to_string(spec.n) + "):fs";
        break;
    case Family::FSCayley:
        out = "CaP2:fs";
        break;
    }
    if (spec.scale != 1.0) out += "*scale=" + format_real(spec.scale);
    return out;
}

} // namespace cross
