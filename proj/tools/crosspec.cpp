// crosspec: spectra, curvature, and Yamabe stability of homogeneous CROSS
// metrics from the command line. All numeric output uses 12 significant
// digits; JSON layouts are documented in the README.

#include "tables.hpp"

#include "cross/errors.hpp"
#include "cross/geometry.hpp"
#include "cross/isospec.hpp"
#include "cross/spec_text.hpp"
#include "cross/spectrum.hpp"
#include "cross/yamabe.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace cross;

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void print_lambda1(const std::string& text) {
    const MetricSpec spec = parse_metric(text);
    const Lambda1 l = lambda1(spec);
    std::cout << "{\"spec\":" << quoted(format_metric(spec)) << ",\"value\":" << num(l.value)
              << ",\"multiplicity\":" << l.multiplicity << ",\"branch\":" << quoted(l.branch)
              << "}\n";
}

void print_spectrum(const std::string& text, double cutoff, const std::string& format,
                    double merge_tol) {
    const MetricSpec spec = parse_metric(text);
    SpectrumOptions opts;
    if (merge_tol > 0) opts.merge_rel_tol = merge_tol;
    const SpectrumSlice slice = truncated_spectrum(spec, cutoff, opts);
    if (format == "csv") {
        std::cout << "value,multiplicity,labels\n";
        for (const auto& lv : slice.levels) {
            std::cout << num(lv.value) << ',' << lv.multiplicity << ",\"";
            for (std::size_t i = 0; i < lv.labels.size(); ++i)
                std::cout << (i ? " " : "") << lv.labels[i].str();
            std::cout << "\"\n";
        }
        return;
    }
    std::cout << "{\"spec\":" << quoted(format_metric(spec)) << ",\"cutoff\":" << num(cutoff)
              << ",\"levels\":[";
    for (std::size_t i = 0; i < slice.levels.size(); ++i) {
        const auto& lv = slice.levels[i];
        if (i) std::cout << ',';
        std::cout << "{\"value\":" << num(lv.value) << ",\"multiplicity\":" << lv.multiplicity
                  << ",\"labels\":[";
        for (std::size_t j = 0; j < lv.labels.size(); ++j)
            std::cout << (j ? "," : "") << quoted(lv.labels[j].str());
        std::cout << "]}";
    }
    std::cout << "]}\n";
}

void print_stability(const std::string& text) {
    const MetricSpec spec = parse_metric(text);
    const StabilityReport r = classify(spec);
    std::cout << "{\"spec\":" << quoted(format_metric(spec)) << ",\"lambda1\":" << num(r.lambda1)
              << ",\"multiplicity\":" << r.lambda1_multiplicity << ",\"branch\":"
              << quoted(r.lambda1_branch) << ",\"scal\":" << num(r.scal) << ",\"jacobi_gap\":"
              << num(r.jacobi_gap) << ",\"classification\":"
              << quoted(classification_name(r.classification))
              << ",\"morse_index\":" << r.morse_index << ",\"kernel_dim\":" << r.kernel_dim
              << "}\n";
}

void print_morse(const std::string& text) {
    const MetricSpec spec = parse_metric(text);
    const MorseResult m = morse_index(spec);
    const double threshold = scal(spec) / (spec.dimension() - 1);
    std::cout << "{\"spec\":" << quoted(format_metric(spec)) << ",\"threshold\":"
              << num(threshold) << ",\"morse_index\":" << m.index << ",\"kernel_dim\":"
              << m.kernel_dim << "}\n";
}

std::vector<std::array<double, 3>> read_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    std::vector<std::array<double, 3>> curve;
    std::string line;
    bool header = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.find("t1") != std::string::npos) continue; // header row
        }
        std::array<double, 3> t{};
        std::istringstream ls(line);
        std::string fieldstr;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ls, fieldstr, ','))
                throw std::runtime_error("curve file line " + std::to_string(lineno) +
                                         ": expected t1,t2,t3");
            t[static_cast<std::size_t>(i)] = std::stod(fieldstr);
        }
        curve.push_back(t);
    }
    return curve;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral geometry of homogeneous CROSS metrics"};
    app.require_subcommand(1);

    std::string spec_text, spec_text_b, format = "json", out_path, obj_path, curve_path,
                            quotients = "S-S";
    double cutoff = 0.0, tol = 1e-8, merge_tol = 0.0;
    int n = 1, resolution = 64, samples = 500, which = 0;
    std::uint64_t seed = 1;

    auto* c_lambda1 = app.add_subcommand("lambda1", "first eigenvalue with multiplicity");
    c_lambda1->add_option("spec", spec_text, "metric spec, e.g. S7:h(0.5,1,1)")->required();

    auto* c_spec = app.add_subcommand("spectrum", "truncated Laplace spectrum");
    c_spec->add_option("spec", spec_text)->required();
    c_spec->add_option("--cutoff", cutoff, "largest eigenvalue to include")->required();
    c_spec->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_spec->add_option("--merge-tol", merge_tol, "relative coalescing tolerance");

    auto* c_stab = app.add_subcommand("stability", "Yamabe stability classification");
    c_stab->add_option("spec", spec_text)->required();

    auto* c_morse = app.add_subcommand("morse", "Morse index of the Yamabe solution");
    c_morse->add_option("spec", spec_text)->required();

    auto* c_bound = app.add_subcommand("boundary", "mesh the stability boundary surface");
    c_bound->add_option("--n", n)->required();
    c_bound->add_option("--resolution", resolution);
    c_bound->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    c_bound->add_option("--obj", obj_path, "also write a Wavefront point cloud");

    auto* c_bif = app.add_subcommand("bifurcate", "stability-boundary crossings along a curve");
    c_bif->add_option("--n", n)->required();
    c_bif->add_option("--curve-file", curve_path, "CSV with header t1,t2,t3")->required();

    auto* c_iso = app.add_subcommand("isospec", "compare two metrics spectrally");
    c_iso->add_option("specA", spec_text)->required();
    c_iso->add_option("specB", spec_text_b)->required();
    c_iso->add_option("--cutoff", cutoff)->required();
    c_iso->add_option("--tol", tol);

    auto* c_probe = app.add_subcommand("probe", "random isospectrality probe");
    c_probe->add_option("--n", n);
    c_probe->add_option("--quotients", quotients)->check(CLI::IsMember({"S-S", "S-RP", "RP-RP"}));
    c_probe->add_option("--samples", samples);
    c_probe->add_option("--cutoff", cutoff, "0 = automatic 4*max(lambda1)");
    c_probe->add_option("--tol", tol);
    c_probe->add_option("--seed", seed);

    auto* c_tables = app.add_subcommand("tables", "re-derive the reference tables numerically");
    c_tables->add_option("--which", which, "1, 2, or 3 (0 = all)")
        ->check(CLI::Range(0, 3));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*c_lambda1) {
            print_lambda1(spec_text);
        } else if (*c_spec) {
            print_spectrum(spec_text, cutoff, format, merge_tol);
        } else if (*c_stab) {
            print_stability(spec_text);
        } else if (*c_morse) {
            print_morse(spec_text);
        } else if (*c_bound) {
            const BoundaryMesh mesh = boundary_mesh(n, resolution);
            if (!mesh.warning.empty()) std::cerr << "warning: " << mesh.warning << "\n";
            if (!obj_path.empty()) {
                std::ofstream obj(obj_path);
                mesh.write_obj(obj);
            }
            if (out_path.empty()) {
                mesh.write_csv(std::cout);
            } else {
                std::ofstream out(out_path);
                mesh.write_csv(out);
                std::cerr << mesh.points.size() << " points written to " << out_path << "\n";
            }
        } else if (*c_bif) {
            const auto curve = read_curve(curve_path);
            const auto crossings = bifurcation_scan(n, curve, Quotient::Sphere);
            std::cout << "{\"n\":" << n << ",\"samples\":" << curve.size() << ",\"crossings\":[";
            for (std::size_t i = 0; i < crossings.size(); ++i) {
                const auto& c = crossings[i];
                if (i) std::cout << ',';
                std::cout << "{\"index\":" << c.index << ",\"t\":[" << num(c.t[0]) << ','
                          << num(c.t[1]) << ',' << num(c.t[2])
                          << "],\"p_residual\":" << num(c.p_residual) << '}';
            }
            std::cout << "]}\n";
        } else if (*c_iso) {
            const MetricSpec a = parse_metric(spec_text);
            const MetricSpec b = parse_metric(spec_text_b);
            const ComparisonVerdict v = compare(a, b, cutoff, tol);
            std::cout << "{\"a\":" << quoted(format_metric(a)) << ",\"b\":"
                      << quoted(format_metric(b)) << ",\"cutoff\":" << num(cutoff)
                      << ",\"verdict\":" << quoted(v.str()) << "}\n";
        } else if (*c_probe) {
            ProbeOptions opts;
            opts.n = n;
            opts.samples = samples;
            opts.cutoff = cutoff;
            opts.tol = tol;
            opts.seed = seed;
            opts.quotient_a = quotients == "RP-RP" ? Quotient::Projective : Quotient::Sphere;
            opts.quotient_b = quotients == "S-S" ? Quotient::Sphere : Quotient::Projective;
            std::cout << rigidity_probe(opts).to_json() << "\n";
        } else if (*c_tables) {
            return run_tables(which) == 0 ? 0 : 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
