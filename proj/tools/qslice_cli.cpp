// Command-line front end: polynomial algebra, zero classification and
// the verification probes, all speaking the library's JSON formats.
//
// Exit codes: 0 success, 2 usage or input parse error, 3 domain error
// (pole, zero polynomial, violated precondition).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qslice/io.hpp"

namespace {

struct Options {
    std::string poly;
    std::string left;
    std::string right;
    std::string at;
    std::string kind;
    std::string out;
    double tol = -1.0;
    int grid = -1;
    double radius = -1.0;
    std::uint64_t seed = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qslice::ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qslice::RegPoly load_poly(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return qslice::poly_from_json(slurp(arg.substr(1)));
    try {
        return qslice::poly_from_json(arg);
    } catch (const qslice::ParseError&) {
        if (std::filesystem::exists(arg)) return qslice::poly_from_json(slurp(arg));
        throw;
    }
}

void emit(const std::string& json, const std::string& out_path) {
    std::cout << json << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw qslice::ParseError("cannot write file '" + out_path + "'");
        out << json << "\n";
    }
}

qslice::GridSpec make_region(const Options& opt, double default_radius, int default_grid) {
    qslice::GridSpec region;
    region.center = opt.at.empty() ? qslice::Quaternion::zero() : qslice::parse_quaternion(opt.at);
    region.radius = opt.radius > 0.0 ? opt.radius : default_radius;
    region.points_per_axis = opt.grid > 0 ? opt.grid : default_grid;
    return region;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra, zero sets and verification probes for slice-regular quaternionic polynomials"};
    app.require_subcommand(1);

    Options opt;

    const auto add_common = [&opt](CLI::App* cmd, bool wants_poly) {
        if (wants_poly) cmd->add_option("--poly", opt.poly, "polynomial as inline JSON or @file");
        cmd->add_option("--out", opt.out, "also write the JSON result to this file");
        return cmd;
    };

    CLI::App* cmd_eval = add_common(app.add_subcommand("eval", "evaluate a polynomial at a point"), true);
    cmd_eval->add_option("--at", opt.at, "quaternion literal, e.g. 1-2i+0.5k")->required();

    CLI::App* cmd_mul = add_common(app.add_subcommand("mul", "regular product of two polynomials"), false);
    cmd_mul->add_option("--left", opt.left, "left factor (inline JSON or @file)")->required();
    cmd_mul->add_option("--right", opt.right, "right factor (inline JSON or @file)")->required();

    add_common(app.add_subcommand("conj", "regular conjugate"), true);
    add_common(app.add_subcommand("symm", "symmetrization f * f^c"), true);

    CLI::App* cmd_recip =
        add_common(app.add_subcommand("recip-eval", "evaluate the regular reciprocal f^-*"), true);
    cmd_recip->add_option("--at", opt.at, "evaluation point")->required();

    CLI::App* cmd_tf =
        add_common(app.add_subcommand("tf", "evaluate the sphere-preserving transform T_f"), true);
    cmd_tf->add_option("--at", opt.at, "evaluation point")->required();

    add_common(app.add_subcommand("zeros", "classify the complete zero set"), true);

    CLI::App* cmd_reg = add_common(
        app.add_subcommand("check-regular", "finite-difference slice-regularity check"), true);
    cmd_reg->add_option("--at", opt.at, "region center (default 0)");
    cmd_reg->add_option("--tol", opt.tol, "residual tolerance (default 1e-5)");
    cmd_reg->add_option("--grid", opt.grid, "slice grid points per axis (default 7)");
    cmd_reg->add_option("--radius", opt.radius, "slice region radius (default 1.5)");
    cmd_reg->add_option("--seed", opt.seed, "seed for the sampled units (default 1)");

    CLI::App* cmd_probe = add_common(app.add_subcommand("probe", "modulus and openness probes"), true);
    cmd_probe->add_option("--kind", opt.kind, "max | min | open")
        ->required()
        ->check(CLI::IsMember({"max", "min", "open"}));
    cmd_probe->add_option("--at", opt.at, "box center (max/min, default 0) or q0 (open, default 2)");
    cmd_probe->add_option("--tol", opt.tol, "zero tolerance for min (default 1e-6)");
    cmd_probe->add_option("--grid", opt.grid, "grid points per axis (default 15)");
    cmd_probe->add_option("--radius", opt.radius, "box radius (max/min, default 2) or ball radius (open, default 0.3)");
    cmd_probe->add_option("--seed", opt.seed, "seed for target sampling (default 0)");

    CLI::App* cmd_cex =
        add_common(app.add_subcommand("counterexample", "non-openness evidence for q^-2 + 1"), false);
    cmd_cex->add_option("--seed", opt.seed, "seed for the ball samples (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string result;
        if (cmd_eval->parsed()) {
            result = qslice::to_json(qslice::eval(load_poly(opt.poly), qslice::parse_quaternion(opt.at)));
        } else if (cmd_mul->parsed()) {
            result = qslice::to_json(qslice::star_mul(load_poly(opt.left), load_poly(opt.right)));
        } else if (app.get_subcommand("conj")->parsed()) {
            result = qslice::to_json(qslice::regular_conjugate(load_poly(opt.poly)));
        } else if (app.get_subcommand("symm")->parsed()) {
            result = qslice::to_json(qslice::symmetrization(load_poly(opt.poly)));
        } else if (cmd_recip->parsed()) {
            result = qslice::to_json(
                qslice::reciprocal_eval(load_poly(opt.poly), qslice::parse_quaternion(opt.at)));
        } else if (cmd_tf->parsed()) {
            result = qslice::to_json(
                qslice::transform_Tf(load_poly(opt.poly), qslice::parse_quaternion(opt.at)));
        } else if (app.get_subcommand("zeros")->parsed()) {
            result = qslice::to_json(qslice::find_zeros(load_poly(opt.poly)));
        } else if (cmd_reg->parsed()) {
            const qslice::GridSpec region = make_region(opt, 1.5, 7);
            const double tol = opt.tol > 0.0 ? opt.tol : 1e-5;
            const std::uint64_t seed = opt.seed ? opt.seed : 1;
            result = qslice::to_json(
                qslice::check_regular(load_poly(opt.poly), region, 1e-5, tol, 12, seed));
        } else if (cmd_probe->parsed()) {
            const qslice::RegPoly f = load_poly(opt.poly);
            qslice::ProbeReport report;
            if (opt.kind == "max") {
                report = qslice::max_modulus_probe(f, make_region(opt, 2.0, 15));
            } else if (opt.kind == "min") {
                const double tol = opt.tol > 0.0 ? opt.tol : 1e-6;
                report = qslice::min_modulus_probe(f, make_region(opt, 2.0, 15), tol);
            } else {
                const qslice::Quaternion q0 =
                    opt.at.empty() ? qslice::Quaternion(2.0) : qslice::parse_quaternion(opt.at);
                const double r = opt.radius > 0.0 ? opt.radius : 0.3;
                report = qslice::open_mapping_probe(f, q0, r, 10, opt.seed ? opt.seed : 2);
            }
            result = qslice::to_json(report);
        } else if (cmd_cex->parsed()) {
            result = qslice::to_json(qslice::counterexample_probe(opt.seed ? opt.seed : 3));
        }
        emit(result, opt.out);
        return 0;
    } catch (const qslice::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qslice::Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
}
