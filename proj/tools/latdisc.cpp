// latdisc — lattice-point counting and discrepancy experiments for bodies of
// rotation with flat poles.
//
//   latdisc <subcommand> --config <path> [--out <path>] [--workers <n>] [--seed <n>]
//
// Subcommands: coeffs volume mainterm count delta meansquare hardy polar.
// Output is CSV with a mandatory header row, preceded by a comment line
// recording the toolkit version and the hash of the effective configuration.
// Identical configurations produce byte-identical files.

#include "latdisc/latdisc.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latdisc;

int usage(const char* msg = nullptr) {
    if (msg) std::cerr << "error: " << msg << "\n";
    std::cerr <<
        "usage: latdisc <subcommand> --config <path> [--out <path>] [--workers <n>] [--seed <n>]\n"
        "subcommands:\n"
        "  coeffs      flat-point series table (side, j, d_j, dstar_j)\n"
        "  volume      body volume\n"
        "  mainterm    main-term values M(t) over the configured t list\n"
        "  count       exact lattice counts A(t) over the configured t list\n"
        "  delta       discrepancy samples (t, A, M, delta)\n"
        "  meansquare  dyadic mean-square integrals and fitted growth exponent\n"
        "  hardy       truncated Hardy identity vs exact circle remainder\n"
        "  polar       tac-function counts N(X) vs the h^2-quadrature constant\n";
    return 1;
}

struct Cli {
    std::string subcommand;
    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> seed;
};

bool parse_cli(int argc, char** argv, Cli& cli) {
    if (argc < 2) return false;
    cli.subcommand = argv[1];
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        auto need_value = [&](const char* flag) -> const char* {
            if (i + 1 >= argc) {
                std::cerr << "error: " << flag << " requires a value\n";
                return nullptr;
            }
            return argv[++i];
        };
        if (arg == "--config") {
            const char* v = need_value("--config");
            if (!v) return false;
            cli.config_path = v;
        } else if (arg == "--out") {
            const char* v = need_value("--out");
            if (!v) return false;
            cli.out_path = v;
        } else if (arg == "--workers") {
            const char* v = need_value("--workers");
            if (!v) return false;
            cli.workers = static_cast<unsigned>(std::stoul(v));
        } else if (arg == "--seed") {
            const char* v = need_value("--seed");
            if (!v) return false;
            cli.seed = std::stoull(v);
        } else {
            std::cerr << "error: unknown flag `" << arg << "`\n";
            return false;
        }
    }
    return !cli.config_path.empty();
}

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

void emit_preamble(CsvWriter& csv, const ExperimentConfig& cfg) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    csv.comment(std::string("latdisc ") + kVersion + " config_hash=" + buf);
}

void run_coeffs(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body = cfg.body();
    const int J = cfg.effective_J();
    csv.row({"side", "j", "d_j", "dstar_j"});
    for (Side side : {Side::Left, Side::Right}) {
        const FlatPointExpansion e = expand_flat_point(body, side, J);
        for (int j = 1; j <= J + 1; ++j) {
            std::string dj, sj;
            if (j <= J) dj = fmt_double(e.d[static_cast<std::size_t>(j - 1)]);
            if (j >= 2) sj = fmt_double(e.d_star[static_cast<std::size_t>(j - 2)]);
            csv.row({side_name(side), std::to_string(j), dj, sj});
        }
    }
}

void run_volume(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body = cfg.body();
    csv.row({"body", "volume"});
    csv.row({body.describe(), fmt_double(volume(body))});
}

MainTermModel model_for(const ExperimentConfig& cfg, const RotationBody& body) {
    const int J_left  = std::max(cfg.effective_J(), body.flatness_order(Side::Left));
    const int J_right = std::max(cfg.effective_J(), body.flatness_order(Side::Right));
    const auto left   = expand_flat_point(body, Side::Left, J_left);
    const auto right  = expand_flat_point(body, Side::Right, J_right);
    return build_model(body, left, right, cfg.K);
}

void run_mainterm(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body  = cfg.body();
    const MainTermModel model = model_for(cfg, body);
    csv.row({"t", "M"});
    for (const Rational& t : cfg.t_list)
        csv.row({rational_str(t), fmt_double(main_term_eval(model, to_double(t)))});
}

void run_count(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body = cfg.body();
    csv.row({"t", "A"});
    for (const Rational& t : cfg.t_list) {
        const auto start = std::chrono::steady_clock::now();
        const CountResult r = count_exact(body, t, cfg.workers);
        const auto ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        csv.row({rational_str(t), r.A.str()});
        std::fprintf(stderr, "count t=%s: %s slices, %.1f ms\n",
                     rational_str(t).c_str(), std::to_string(r.slice_count).c_str(), ms);
    }
}

void run_delta(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body  = cfg.body();
    const MainTermModel model = model_for(cfg, body);
    csv.row({"t", "A", "M", "delta"});
    for (const Rational& t : cfg.t_list) {
        const DiscrepancySample s = delta_at(body, model, t, cfg.workers);
        csv.row({rational_str(t), s.A.str(), fmt_double(s.M), fmt_double(s.delta)});
    }
}

void run_meansquare(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body  = cfg.body();
    const MainTermModel model = model_for(cfg, body);
    std::vector<double> T_grid;
    for (const Rational& T : cfg.T_list) T_grid.push_back(to_double(T));
    for (std::size_t i = 1; i < T_grid.size(); ++i)
        if (T_grid[i] <= T_grid[i - 1])
            throw std::invalid_argument("meansquare: T list must be strictly increasing");
    const MeanSquareReport rep =
        mean_square_report(body, model, T_grid, cfg.density, cfg.workers);
    csv.row({"T", "integral", "slope_so_far"});
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        std::string slope;
        if (rep.integrals[i] > 0.0) {
            const double x = std::log(T_grid[i]);
            const double y = std::log(rep.integrals[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++n;
            if (n >= 2) slope = fmt_double((n * sxy - sx * sy) / (n * sxx - sx * sx));
        }
        csv.row({fmt_double(T_grid[i]), fmt_double(rep.integrals[i]), slope});
    }
}

void run_hardy(const ExperimentConfig& cfg, CsvWriter& csv) {
    std::uint64_t y_max = 0;
    for (const Rational& y : cfg.Y_list)
        y_max = std::max(y_max, floor_rat(y).template convert_to<std::uint64_t>());
    const RSieve sieve = sieve_r(y_max);
    csv.row({"X", "Y", "P_exact", "P_truncated", "abs_error"});
    for (const Rational& Xq : cfg.X_list) {
        const double X = to_double(Xq);
        const double P = P_of(X);
        for (const Rational& Yq : cfg.Y_list) {
            const double Y  = to_double(Yq);
            const double Pt = hardy_truncated(X, Y, sieve);
            csv.row({rational_str(Xq), rational_str(Yq), fmt_double(P), fmt_double(Pt),
                     fmt_double(std::abs(P - Pt))});
        }
    }
}

void run_polar(const ExperimentConfig& cfg, CsvWriter& csv) {
    const RotationBody body = cfg.body();
    const double C = polar_volume_constant(body);
    csv.row({"X", "N", "N_over_X3", "C_quadrature"});
    for (const Rational& Xq : cfg.X_list) {
        const double X = to_double(Xq);
        const std::int64_t N = count_N(body, X, to_double(cfg.polar_bound), cfg.workers);
        csv.row({rational_str(Xq), std::to_string(N),
                 fmt_double(static_cast<double>(N) / (X * X * X)), fmt_double(C)});
    }
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    if (!parse_cli(argc, argv, cli)) return usage();

    std::ifstream in(cli.config_path);
    if (!in) {
        std::cerr << "error: cannot open config file `" << cli.config_path << "`\n";
        return 1;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    try {
        ExperimentConfig cfg = parse_config(buffer.str());
        if (cli.out_path) cfg.out_path = *cli.out_path;
        if (cli.workers) cfg.workers = *cli.workers;
        if (cli.seed) cfg.seed = *cli.seed;

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!cfg.out_path.empty() && cfg.out_path != "-") {
            file.open(cfg.out_path, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open output file `" << cfg.out_path << "`\n";
                return 1;
            }
            out = &file;
        }
        CsvWriter csv(*out);
        emit_preamble(csv, cfg);

        if (cli.subcommand == "coeffs") run_coeffs(cfg, csv);
        else if (cli.subcommand == "volume") run_volume(cfg, csv);
        else if (cli.subcommand == "mainterm") run_mainterm(cfg, csv);
        else if (cli.subcommand == "count") run_count(cfg, csv);
        else if (cli.subcommand == "delta") run_delta(cfg, csv);
        else if (cli.subcommand == "meansquare") run_meansquare(cfg, csv);
        else if (cli.subcommand == "hardy") run_hardy(cfg, csv);
        else if (cli.subcommand == "polar") run_polar(cfg, csv);
        else return usage(("unknown subcommand `" + cli.subcommand + "`").c_str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
