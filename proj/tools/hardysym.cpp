#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hs/errors.hpp"
#include "hs/obstruction.hpp"
#include "hs/parse.hpp"
#include "hs/report_io.hpp"
#include "hs/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 verify failure, 2 usage, 3 not-automorphism,
// 4 depth insufficient, 5 internal mismatch.
enum ExitCode {
    kOk = 0,
    kVerifyFailure = 1,
    kUsage = 2,
    kNotAutomorphism = 3,
    kDepthInsufficient = 4,
    kInternalMismatch = 5,
};

struct MapSpec {
    std::vector<std::string> num, den;
    std::vector<std::string> elliptic;    // a=<c> omega=<c>
    std::vector<std::string> involution;  // a=<c>
};

std::string keyed_value(const std::vector<std::string>& items, const std::string& key) {
    for (const std::string& item : items) {
        const std::size_t eq = item.find('=');
        if (eq != std::string::npos && item.substr(0, eq) == key) return item.substr(eq + 1);
    }
    throw std::invalid_argument("missing '" + key + "=' argument");
}

hs::MoebiusMap build_map(const MapSpec& spec) {
    const int ways = (!spec.num.empty() || !spec.den.empty() ? 1 : 0) +
                     (!spec.elliptic.empty() ? 1 : 0) + (!spec.involution.empty() ? 1 : 0);
    if (ways != 1)
        throw std::invalid_argument(
            "give exactly one of --num/--den, --elliptic, or --involution");
    if (!spec.elliptic.empty())
        return hs::build_elliptic(hs::parse_complex(keyed_value(spec.elliptic, "a")),
                                  hs::parse_complex(keyed_value(spec.elliptic, "omega")));
    if (!spec.involution.empty())
        return hs::involution(hs::parse_complex(keyed_value(spec.involution, "a")));
    if (spec.num.size() > 2 || spec.den.size() > 2)
        throw std::invalid_argument("--num/--den take at most two coefficients (b,a)");
    auto coeff = [](const std::vector<std::string>& c, std::size_t i) {
        return i < c.size() ? hs::parse_complex(c[i]) : hs::Complex{0.0};
    };
    return hs::MoebiusMap(coeff(spec.num, 1), coeff(spec.num, 0), coeff(spec.den, 1),
                          coeff(spec.den, 0));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output path " + out_path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << "\n";
}

int run_classify(const MapSpec& spec, const std::string& format, const std::string& out_path) {
    const hs::MoebiusMap phi = build_map(spec);
    const hs::AutoClass cls = hs::classify(phi);
    const hs::SymmetryVerdict v = hs::verdict(phi);
    if (format == "json")
        emit(hs::classify_to_json(cls, v).dump(2), out_path);
    else
        emit(hs::render_classify_text(cls, v), out_path);
    return kOk;
}

int run_obstruction(const std::string& a_text, int depth, const std::string& format,
                    const std::string& out_path) {
    const hs::Complex a = hs::parse_complex(a_text);
    const hs::ObstructionReport report = hs::build_report(a, depth);
    if (format == "json")
        emit(hs::doc_to_json(hs::make_doc(report)).dump(2), out_path);
    else if (format == "csv")
        emit(std::string("# schema=") + hs::kSchemaVersion + "\n" + hs::csv_header() + "\n" +
                 hs::csv_line(hs::row_from_report(report)),
             out_path);
    else
        emit(hs::render_report_text(report), out_path);
    return kOk;
}

int run_sweep(const std::string& grid_spec, int depth, const std::string& format,
              const std::string& out_path, int jobs) {
    const std::vector<hs::Complex> grid = hs::parse_grid(grid_spec);
    if (grid.empty()) throw std::invalid_argument("empty grid");

    std::vector<hs::SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            hs::SweepRow row;
            row.abs_a = std::abs(grid[i]);
            row.arg_a = std::arg(grid[i]);
            try {
                rows[i] = hs::row_from_report(hs::build_report(grid[i], depth));
            } catch (const hs::DepthInsufficient&) {
                row.status = "depth_insufficient";
                rows[i] = row;
            } catch (const hs::InternalMismatch&) {
                row.status = "internal_mismatch";
                rows[i] = row;
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
                rows[i] = row;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (format == "json") {
        emit(hs::sweep_to_json(rows).dump(2), out_path);
    } else if (format == "text") {
        emit(hs::render_sweep_text(rows), out_path);
    } else {
        std::string csv = std::string("# schema=") + hs::kSchemaVersion + "\n" +
                          hs::csv_header() + "\n";
        for (const hs::SweepRow& row : rows) csv += hs::csv_line(row) + "\n";
        emit(csv, out_path);
    }

    for (const hs::SweepRow& row : rows)
        if (row.gap && *row.gap <= 0.0) return kVerifyFailure;
    return kOk;
}

int run_verify_cmd(int depth, bool mutate_rho) {
    hs::VerifyOptions opts;
    opts.depth = depth;
    opts.mutate_rho = mutate_rho;
    const std::vector<hs::CheckResult> checks = hs::run_verify(opts);
    bool all_pass = true;
    for (const hs::CheckResult& c : checks) {
        all_pass = all_pass && c.pass;
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (delta=" << c.delta
                  << ", tol=" << c.tol << (c.detail.empty() ? "" : "; " + c.detail) << ")\n";
    }
    std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES present") << "\n";
    return all_pass ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy-space composition operator toolkit: classification and "
                 "complex-symmetry obstruction reports for disk automorphisms"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    int depth = 256;
    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--depth", depth, "truncation depth (>= 16)")->capture_default_str();
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path, "write output to this path");
    };

    MapSpec spec;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a Moebius symbol and report its verdict");
    classify_cmd->add_option("--num", spec.num, "numerator coefficients, constant first")
        ->delimiter(',');
    classify_cmd->add_option("--den", spec.den, "denominator coefficients, constant first")
        ->delimiter(',');
    classify_cmd->add_option("--elliptic", spec.elliptic, "a=<c> omega=<c>")->expected(2);
    classify_cmd->add_option("--involution", spec.involution, "a=<c>")->expected(1);
    add_common(classify_cmd);

    std::string a_text;
    CLI::App* obstruction_cmd =
        app.add_subcommand("obstruction", "full obstruction report at one fixed point");
    obstruction_cmd->add_option("--a", a_text, "fixed point, 0 < |a| < 1")->required();
    add_common(obstruction_cmd);

    std::string grid_spec;
    int jobs = 1;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "obstruction sweep over a grid of a");
    sweep_cmd->add_option("--grid", grid_spec,
                          "lo:hi:step[xP] over moduli, or list:c1;c2;... "
                          "(default 0.1:0.8:0.1x8)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_common(sweep_cmd);

    bool mutate_rho = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full invariant suite and report per-check status");
    verify_cmd->add_option("--depth", depth, "truncation depth (>= 16)")->capture_default_str();
    verify_cmd->add_flag("--mutate-rho", mutate_rho)->group("");  // internal consistency probe

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (depth < 16) {
        std::cerr << "error: depth must be >= 16\n";
        return kUsage;
    }
    if (format == "csv" && app.got_subcommand(classify_cmd)) {
        std::cerr << "error: classify supports json or text output\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return run_classify(spec, format, out_path);
        if (app.got_subcommand(obstruction_cmd))
            return run_obstruction(a_text, depth, format, out_path);
        if (app.got_subcommand(sweep_cmd))
            return run_sweep(grid_spec, depth, format, out_path, jobs);
        return run_verify_cmd(depth, mutate_rho);
    } catch (const hs::FixedPointAtOrigin& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const hs::NotAutomorphism& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotAutomorphism;
    } catch (const hs::DepthInsufficient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDepthInsufficient;
    } catch (const hs::InternalMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternalMismatch;
    } catch (const hs::NotInDisk& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailure;
    }
}
