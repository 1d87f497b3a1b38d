// Command-line benchmark driver: run a single case, run a grid-refinement
// study, or list the available problems.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdweno/config.hpp"
#include "rdweno/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitIo = 4;

void print_report(const rdweno::RunReport& rep) {
    std::printf("problem:        %s\n", rep.problem.c_str());
    if (rep.two_d)
        std::printf("grid:           %d x %d cells\n", rep.nx, rep.ny);
    else
        std::printf("grid:           %d cells\n", rep.nx);
    std::printf("iterations:     %ld\n", rep.iterations);
    std::printf("final residue:  %.6e (%s)\n", rep.final_residue,
                rep.converged ? "converged" : "iteration limit");
    if (rep.norms) {
        std::printf("L1 error:       %.6e\n", rep.norms->l1);
        std::printf("Linf error:     %.6e\n", rep.norms->linf);
    }
    if (rep.shock_location)
        std::printf("shock location: %.6f\n", *rep.shock_location);
    std::printf("wall time:      %.2f s\n", rep.wall_seconds);
}

std::vector<int> parse_levels(const std::string& spec) {
    std::vector<int> levels;
    std::string token;
    std::istringstream is(spec);
    while (std::getline(is, token, ',')) {
        try {
            levels.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw rdweno::ConfigError("bad refinement level: " + token);
        }
        if (levels.back() < 4)
            throw rdweno::ConfigError("refinement level must be >= 4: " + token);
    }
    if (levels.empty()) throw rdweno::ConfigError("--levels list is empty");
    return levels;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state residual distribution benchmark driver"};
    app.require_subcommand(1);

    rdweno::RunOptions opt;
    std::string config_path;
    std::string levels_spec;
    bool solver_defaults_max_iters = true;

    auto add_shared_flags = [&](CLI::App* cmd) {
        cmd->add_option("--problem", opt.problem, "benchmark name");
        cmd->add_option("--n", opt.n, "cells per direction (1D or square 2D)");
        cmd->add_option("--nx", opt.nx, "cells in x (2D)");
        cmd->add_option("--ny", opt.ny, "cells in y (2D)");
        cmd->add_option("--cfl", opt.solver.cfl, "CFL number");
        cmd->add_option("--max-iters", opt.solver.max_iters, "iteration cap")
            ->each([&](const std::string&) { solver_defaults_max_iters = false; });
        cmd->add_option("--tol", opt.solver.residue_tol, "residue stopping tolerance");
        cmd->add_option("--out", opt.out_dir, "output directory for CSV files");
        cmd->add_option("--config", config_path, "key = value configuration file");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "solve one benchmark to steady state");
    add_shared_flags(run_cmd);

    CLI::App* conv_cmd =
        app.add_subcommand("converge", "grid-refinement error study");
    add_shared_flags(conv_cmd);
    conv_cmd->add_option("--levels", levels_spec,
                         "comma-separated cell counts, e.g. 20,40,80");

    CLI::App* list_cmd = app.add_subcommand("list-problems", "list benchmark names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : rdweno::problem_names())
                std::printf("%s\n", name.c_str());
            return kExitOk;
        }

        CLI::App* active = run_cmd->parsed() ? run_cmd : conv_cmd;
        if (!config_path.empty()) {
            // Command-line flags win over file entries.
            rdweno::RunOptions from_file;
            from_file.solver = opt.solver;
            from_file.solver.max_iters = -1;  // sentinel: not set in the file
            rdweno::load_config_file(from_file, config_path);
            if (opt.problem.empty()) opt.problem = from_file.problem;
            if (opt.n == 0) opt.n = from_file.n;
            if (opt.nx == 0) opt.nx = from_file.nx;
            if (opt.ny == 0) opt.ny = from_file.ny;
            if (opt.out_dir.empty()) opt.out_dir = from_file.out_dir;
            if (!active->count("--cfl")) opt.solver.cfl = from_file.solver.cfl;
            if (!active->count("--max-iters") && from_file.solver.max_iters > 0) {
                opt.solver.max_iters = from_file.solver.max_iters;
                solver_defaults_max_iters = false;
            }
            if (!active->count("--tol"))
                opt.solver.residue_tol = from_file.solver.residue_tol;
            opt.solver.dist = from_file.solver.dist;
        }
        if (opt.problem.empty())
            throw rdweno::ConfigError("no problem selected (use --problem or --config)");

        const rdweno::Problem prob = rdweno::registry_lookup(opt.problem);
        if (solver_defaults_max_iters &&
            std::holds_alternative<rdweno::Problem2D>(prob))
            opt.solver.max_iters = 500000;

        if (run_cmd->parsed()) {
            const rdweno::RunReport rep = rdweno::run(opt);
            print_report(rep);
            return kExitOk;
        }

        // converge
        if (levels_spec.empty())
            throw rdweno::ConfigError("converge requires --levels");
        const std::vector<int> levels = parse_levels(levels_spec);
        const auto rows = rdweno::convergence_study(prob, levels, opt.solver);
        std::printf("%s", rdweno::format_convergence_table(rows).c_str());
        if (!opt.out_dir.empty()) {
            std::filesystem::create_directories(opt.out_dir);
            rdweno::write_convergence_csv(rows, opt.out_dir + "/convergence.csv");
        }
        return kExitOk;
    } catch (const rdweno::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const rdweno::SolverDivergence& e) {
        std::fprintf(stderr, "solver divergence: %s\n", e.what());
        return kExitDivergence;
    } catch (const rdweno::inadmissible_state& e) {
        std::fprintf(stderr, "solver divergence: %s\n", e.what());
        return kExitDivergence;
    } catch (const rdweno::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
}
