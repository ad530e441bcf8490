#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghtk/acceptance.hpp"
#include "ghtk/borsuk.hpp"
#include "ghtk/generators.hpp"
#include "ghtk/io.hpp"
#include "ghtk/metric_space.hpp"
#include "ghtk/solver.hpp"

namespace {

struct GlobalFlags {
    double tol_eq = -1.0;
    double tol_tri = -1.0;
    unsigned workers = 1;
    std::string format = "text";
    std::size_t max_points = 10;
};

std::optional<ghtk::ToleranceConfig> tolerance_override(const GlobalFlags& g) {
    if (g.tol_eq < 0 && g.tol_tri < 0) return std::nullopt;
    ghtk::ToleranceConfig tol;
    tol.eps_eq = g.tol_eq >= 0 ? g.tol_eq : 0.0;
    tol.eps_tri = g.tol_tri >= 0 ? g.tol_tri : 0.0;
    return tol;
}

ghtk::FiniteMetricSpace load(const std::string& path, const GlobalFlags& g) {
    return ghtk::io::load_space(path, tolerance_override(g));
}

void add_common_flags(CLI::App* cmd, GlobalFlags& g) {
    cmd->add_option("--tol-eq", g.tol_eq, "equality tolerance (absolute)");
    cmd->add_option("--tol-tri", g.tol_tri, "triangle-inequality slack (absolute)");
    cmd->add_option("--workers", g.workers, "search worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-points", g.max_points, "exact-solver size cap")
        ->check(CLI::PositiveNumber);
}

int cmd_validate(const std::string& path, const GlobalFlags& g) {
    const ghtk::FiniteMetricSpace x = load(path, g);
    if (g.format == "json") {
        std::cout << "{\"valid\": true, \"n\": " << x.size()
                  << ", \"diameter\": " << x.diameter() << "}\n";
    } else {
        std::cout << "valid metric space: n = " << x.size()
                  << ", diameter = " << x.diameter() << "\n";
    }
    return 0;
}

int cmd_info(const std::string& path, const GlobalFlags& g) {
    const ghtk::FiniteMetricSpace x = load(path, g);
    std::set<double> spectrum;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) spectrum.insert(x(i, j));
    const std::size_t edge_count =
        x.size() >= 2 ? ghtk::diameter_graph(x).edges.size() : 0;

    if (g.format == "json") {
        std::cout << "{\"n\": " << x.size() << ", \"diameter\": " << x.diameter()
                  << ", \"distinct_distances\": " << spectrum.size()
                  << ", \"diameter_graph_edges\": " << edge_count << "}\n";
        return 0;
    }
    std::cout << "n = " << x.size() << "\ndiameter = " << x.diameter()
              << "\ndistance spectrum (" << spectrum.size() << " distinct):";
    for (double d : spectrum) std::cout << ' ' << d;
    std::cout << "\ndiameter-graph edges = " << edge_count << "\n";
    return 0;
}

int cmd_gh(const std::string& a, const std::string& b, const GlobalFlags& g) {
    const ghtk::FiniteMetricSpace x = load(a, g);
    const ghtk::FiniteMetricSpace y = load(b, g);
    ghtk::SolverOptions opts;
    opts.max_points = g.max_points;
    opts.worker_count = g.workers;

    ghtk::GHResult result;
    try {
        result = ghtk::gh_exact(x, y, opts);
    } catch (const ghtk::Error& e) {
        if (e.name() != "TooLarge") throw;
        const auto [lo, hi] = ghtk::gh_bounds(x, y);
        if (g.format == "json") {
            std::cout << "{\"value\": null, \"method\": \"bounds-only\", "
                      << "\"lower\": " << lo << ", \"upper\": " << hi
                      << ", \"witness\": null}\n";
        } else {
            std::cout << "TooLarge: instance exceeds --max-points; bounds only\n"
                      << "lower = " << lo << ", upper = " << hi << "\n";
        }
        return 0;
    }
    if (g.format == "json") {
        std::cout << ghtk::io::gh_result_to_json(result);
    } else {
        std::cout << "d_GH = " << result.value << " (method: "
                  << ghtk::method_name(result.method) << ")\n"
                  << "bounds: [" << result.lower << ", " << result.upper << "]\n";
        if (result.witness)
            std::cout << "witness = "
                      << ghtk::io::correspondence_to_json(*result.witness) << "\n";
    }
    return 0;
}

int cmd_borsuk(const std::string& path, const GlobalFlags& g) {
    const ghtk::FiniteMetricSpace x = load(path, g);
    const ghtk::BorsukResult r = ghtk::borsuk_number(x);
    if (g.format == "json") {
        std::cout << ghtk::io::borsuk_result_to_json(r);
        return 0;
    }
    std::cout << "beta = " << r.number << " (diameter " << r.diam
              << ", epsilon " << r.epsilon << ")\nwitness blocks:";
    for (const auto& block : r.witness.blocks()) {
        std::cout << " {";
        for (std::size_t k = 0; k < block.size(); ++k)
            std::cout << (k ? "," : "") << block[k];
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

int cmd_delta(std::size_t m, double lambda, const std::string& out) {
    const ghtk::FiniteMetricSpace x = ghtk::delta_simplex(m, lambda);
    const std::string text = ghtk::io::matrix_to_json(x);
    if (out.empty())
        std::cout << text;
    else
        ghtk::io::write_file(out, text);
    return 0;
}

int cmd_gen(const std::string& spec_text, const std::string& out) {
    const ghtk::GenSpec spec = ghtk::parse_gen_spec(spec_text);
    const std::string text = ghtk::io::matrix_to_json(ghtk::generate(spec));
    if (out.empty())
        std::cout << text;
    else
        ghtk::io::write_file(out, text);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               const GlobalFlags& g) {
    ghtk::accept::SuiteOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.workers = g.workers;
    const auto results = ghtk::accept::run_suite(suite, opts);
    if (g.format == "json")
        std::cout << ghtk::accept::report_to_json(results, opts);
    else
        std::cout << ghtk::accept::report_to_text(results);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gromov-Hausdorff distances and Borsuk numbers "
                 "of finite metric spaces"};
    app.require_subcommand(1);
    GlobalFlags g;

    std::string file_a, file_b, out_path, gen_spec, suite;
    std::size_t delta_m = 2;
    double delta_lambda = 1.0;
    std::uint64_t seed = 0;
    int trials = -1;
    bool seed_given = false;

    auto* validate = app.add_subcommand("validate", "check a distance matrix");
    validate->add_option("file", file_a)->required();
    add_common_flags(validate, g);

    auto* info = app.add_subcommand("info", "summarize a metric space");
    info->add_option("file", file_a)->required();
    add_common_flags(info, g);

    auto* gh = app.add_subcommand("gh", "exact GH distance between two spaces");
    gh->add_option("file_x", file_a)->required();
    gh->add_option("file_y", file_b)->required();
    add_common_flags(gh, g);

    auto* borsuk = app.add_subcommand("borsuk", "Borsuk number of a space");
    borsuk->add_option("file", file_a)->required();
    add_common_flags(borsuk, g);

    auto* delta = app.add_subcommand("delta", "write a single-distance space");
    delta->add_option("m", delta_m)->required();
    delta->add_option("lambda", delta_lambda)->required();
    delta->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate a seeded test space");
    gen->add_option("spec", gen_spec, "kind:n[:dim][:scale][:seed]")->required();
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "criterion id, alias, or 'all'")->required();
    verify->add_option("--seed", seed, "suite seed (required)")->required();
    verify->add_option("--trials", trials, "override per-criterion trial count");
    add_common_flags(verify, g);
    (void)seed_given;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file_a, g);
        if (info->parsed()) return cmd_info(file_a, g);
        if (gh->parsed()) return cmd_gh(file_a, file_b, g);
        if (borsuk->parsed()) return cmd_borsuk(file_a, g);
        if (delta->parsed()) return cmd_delta(delta_m, delta_lambda, out_path);
        if (gen->parsed()) return cmd_gen(gen_spec, out_path);
        if (verify->parsed()) return cmd_verify(suite, seed, trials, g);
    } catch (const ghtk::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        if (e.name() == "UnknownSuite" || e.name() == "InvalidSpec") return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
