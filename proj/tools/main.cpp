// robinson: command-line front end for the Robinson similarity library.
//
// Subcommands: gamma1, approx, seriate, generate, graph-approx. Matrices are
// headerless CSV, graphs are "n m" + edge lines, permutations one line of
// images. Reports serialize to JSON with a fixed field order. Exit codes:
// 0 success, 2 usage, 3 invalid input, 4 internal invariant failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robinson/gamma.hpp"
#include "robinson/io.hpp"
#include "robinson/matrix.hpp"
#include "robinson/oracle.hpp"
#include "robinson/pipeline.hpp"
#include "robinson/seriate.hpp"
#include "robinson/synth.hpp"

namespace {

using nlohmann::ordered_json;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
        return d.count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void print_metric(const char* name, double value) {
    std::printf("%s = %.12f\n", name, value);
}

ordered_json report_head(const char* command, const std::string& input, int n, double ms) {
    ordered_json doc;
    doc["command"] = command;
    doc["input"] = input;
    doc["n"] = n;
    doc["runtime_ms"] = ms;
    return doc;
}

ordered_json approx_to_json(const robinson::ApproxReport& rep) {
    ordered_json a;
    a["gamma1"] = rep.gamma1;
    a["m_layers"] = rep.m_layers;
    a["l1_dist"] = rep.l1_dist;
    a["upper_bound"] = rep.upper_bound;
    a["lower_bound"] = rep.lower_bound;
    a["upper_bound_holds"] = rep.upper_bound_holds;
    a["mode_bound"] = rep.mode_bound;
    a["mode_bound_holds"] = rep.mode_bound_holds;
    a["preprocess_used"] = rep.preprocess_used;
    a["diagonal_restored"] = rep.diagonal_restored;
    ordered_json layers = ordered_json::array();
    for (const robinson::LayerReport& lr : rep.per_layer) {
        ordered_json l;
        l["level"] = lr.level;
        l["weight"] = lr.weight;
        l["eps"] = lr.eps;
        l["threshold"] = lr.threshold;
        l["toggles"] = lr.toggles;
        l["l1_preprocess"] = lr.l1_preprocess;
        l["l1_threshold"] = lr.l1_threshold;
        l["gamma_after_preprocess"] = lr.gamma_after_preprocess;
        l["bypassed"] = lr.bypassed;
        layers.push_back(std::move(l));
    }
    a["per_layer"] = std::move(layers);
    return a;
}

void write_json(const ordered_json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw robinson::ValidationError("cannot write " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw robinson::ValidationError("cannot write " + path);
}

struct GammaArgs {
    std::string input;
    std::string method = "fast";
};

int run_gamma1(const GammaArgs& args) {
    robinson::SymmetricMatrix a = robinson::read_matrix_csv(args.input);
    double g = args.method == "direct" ? robinson::gamma1_direct(a) : robinson::gamma1_fast(a);
    print_metric("gamma1", g);
    return 0;
}

struct ApproxArgs {
    std::string input;
    std::string output;
    std::string report;
    bool no_preprocess = false;
    bool no_restore_diagonal = false;
};

int run_approx(const ApproxArgs& args) {
    Timer timer;
    robinson::SymmetricMatrix a = robinson::read_matrix_csv(args.input);
    robinson::ApproxOptions opt;
    opt.preprocess = !args.no_preprocess;
    opt.restore_diagonal = !args.no_restore_diagonal;
    robinson::GeneralApproxResult res = robinson::approximate_general(a, opt);
    robinson::write_matrix_csv(res.matrix, args.output);
    print_metric("gamma1", res.report.gamma1);
    print_metric("l1_dist", res.report.l1_dist);
    if (!args.report.empty()) {
        ordered_json doc = report_head("approx", args.input, res.report.n, timer.ms());
        doc["approx"] = approx_to_json(res.report);
        write_json(doc, args.report);
    }
    return 0;
}

struct SeriateArgs {
    std::string input;
    std::string method = "local";
    std::string output;
    std::string report;
    int restarts = 4;
    std::uint64_t seed = 0;
    int threads = 1;
};

int run_seriate(const SeriateArgs& args) {
    Timer timer;
    robinson::SymmetricMatrix a = robinson::read_matrix_csv(args.input);
    robinson::Permutation best;
    double best_gamma = 0;
    ordered_json extra;
    if (args.method == "exhaustive") {
        robinson::SeriationFitResult fit = robinson::best_seriation(a);
        best = fit.witnesses.front();
        best_gamma = fit.best_objective;
        extra["witnesses"] = fit.witnesses.size();
    } else if (args.method == "spectral") {
        robinson::FiedlerResult fied = robinson::fiedler_order(a);
        best = fied.order;
        best_gamma = robinson::gamma1_fast(robinson::apply_permutation(a, best));
        extra["fiedler_converged"] = fied.info.converged;
        extra["fiedler_degenerate"] = fied.info.degenerate;
        extra["lambda2"] = fied.info.lambda2;
        extra["iterations"] = fied.info.iterations;
    } else {
        robinson::SeriationConfig cfg;
        cfg.restarts = args.restarts;
        cfg.seed = args.seed;
        robinson::SeriationResult res = robinson::seriate_local(a, cfg, args.threads);
        best = res.best;
        best_gamma = res.best_gamma;
        extra["restarts"] = args.restarts;
        extra["seed"] = args.seed;
        extra["threads"] = args.threads;
        extra["fiedler_converged"] = res.fiedler.converged;
        extra["fiedler_degenerate"] = res.fiedler.degenerate;
        extra["fiedler_fallback"] = res.fiedler_fallback;
    }
    print_metric("best_gamma1", best_gamma);
    if (!args.output.empty()) robinson::write_permutation(best, args.output);
    if (!args.report.empty()) {
        ordered_json doc = report_head("seriate", args.input, a.size(), timer.ms());
        ordered_json s;
        s["method"] = args.method;
        s["best_gamma1"] = best_gamma;
        s["permutation"] = best.images();
        for (auto& [key, value] : extra.items()) s[key] = value;
        doc["seriation"] = std::move(s);
        write_json(doc, args.report);
    }
    return 0;
}

struct GenerateArgs {
    int n = 0;
    int levels = 0;
    double noise = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::string planted_dir;
};

int run_generate(const GenerateArgs& args) {
    robinson::PlantedInstance inst =
        robinson::planted_instance(args.n, args.levels, args.noise, args.seed);
    robinson::write_matrix_csv(inst.shuffled, args.output);
    if (!args.planted_dir.empty()) {
        std::filesystem::path dir(args.planted_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw robinson::ValidationError("cannot create " + args.planted_dir);
        robinson::write_matrix_csv(inst.clean, (dir / "clean.csv").string());
        robinson::write_matrix_csv(inst.noisy, (dir / "noisy.csv").string());
        robinson::write_matrix_csv(inst.shuffled, (dir / "shuffled.csv").string());
        robinson::write_permutation(inst.truth, (dir / "truth_perm.txt").string());
        ordered_json meta;
        meta["n"] = args.n;
        meta["levels"] = args.levels;
        meta["noise"] = args.noise;
        meta["seed"] = args.seed;
        write_json(meta, (dir / "meta.json").string());
    }
    return 0;
}

struct GraphArgs {
    std::string input;
    std::string output;
    std::string report;
};

int run_graph_approx(const GraphArgs& args) {
    Timer timer;
    robinson::Graph g = robinson::read_graph(args.input);
    robinson::GraphApproxResult res = robinson::unit_interval_approx(g);
    robinson::write_graph(res.graph, args.output);
    std::printf("edit_distance = %lld\n", static_cast<long long>(res.edit_distance));
    if (!args.report.empty()) {
        ordered_json doc = report_head("graph-approx", args.input, res.report.n, timer.ms());
        doc["edit_distance"] = res.edit_distance;
        doc["approx"] = approx_to_json(res.report);
        write_json(doc, args.report);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robinson similarity toolkit: measure distance from Robinson form, "
                 "build certified Robinson approximations, order noisy similarities"};
    app.require_subcommand(1);

    GammaArgs gamma_args;
    CLI::App* gamma = app.add_subcommand("gamma1", "Distance of a CSV matrix from Robinson form");
    gamma->add_option("input", gamma_args.input, "matrix CSV file")->required();
    gamma->add_option("--method", gamma_args.method, "fast (layer counting) or direct (triple scan)")
        ->check(CLI::IsMember({"fast", "direct"}));

    ApproxArgs approx_args;
    CLI::App* approx = app.add_subcommand("approx", "Certified Robinson approximation of a CSV matrix");
    approx->add_option("input", approx_args.input, "matrix CSV file")->required();
    approx->add_option("-o,--output", approx_args.output, "output matrix CSV file")->required();
    approx->add_flag("--no-preprocess", approx_args.no_preprocess,
                     "round layers directly, without the inversion-removing pass");
    approx->add_flag("--no-restore-diagonal", approx_args.no_restore_diagonal,
                     "keep the rounded diagonal instead of copying the input's");
    approx->add_option("--report", approx_args.report, "write a JSON run report here");

    SeriateArgs seriate_args;
    CLI::App* seriate = app.add_subcommand("seriate", "Order a CSV matrix to minimize gamma1");
    seriate->add_option("input", seriate_args.input, "matrix CSV file")->required();
    seriate->add_option("--method", seriate_args.method,
                        "local (multistart descent), exhaustive (all orders, n <= 8) or spectral")
        ->check(CLI::IsMember({"local", "exhaustive", "spectral"}));
    seriate->add_option("--restarts", seriate_args.restarts, "descent starts beyond fiedler and identity");
    seriate->add_option("--seed", seriate_args.seed, "seed for the random starts");
    seriate->add_option("--threads", seriate_args.threads, "worker cap; never changes the result");
    seriate->add_option("-o,--output", seriate_args.output, "write the best order here");
    seriate->add_option("--report", seriate_args.report, "write a JSON run report here");

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand("generate", "Planted noisy-seriation instance");
    generate->add_option("--n", generate_args.n, "matrix size")->required();
    generate->add_option("--levels", generate_args.levels, "distinct similarity levels")->required();
    generate->add_option("--noise", generate_args.noise, "uniform noise amplitude in [0, 1]")->required();
    generate->add_option("--seed", generate_args.seed, "instance seed")->required();
    generate->add_option("-o,--output", generate_args.output, "output matrix CSV file: the shuffled instance")
        ->required();
    generate->add_option("--planted", generate_args.planted_dir,
                         "also write clean/noisy/shuffled/truth/meta files into this directory");

    GraphArgs graph_args;
    CLI::App* graph = app.add_subcommand("graph-approx", "Nearest unit interval graph in the given order");
    graph->add_option("input", graph_args.input, "graph file: 'n m' header, then 'u v' edge lines")->required();
    graph->add_option("-o,--output", graph_args.output, "output graph file")->required();
    graph->add_option("--report", graph_args.report, "write a JSON run report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gamma)) return run_gamma1(gamma_args);
        if (app.got_subcommand(approx)) return run_approx(approx_args);
        if (app.got_subcommand(seriate)) return run_seriate(seriate_args);
        if (app.got_subcommand(generate)) return run_generate(generate_args);
        return run_graph_approx(graph_args);
    } catch (const robinson::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const robinson::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
