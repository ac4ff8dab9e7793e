#include "dihedral/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihedral/cayley_graph.hpp"
#include "dihedral/classifier.hpp"
#include "dihedral/metric_dimension.hpp"
#include "dihedral/structure.hpp"

namespace dihedral {
namespace {

int default_jobs() {
    if (const char* env = std::getenv(jobs_env_var)) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024) {
            return static_cast<int>(parsed);
        }
    }
    return 1;
}

cayley_graph build_from_args(int n, const std::string& set_text) {
    return build_cayley(n, connection_set::parse(n, set_text));
}

int run_build(int n, const std::string& set_text, bool dot) {
    cayley_graph g = build_from_args(n, set_text);
    std::cout << (dot ? export_dot(g) : export_json(g)) << '\n';
    return 0;
}

int run_dim(int n, const std::string& set_text, const search_config& cfg) {
    cayley_graph g = build_from_args(n, set_text);
    dimension_result result = metric_dimension_exact(g, cfg);
    nlohmann::json j;
    j["n"] = n;
    j["set"] = g.set.to_string();
    j["dimension"] = result.dimension;
    j["basis"] = result.basis;
    auto& tokens = j["basis_tokens"] = nlohmann::json::array();
    for (int v : result.basis) tokens.push_back(token(g.vertices[v]));
    j["stats"] = {{"examined", result.stats.examined}, {"pruned", result.stats.pruned}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_classify(int n, const std::string& set_text) {
    auto set = connection_set::parse(n, set_text);
    nlohmann::json j = to_json(classify_dim2(n, set));
    j["n"] = n;
    j["set"] = set.to_string();
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_recognize(int n, const std::string& set_text) {
    cayley_graph g = build_from_args(n, set_text);
    structure_verdict verdict = recognize(g);
    nlohmann::json j;
    j["n"] = n;
    j["set"] = g.set.to_string();
    j["kind"] = to_string(verdict.kind);
    j["parameter"] = verdict.parameter;
    j["mapping"] = verdict.mapping ? nlohmann::json(*verdict.mapping) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_verify(int from, int to, int max_size, const verify_config& cfg,
               const std::string& out_path) {
    verification_report report = verify_range(from, to, max_size, cfg);
    nlohmann::json j = to_json(report);
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
        out << j.dump(2) << '\n';
        std::cout << "instances=" << report.summary.instances
                  << " generating=" << report.summary.generating
                  << " agreements=" << report.summary.agreements
                  << " disagreements=" << report.summary.disagreements.size()
                  << " skipped=" << report.summary.skipped << " report=" << out_path << '\n';
    }
    return exit_code_for(report);
}

}  // namespace

int exit_code_for(const verification_report& report) {
    return report.summary.disagreements.empty() ? 0 : 2;
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Cayley graphs on dihedral groups: construction, exact metric "
                 "dimension, dimension-two classification, verification"};
    app.require_subcommand(1);

    int n = 0;
    std::string set_text;
    bool want_dot = false;
    bool want_json = false;
    search_config search;
    search.parallelism = default_jobs();
    int from = 2;
    int to = 6;
    int max_size = 3;
    int verify_jobs = default_jobs();
    std::string out_path;

    auto add_graph_options = [&](CLI::App* sub) {
        sub->add_option("--n", n, "rotation modulus n of D_2n")->required();
        sub->add_option("--set", set_text, "connection set, e.g. r1,r4,s0")->required();
    };

    CLI::App* build = app.add_subcommand("build", "build Cay(D_2n, S) and print it");
    add_graph_options(build);
    build->add_flag("--dot", want_dot, "emit Graphviz DOT");
    build->add_flag("--json", want_json, "emit JSON (default)");

    CLI::App* dim = app.add_subcommand("dim", "exact metric dimension with basis");
    add_graph_options(dim);
    dim->add_option("--max-k", search.max_k, "largest subset size to try");
    dim->add_option("--max-vertices", search.max_vertices, "largest solvable graph");
    dim->add_option("--jobs", search.parallelism, "parallel search workers");

    CLI::App* classify = app.add_subcommand("classify", "dimension-two classification of (n, S)");
    add_graph_options(classify);

    CLI::App* recognize_cmd = app.add_subcommand("recognize", "match against known structures");
    add_graph_options(recognize_cmd);

    CLI::App* verify = app.add_subcommand("verify", "classifier vs solver over a range of n");
    verify->add_option("--from", from, "first n")->required();
    verify->add_option("--to", to, "last n")->required();
    verify->add_option("--max-set-size", max_size, "largest |S| to enumerate");
    verify->add_option("--max-k", search.max_k, "largest subset size to try");
    verify->add_option("--max-vertices", search.max_vertices, "largest solvable graph");
    verify->add_option("--jobs", verify_jobs, "instances evaluated concurrently");
    verify->add_option("--out", out_path, "write the JSON report here");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("cayleydim");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (build->parsed()) {
            if (want_dot && want_json) {
                throw std::invalid_argument("choose at most one of --dot and --json");
            }
            return run_build(n, set_text, want_dot);
        }
        if (dim->parsed()) return run_dim(n, set_text, search);
        if (classify->parsed()) return run_classify(n, set_text);
        if (recognize_cmd->parsed()) return run_recognize(n, set_text);
        if (verify->parsed()) {
            verify_config cfg;
            cfg.search = search;
            cfg.search.parallelism = 1;  // parallelism lives at the instance level here
            cfg.jobs = verify_jobs;
            return run_verify(from, to, max_size, cfg, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace dihedral
