#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulercalc/cli/runner.hpp"

namespace ec = eulercalc;
namespace cli = eulercalc::cli;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli::SchemaError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ec::MalformedInput("cannot write " + path);
    out << text;
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed, std::size_t jobs,
            const std::string& out, bool timing) {
    cli::Scenario sc;
    try {
        sc = cli::parse_scenario(read_file(scenario_path));
    } catch (const cli::json::parse_error& e) {
        std::cerr << scenario_path << ": parse error: " << e.what() << "\n";
        return 2;
    } catch (const ec::Error& e) {
        std::cerr << scenario_path << ": " << e.what() << "\n";
        return 2;
    }
    if (seed) sc.seed = *seed;
    cli::Report rep;
    try {
        rep = cli::run(sc, jobs);
    } catch (const ec::Error& e) {
        std::cerr << scenario_path << ": " << e.what() << "\n";
        return 2;
    }
    write_output(out, rep.to_json(timing).dump(2) + "\n");
    std::cerr << sc.name << ": " << rep.count("pass") << " pass, " << rep.count("fail") << " fail, "
              << rep.count("error") << " error\n";
    for (const auto& r : rep.results)
        if (r.status != "pass")
            std::cerr << "  " << r.status << " " << r.id << (r.message.empty() ? "" : ": " + r.message) << "\n";
    return rep.exit_code();
}

int cmd_eval(const std::string& op, const std::vector<std::string>& args, const std::string& scenario_path) {
    cli::Environment env;
    if (!scenario_path.empty()) {
        try {
            cli::load_definitions(env, cli::json::parse(read_file(scenario_path)));
        } catch (const std::exception& e) {
            std::cerr << scenario_path << ": " << e.what() << "\n";
            return 2;
        }
    }
    cli::Evaluator ev(env);
    try {
        std::vector<cli::Value> values;
        for (const auto& a : args) values.push_back(ev.evaluate_arg(a));
        std::cout << cli::value_to_json(ev.call(op, values)).dump() << "\n";
    } catch (const ec::InternalInconsistency& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "eval " << op << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructible-function calculus on simplicial models"};
    app.require_subcommand(1);

    std::string scenario, out, op, name;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    bool timing = false;
    std::vector<std::string> args;

    auto* run = app.add_subcommand("run", "run a scenario and write a report");
    run->add_option("--scenario", scenario, "scenario JSON file")->required();
    auto* seed_opt = run->add_option("--seed", seed, "64-bit seed for randomized checks");
    run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    run->add_option("--out", out, "report path (default: stdout)");
    run->add_flag("--timing", timing, "include per-check elapsed_ms");

    auto* eval = app.add_subcommand("eval", "evaluate one operation");
    eval->add_option("--op", op, "operation name")->required();
    // Arguments are taken verbatim (CLI11 would split "[0,1]" into a list).
    bool args_flag = false;
    eval->add_flag("--args", args_flag, "arguments follow: names, integers or JSON");
    eval->allow_extras();
    eval->add_option("--scenario", scenario, "scenario whose definitions are loaded");
    bool list_ops = false;
    eval->add_flag("--list", list_ops, "list operation names");

    auto* models = app.add_subcommand("models", "inspect the model registry");
    models->require_subcommand(1);
    auto* list = models->add_subcommand("list", "summary of registry entries");
    auto* exp = models->add_subcommand("export", "registry as scenario definitions");
    exp->add_option("--name", name, "export one entry and its dependencies");
    exp->add_option("--out", out, "output path (default: stdout)");

    // --list makes --op optional
    for (auto* o : eval->get_options())
        if (o->get_name() == "--op") o->required(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            std::optional<std::uint64_t> s;
            if (seed_opt->count()) s = seed;
            return cmd_run(scenario, s, jobs, out, timing);
        }
        if (*eval) {
            if (list_ops) {
                cli::Environment env;
                for (const auto& n : cli::Evaluator(env).op_names()) std::cout << n << "\n";
                return 0;
            }
            if (op.empty()) {
                std::cerr << "eval: --op is required\n";
                return 2;
            }
            args = eval->remaining();
            return cmd_eval(op, args, scenario);
        }
        if (*list) {
            std::cout << cli::models_list(ec::models::registry());
            return 0;
        }
        if (*exp) {
            write_output(out, cli::export_registry(ec::models::registry(), name).dump(2) + "\n");
            return 0;
        }
    } catch (const ec::InternalInconsistency& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
