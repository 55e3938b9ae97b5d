#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gti/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gti::SpecParseError("cannot open spec file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonArgs {
    std::string spec_path;
    std::string out_dir;
    std::string format = "json";
    long long m_max = -1;
    std::string pipeline;
    long long seed = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--spec", args.spec_path, "problem document (JSON)")->required();
    cmd->add_option("--m-max", args.m_max, "largest indicator degree");
    cmd->add_option("--pipeline", args.pipeline,
                    "auto | adapted | general | trivial_restriction | double");
    cmd->add_option("--seed", args.seed, "seed for the character solver");
    cmd->add_option("--out", args.out_dir, "output directory (default: stdout)");
    cmd->add_option("--format", args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

gti::ProblemSpec load_spec(const CommonArgs& args) {
    nlohmann::json j = nlohmann::json::parse(read_file(args.spec_path), nullptr, false);
    if (j.is_discarded()) throw gti::SpecParseError("invalid JSON in " + args.spec_path);
    // command-line flags override the document's options
    if (args.m_max > 0) j["options"]["m_max"] = args.m_max;
    if (args.seed >= 0) j["options"]["seed"] = args.seed;
    if (!args.pipeline.empty()) j["options"]["pipeline"] = args.pipeline;
    return gti::parse_problem(j);
}

void emit(const CommonArgs& args, const std::string& name, const std::string& content) {
    if (args.out_dir.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::create_directories(args.out_dir);
    std::ofstream out(std::filesystem::path(args.out_dir) / name);
    out << content;
}

void emit_table(const CommonArgs& args, const std::string& stem, const gti::IndicatorTable& table) {
    if (args.format == "csv")
        emit(args, stem + ".csv", gti::table_to_csv(table));
    else
        emit(args, stem + ".json", gti::table_to_json(table));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher Frobenius-Schur indicators of group-theoretical fusion categories"};
    app.require_subcommand(1);

    std::map<std::string, CommonArgs> args;
    for (const char* name : {"validate", "simples", "indicators", "double", "adapt",
                             "predict-twist", "index-two"}) {
        CLI::App* cmd = app.add_subcommand(name);
        add_common(cmd, args[name]);
    }

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();
    const CommonArgs& a = args[cmd->get_name()];

    try {
        gti::ProblemSpec spec = load_spec(a);
        const std::string& name = cmd->get_name();
        if (name == "validate")
            emit(a, "validate.txt", gti::cmd_validate(spec));
        else if (name == "simples")
            emit(a, "simples.json", gti::cmd_simples(spec));
        else if (name == "indicators")
            emit_table(a, "indicators", gti::cmd_indicators(spec));
        else if (name == "double")
            emit_table(a, "double", gti::cmd_double(spec));
        else if (name == "adapt")
            emit(a, "adapt.json", gti::cmd_adapt(spec));
        else if (name == "predict-twist")
            emit(a, "predict_twist.json", gti::cmd_predict_twist(spec));
        else if (name == "index-two")
            emit(a, "index_two.json", gti::cmd_index_two(spec));
        return 0;
    } catch (const gti::SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 3;
    } catch (const gti::NumericalDegeneracyError& e) {
        std::cerr << "numerical degeneracy: " << e.what() << "\n";
        return 2;
    } catch (const gti::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
