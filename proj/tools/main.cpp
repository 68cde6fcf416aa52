#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv)
{
    using namespace cutcx::cli;

    CLI::App app{"Cut complexes of graphs: build, homology, shellings"};
    app.set_help_flag("-h,--help", "Print this help and exit");

    std::string command;
    std::string n_text;
    std::string field = "gf2";
    std::string format = "text";
    std::string order;
    std::string out_path;
    RunConfig config;

    app.add_option("command", command, "build | betti | shelling | conjecture | export")
        ->required()
        ->check(CLI::IsMember({"build", "betti", "shelling", "conjecture", "export"}));
    app.add_option("--n", n_text, "Vertex count of W_n, or a range A..B");
    app.add_option("--k", config.k, "Cut size k")->capture_default_str();
    app.add_option("--field", field, "Coefficient field")
        ->check(CLI::IsMember({"gf2", "gf3", "gf5", "rational"}))
        ->capture_default_str();
    app.add_flag("--homology", config.homology, "Compute reduced Betti numbers in conjecture");
    app.add_option("--homology-max-n", config.homology_max_n, "Skip homology above this n")->capture_default_str();
    app.add_option("--order", order, "Facet order: prec | reversed | file:<path>");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json-lines"}))
        ->capture_default_str();
    app.add_option("--jobs", config.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--out", out_path, "Write results here instead of stdout");
    app.add_option("--graph", config.graph_path, "Edge-list file used instead of W_n");
    app.add_option("--complex", config.complex_path, "Facet file used instead of a cut complex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        config.command = parse_command(command);
        if (!n_text.empty())
            parse_n_range(n_text, config);
        config.field = cutcx::Field::parse(field);
        config.format = format == "json-lines" ? Format::json_lines : Format::text;
        if (!order.empty())
            config.order = order;
    } catch (const std::exception& e) {
        std::cerr << "cutcx: " << e.what() << '\n';
        return kExitUsage;
    }

    if (out_path.empty())
        return run(config, std::cout, std::cerr);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cutcx: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    return run(config, out, std::cerr);
}
