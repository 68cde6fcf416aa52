#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <vector>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "cutcx/homology.hpp"
#include "cutcx/io.hpp"
#include "cutcx/parallel.hpp"
#include "cutcx/shelling.hpp"
#include "cutcx/wn_shelling.hpp"

namespace cutcx::cli {

namespace {

using nlohmann::json;

json to_json(VertexSet s) { return s.to_vector(); }

/// A complex plus where it came from.
struct Input {
    std::string source;   // "W_9", a graph path, or a complex path
    int n = 0;            // ground-set size
    bool is_wn = false;   // Δ_k(W_n) built in-process
    SimplicialComplex complex = SimplicialComplex::void_complex(0);
    /// Facet lines exactly as read from a --complex file.
    std::optional<std::vector<VertexSet>> file_order;
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return in;
}

/// Reads with `fn`, prefixing parse errors with the file name.
template <typename Fn>
auto read_file(const std::string& path, Fn&& fn)
{
    std::ifstream in = open_input(path);
    try {
        return fn(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::vector<VertexSet> read_order_file(const std::string& path, int& n)
{
    return read_file(path, [&](std::istream& in) { return read_facet_list(in, n); });
}

void check_k(int k, int n)
{
    if (k < 1 || k > n)
        throw UsageError("--k " + std::to_string(k) + " must lie in [1, " + std::to_string(n) + "]");
}

/// Complexes named by the config: one per n, or a single file-based one.
std::vector<Input> inputs(const RunConfig& config)
{
    if (config.graph_path && config.complex_path)
        throw UsageError("--graph and --complex are mutually exclusive");
    if ((config.graph_path || config.complex_path) && config.n_given)
        throw UsageError("--n cannot be combined with --graph or --complex");

    std::vector<Input> out;
    if (config.complex_path) {
        Input in;
        in.source = *config.complex_path;
        int n = 0;
        in.file_order = read_order_file(*config.complex_path, n);
        in.n = n;
        in.complex = SimplicialComplex::from_facets(n, *in.file_order);
        out.push_back(std::move(in));
        return out;
    }
    if (config.graph_path) {
        const Graph g = read_file(*config.graph_path, [](std::istream& s) { return read_edge_list(s); });
        check_k(config.k, g.vertex_count());
        Input in;
        in.source = *config.graph_path;
        in.n = g.vertex_count();
        in.complex = cut_complex(g, config.k);
        out.push_back(std::move(in));
        return out;
    }
    for (int n = config.n_first; n <= config.n_last; ++n) {
        check_k(config.k, n);
        Input in;
        in.source = "W_" + std::to_string(n);
        in.n = n;
        in.is_wn = true;
        in.complex = cut_complex(squared_cycle(n), config.k);
        out.push_back(std::move(in));
    }
    return out;
}

std::string order_name(const RunConfig& config, const Input& in)
{
    if (config.order)
        return *config.order;
    if (in.is_wn)
        return "prec";
    return in.file_order ? "as-given" : "canonical";
}

/// The facet order requested for `in`.
std::vector<VertexSet> resolve_order(const RunConfig& config, const Input& in)
{
    const std::string name = order_name(config, in);
    if (name == "prec" || name == "reversed") {
        if (!in.is_wn || config.k != 3)
            throw UsageError("--order " + name + " is only defined for the 3-cut complex of W_n");
        if (in.n < 9)
            throw UsageError("--order " + name + " needs n >= 9");
        auto order = wn::shelling_order(in.n);
        if (name == "reversed")
            std::reverse(order.begin(), order.end());
        return order;
    }
    if (name.rfind("file:", 0) == 0) {
        int n = 0;
        auto order = read_order_file(name.substr(5), n);
        if (n != in.n)
            throw UsageError("order file has n = " + std::to_string(n) + " but the complex has n = " +
                             std::to_string(in.n));
        return order;
    }
    if (name == "as-given" && in.file_order)
        return *in.file_order;
    if (name == "canonical")
        return in.complex.facets();
    throw UsageError("unknown --order '" + name + "' (expected prec, reversed or file:<path>)");
}

void require_single(const std::vector<Input>& ins, Command c)
{
    if (ins.size() != 1)
        throw UsageError(command_name(c) + " writes one complex; pass a single --n");
}

int run_build(const RunConfig& config, std::ostream& out, bool use_order)
{
    const auto ins = inputs(config);
    require_single(ins, config.command);
    const Input& in = ins.front();
    const std::vector<VertexSet> facets =
        use_order && config.order ? resolve_order(config, in) : in.complex.facets();
    if (config.format == Format::json_lines) {
        json facet_list = json::array();
        for (VertexSet f : facets)
            facet_list.push_back(to_json(f));
        out << json{{"source", in.source}, {"n", in.n}, {"k", config.k}, {"facets", facet_list}}.dump() << '\n';
    } else {
        write_facet_list(out, in.n, facets);
    }
    return kExitOk;
}

int run_betti(const RunConfig& config, std::ostream& out)
{
    const auto ins = inputs(config);
    const unsigned jobs = resolve_jobs(config.jobs);
    for (const Input& in : ins) {
        if (in.complex.is_void())
            throw UsageError(in.source + ": the void complex has no reduced homology");
        const BettiVector b = betti(in.complex, config.field, jobs);
        if (config.format == Format::json_lines) {
            out << json{{"source", in.source},
                        {"n", in.n},
                        {"k", config.k},
                        {"field", config.field.name()},
                        {"dimension", dim(in.complex)},
                        {"betti", b.values}}
                       .dump()
                << '\n';
        } else {
            out << in.source << " (n=" << in.n << ", dim " << dim(in.complex) << ") " << to_string(b) << '\n';
        }
        out.flush();
    }
    return kExitOk;
}

int run_shelling(const RunConfig& config, std::ostream& out)
{
    const auto ins = inputs(config);
    const unsigned jobs = resolve_jobs(config.jobs);
    bool all_valid = true;
    for (const Input& in : ins) {
        const auto order = resolve_order(config, in);
        if (!is_pure(in.complex))
            throw UsageError(in.source + ": shellings are only checked for pure complexes");
        const ShellingReport r = verify_shelling(in.complex, order, jobs);
        all_valid = all_valid && r.valid;
        const std::string name = order_name(config, in);
        if (config.format == Format::json_lines) {
            json row{{"source", in.source},   {"n", in.n},
                     {"k", config.k},         {"order", name},
                     {"facets", order.size()}, {"valid", r.valid},
                     {"failures", r.failure_count}, {"spanning", r.valid ? json(r.spanning_count()) : json(nullptr)},
                     {"witness", nullptr}};
            if (r.witness) {
                const auto [i, j] = *r.witness;
                row["witness"] = json{{"earlier", i},
                                      {"later", j},
                                      {"earlier_facet", to_json(order[i - 1])},
                                      {"later_facet", to_json(order[j - 1])},
                                      {"removable", to_json(r.removable[j - 1])}};
            }
            out << row.dump() << '\n';
        } else {
            out << in.source;
            if (!in.file_order)
                out << " k=" << config.k;
            out << " order=" << name << ": facets=" << order.size()
                << " valid=" << (r.valid ? "yes" : "no") << " failures=" << r.failure_count;
            if (r.valid)
                out << " spanning=" << r.spanning_count();
            out << '\n';
            if (r.witness) {
                const auto [i, j] = *r.witness;
                out << "  witness: earlier=" << i << " later=" << j << '\n'
                    << "    facet " << j << " " << to_string(order[j - 1]) << " has removable set "
                    << to_string(r.removable[j - 1]) << "\n"
                    << "    contained in facet " << i << " " << to_string(order[i - 1]) << '\n';
            }
        }
        out.flush();
    }
    return all_valid ? kExitOk : kExitCheckFailed;
}

json breakdown_json(const wn::SpanningBreakdown& b) { return json{{"s1", b.s1}, {"s2", b.s2}, {"s3", b.s3}}; }

std::string conjecture_row(const RunConfig& config, const wn::ConjectureReport& r)
{
    std::ostringstream row;
    if (config.format == Format::json_lines) {
        json j{{"n", r.n},
               {"m", r.m},
               {"facet_count", r.facet_count},
               {"dimension", r.dimension},
               {"shelling_valid", r.shelling_valid},
               {"witness", nullptr},
               {"spanning_from_order", r.spanning_from_order},
               {"spanning_from_S", r.spanning_from_s},
               {"spanning_from_formula", r.spanning_from_formula},
               {"spanning_sets_agree", r.spanning_sets_agree},
               {"breakdown", breakdown_json(r.breakdown)},
               {"breakdown_from_S", breakdown_json(r.breakdown_from_s)},
               {"homology_skipped", r.homology_skipped},
               {"betti", nullptr},
               {"all_pass", r.all_pass}};
        if (r.witness)
            j["witness"] = json{{"earlier", r.witness->earlier}, {"later", r.witness->later}};
        if (r.betti) {
            j["field"] = r.betti->field.name();
            j["betti"] = r.betti->values;
        }
        row << j.dump() << '\n';
        return row.str();
    }
    std::string top = "-";
    if (r.homology_skipped)
        top = "skipped";
    else if (r.betti)
        top = std::to_string(r.betti->at(r.n - 4));
    row << std::setw(4) << r.n << std::setw(8) << r.facet_count << std::setw(10) << (r.shelling_valid ? "yes" : "no")
        << std::setw(12) << r.spanning_from_order << std::setw(12) << r.spanning_from_s << std::setw(18)
        << r.spanning_from_formula << std::setw(11) << top << std::setw(6) << (r.all_pass ? "yes" : "no") << '\n';
    if (r.witness)
        row << "      witness: earlier=" << r.witness->earlier << " later=" << r.witness->later << '\n';
    return row.str();
}

int run_conjecture(const RunConfig& config, std::ostream& out)
{
    if (config.k != 3)
        throw UsageError("conjecture checks the 3-cut complex only; got --k " + std::to_string(config.k));
    if (config.graph_path || config.complex_path)
        throw UsageError("conjecture works on W_n only; drop --graph/--complex");
    if (config.n_first < 9)
        throw UsageError("conjecture needs n >= 9");
    const std::string order = config.order.value_or("prec");
    if (order.rfind("file:", 0) == 0 && config.n_first != config.n_last)
        throw UsageError("--order file:<path> needs a single --n");
    if (order != "prec" && order != "reversed" && order.rfind("file:", 0) != 0)
        throw UsageError("unknown --order '" + order + "' (expected prec, reversed or file:<path>)");

    const std::size_t count = static_cast<std::size_t>(config.n_last - config.n_first + 1);
    const unsigned jobs = resolve_jobs(config.jobs);
    const unsigned outer = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

    wn::ConjectureOptions options;
    options.field = config.field;
    options.with_homology = config.homology;
    options.homology_max_n = config.homology_max_n;
    options.jobs = std::max(1u, jobs / std::max(1u, outer));

    if (config.format == Format::text)
        out << "   n  facets  shelling  spanning(L)  spanning(S)  spanning(formula)  betti_top  pass\n";

    // Rows are printed in ascending n as soon as every smaller n is done.
    std::vector<std::optional<std::string>> rows(count);
    std::size_t printed = 0;
    bool all_pass = true;
    std::mutex mutex;
    parallel_for(count, outer, [&](std::size_t i) {
        const int n = config.n_first + static_cast<int>(i);
        Input in;
        in.n = n;
        in.is_wn = true;
        RunConfig single = config;
        single.order = order;
        const auto report = wn::verify_conjecture_with_order(n, resolve_order(single, in), options);
        const std::string text = conjecture_row(config, report);
        std::lock_guard lock(mutex);
        all_pass = all_pass && report.all_pass;
        rows[i] = text;
        while (printed < count && rows[printed]) {
            out << *rows[printed];
            ++printed;
        }
        out.flush();
    });
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

Command parse_command(const std::string& name)
{
    if (name == "build")
        return Command::build;
    if (name == "betti")
        return Command::betti;
    if (name == "shelling")
        return Command::shelling;
    if (name == "conjecture")
        return Command::conjecture;
    if (name == "export")
        return Command::export_;
    throw UsageError("unknown command '" + name + "'");
}

std::string command_name(Command c)
{
    switch (c) {
    case Command::build: return "build";
    case Command::betti: return "betti";
    case Command::shelling: return "shelling";
    case Command::conjecture: return "conjecture";
    case Command::export_: return "export";
    }
    return "?";
}

void parse_n_range(const std::string& text, RunConfig& config)
{
    const auto number = [&](std::string_view s) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw UsageError("bad --n '" + text + "' (expected N or A..B)");
        return value;
    };
    const std::string_view view(text);
    if (const auto dots = view.find(".."); dots != std::string_view::npos) {
        config.n_first = number(view.substr(0, dots));
        config.n_last = number(view.substr(dots + 2));
    } else {
        config.n_first = config.n_last = number(view);
    }
    if (config.n_first > config.n_last)
        throw UsageError("empty --n range '" + text + "'");
    if (config.n_first < 3 || config.n_last > kMaxVertices)
        throw UsageError("--n must lie in [3, " + std::to_string(kMaxVertices) + "]");
    config.n_given = true;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::build: return run_build(config, out, false);
        case Command::export_: return run_build(config, out, true);
        case Command::betti: return run_betti(config, out);
        case Command::shelling: return run_shelling(config, out);
        case Command::conjecture: return run_conjecture(config, out);
        }
    } catch (const UsageError& e) {
        err << "cutcx: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "cutcx: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "cutcx: internal check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace cutcx::cli
