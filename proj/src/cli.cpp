#include "dpcolor/cli.hpp"

#include "dpcolor/errors.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

namespace dpc::cli {

namespace {

using io::json;

struct InstanceFlags {
    std::string graph;
    std::string lists;
    int t = 0;
    std::string matchings;
    bool random = false;
    std::uint64_t seed = 0;
};

struct Instance {
    Graph graph;
    ListAssignment lists;
    MatchingAssignment matchings;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags)
{
    cmd->add_option("graph", flags.graph, "Edge-list graph file")->required();
    auto* lists = cmd->add_option("--lists", flags.lists, "JSON list assignment");
    auto* t = cmd->add_option("--t", flags.t, "Give every vertex the list {1..t}")->check(CLI::PositiveNumber);
    lists->excludes(t);
    auto* matchings = cmd->add_option("--matchings", flags.matchings,
                                      "JSON matching assignment (default: identity matchings)");
    auto* random = cmd->add_flag("--random", flags.random, "Random maximum matchings drawn from --seed");
    matchings->excludes(random);
    cmd->add_option("--seed", flags.seed, "Seed for --random");
}

Instance load_instance(const InstanceFlags& flags)
{
    Instance inst;
    inst.graph = parse_graph(io::read_file(flags.graph));
    if (!flags.lists.empty())
        inst.lists = io::lists_from_json(inst.graph, io::parse_json(io::read_file(flags.lists)));
    else if (flags.t > 0)
        inst.lists = full_lists(inst.graph, flags.t);
    else
        throw PreconditionError("one of --lists or --t is required");
    if (!flags.matchings.empty())
        inst.matchings = io::matchings_from_json(inst.graph, io::parse_json(io::read_file(flags.matchings)));
    else if (flags.random)
        inst.matchings = random_matchings(inst.graph, inst.lists, flags.seed);
    else
        inst.matchings = identity_matchings(inst.graph, inst.lists);
    validate_instance(inst.graph, inst.lists, inst.matchings);
    return inst;
}

json instance_inputs(const InstanceFlags& flags)
{
    json in = {{"graph", flags.graph}};
    if (!flags.lists.empty())
        in["lists"] = flags.lists;
    else
        in["t"] = flags.t;
    if (!flags.matchings.empty())
        in["matchings"] = flags.matchings;
    else if (flags.random)
        in["random_seed"] = flags.seed;
    else
        in["matchings"] = "identity";
    return in;
}

std::string join(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

std::size_t min_list_size(const ListAssignment& lists)
{
    std::size_t m = lists.empty() ? 0 : lists.front().size();
    for (const auto& l : lists)
        m = std::min(m, l.size());
    return m;
}

/// Collects the RunReport and writes it on scope exit of the command.
struct Report {
    std::string command;
    json inputs = json::object();
    std::string outcome = "error";
    json certificate;
    std::string path;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int finish(int code)
    {
        if (path.empty())
            return code;
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        json doc = {{"schema_version", io::kSchemaVersion},
                    {"command", command},
                    {"inputs", inputs},
                    {"outcome", outcome},
                    {"wall_time_ms", elapsed.count()}};
        if (outcome != "error")
            doc["certificate"] = certificate;
        io::write_file(path, doc.dump(2) + "\n");
        return code;
    }
};

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, bool all, Report& report, std::ostream& out)
{
    report.inputs = {{"graph", path}, {"all", all}};
    const Graph g = parse_graph(io::read_file(path));
    const auto deg = degeneracy(g);

    json cycles = json::object();
    std::ostringstream summary;
    for (int k = 3; k <= 6; ++k) {
        auto w = find_cycle(g, k);
        summary << (k > 3 ? ", " : "") << 'C' << k << ": " << (w ? "yes" : "no");
        cycles["C" + std::to_string(k)] = w ? json(*w) : json(nullptr);
    }
    summary << "; degeneracy " << deg.degeneracy;
    const auto f53 = find_f53(g);
    summary << "; F_5^3: " << (f53 ? "found" : "none");

    out << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << '\n';
    out << summary.str() << '\n';
    for (int k = 3; k <= 6; ++k) {
        const auto& w = cycles["C" + std::to_string(k)];
        if (!w.is_null())
            out << "  C" << k << " witness: " << join(w.get<std::vector<Vertex>>()) << '\n';
    }
    out << "  degeneracy ordering: " << join(deg.ordering) << '\n';
    if (f53)
        out << "  F_5^3 witness (v1..v6): " << join({f53->v.begin(), f53->v.end()}) << '\n';

    report.certificate = {{"vertices", g.num_vertices()},
                          {"edges", g.num_edges()},
                          {"degeneracy", deg.degeneracy},
                          {"ordering", deg.ordering},
                          {"cycles", cycles},
                          {"f53", f53 ? json(f53->v) : json(nullptr)}};
    if (all) {
        const auto count = count_f53(g);
        out << "  F_5^3 count: " << count << '\n';
        report.certificate["f53_count"] = count;
    }
    report.outcome = "ok";
    return kOk;
}

int cmd_color(const InstanceFlags& flags, const std::string& method_flag, const std::string& output,
              const std::string& matchings_out, Report& report, std::ostream& out, std::ostream& err)
{
    report.inputs = instance_inputs(flags);
    report.inputs["method"] = method_flag;
    const auto inst = load_instance(flags);
    if (!matchings_out.empty())
        io::write_file(matchings_out, io::matchings_to_json(inst.graph, inst.matchings).dump(2) + "\n");

    std::string method = method_flag;
    if (method == "auto") {
        const auto lmin = min_list_size(inst.lists);
        if (lmin >= 4 && !find_cycle(inst.graph, 4))
            method = "c4free";
        else if (static_cast<int>(lmin) > degeneracy(inst.graph).degeneracy)
            method = "greedy";
        else
            method = "exact";
    }
    report.certificate = {{"method", method}};

    std::optional<Coloring> f;
    if (method == "exact") {
        f = solve_transversal(inst.graph, inst.lists, inst.matchings);
    } else if (method == "greedy") {
        f = greedy_degenerate_color(inst.graph, inst.lists, inst.matchings);
    } else {
        try {
            auto [coloring, trace] = color_planar_c4free_traced(inst.graph, inst.lists, inst.matchings);
            f = std::move(coloring);
            report.certificate["trace"] = io::trace_to_json(trace);
        } catch (const ReductionStuck& stuck) {
            const auto trace = io::trace_to_json(stuck.trace());
            report.outcome = "stuck";
            report.certificate["trace"] = trace;
            out << "stuck: " << stuck.what() << '\n';
            out << "remainder: " << trace["remainder"].dump() << '\n';
            return kStuck;
        }
    }

    if (!f) {
        report.outcome = "unsat";
        report.certificate["coloring"] = nullptr;
        out << "unsat: no DP-coloring exists (exhaustive search)\n";
        return kUnsat;
    }
    const auto violations = verify_coloring(inst.graph, inst.lists, inst.matchings, *f);
    if (!violations.empty()) {
        for (const auto& v : violations)
            err << "internal error: " << v.describe() << '\n';
        throw Error("produced coloring failed verification");
    }
    const auto doc = io::coloring_to_json(*f);
    report.outcome = "ok";
    report.certificate["coloring"] = doc;
    if (!output.empty())
        io::write_file(output, doc.dump(2) + "\n");
    out << "ok (" << method << "): verified DP-coloring of " << inst.graph.num_vertices() << " vertices\n";
    if (output.empty())
        out << doc.dump() << '\n';
    return kOk;
}

int cmd_chromatic(const std::string& path, int max_t, int max_free_edges, const std::string& output, Report& report,
                  std::ostream& out)
{
    report.inputs = {{"graph", path}, {"max_t", max_t}, {"max_free_edges", max_free_edges}};
    const Graph g = parse_graph(io::read_file(path));
    ChromaticOptions options;
    options.max_free_edges = max_free_edges;
    const auto cert = dp_chromatic(g, max_t, options);
    const auto doc = io::certificate_to_json(g, cert);
    report.certificate = doc;
    if (!output.empty())
        io::write_file(output, doc.dump(2) + "\n");
    if (cert.exceeds_max_t) {
        report.outcome = "unsat";
        out << "chi_DP > " << max_t << '\n';
        return kUnsat;
    }
    report.outcome = "ok";
    out << "chi_DP = " << cert.value << '\n';
    return kOk;
}

int cmd_verify(const InstanceFlags& flags, const std::string& coloring_path, Report& report, std::ostream& out)
{
    report.inputs = instance_inputs(flags);
    report.inputs["coloring"] = coloring_path;
    const auto inst = load_instance(flags);
    const auto f = io::coloring_from_json(inst.graph, io::parse_json(io::read_file(coloring_path)));
    const auto violations = verify_coloring(inst.graph, inst.lists, inst.matchings, f);
    json listed = json::array();
    for (const auto& v : violations) {
        out << v.describe() << '\n';
        listed.push_back(v.describe());
    }
    report.certificate = {{"violations", listed}};
    if (violations.empty()) {
        report.outcome = "ok";
        out << "ok\n";
        return kOk;
    }
    report.outcome = "unsat";
    out << violations.size() << " violation(s)\n";
    return kUnsat;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, const std::string& output, Report& report,
            std::ostream& out)
{
    report.inputs = {{"family", family}, {"n", n}};
    const Graph g = family == "tree" ? random_tree(n, seed) : generate(family, n);
    const auto text = format_graph(g);
    report.outcome = "ok";
    report.certificate = {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
    if (output.empty()) {
        out << text;
        return kOk;
    }
    io::write_file(output, text);
    out << "wrote " << output << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"DP-coloring (correspondence coloring) toolkit", "dpcolor"};
    app.require_subcommand(1);
    Report report;
    app.add_option("--report", report.path, "Write a JSON run report here");

    auto* analyze = app.add_subcommand("analyze", "Degeneracy, short cycles and F_5^3 gadgets of a graph");
    std::string analyze_graph;
    bool analyze_all = false;
    analyze->add_option("graph", analyze_graph, "Edge-list graph file")->required();
    analyze->add_flag("--all", analyze_all, "Also count every F_5^3 gadget");

    auto* color = app.add_subcommand("color", "Find a DP-coloring and verify it");
    InstanceFlags color_flags;
    std::string method = "auto", color_out, matchings_out;
    add_instance_flags(color, color_flags);
    color->add_option("--method", method, "auto | exact | greedy | c4free")
        ->check(CLI::IsMember({"auto", "exact", "greedy", "c4free"}));
    color->add_option("-o,--output", color_out, "Write the coloring JSON here");
    color->add_option("--write-matchings", matchings_out, "Write the matching assignment used");

    auto* chromatic = app.add_subcommand("chromatic", "Exact DP-chromatic number of a small graph");
    std::string chromatic_graph, chromatic_out;
    int max_t = 4;
    int max_free = ChromaticOptions{}.max_free_edges;
    chromatic->add_option("graph", chromatic_graph, "Edge-list graph file")->required();
    chromatic->add_option("--max-t", max_t, "Largest t to try")->check(CLI::PositiveNumber);
    chromatic->add_option("--max-free-edges", max_free, "Guard on |E| - |V| + components");
    chromatic->add_option("-o,--output", chromatic_out, "Write the certificate JSON here");

    auto* verify = app.add_subcommand("verify", "Check a coloring against an instance");
    InstanceFlags verify_flags;
    std::string coloring_path;
    add_instance_flags(verify, verify_flags);
    verify->add_option("--coloring", coloring_path, "JSON coloring")->required();

    auto* gen = app.add_subcommand("gen", "Write a named graph family in edge-list format");
    std::string family;
    int n = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", family, "cycle | complete | path | star | grid | wheel | prism | cube | "
                                        "octahedron | icosahedron | dodecahedral | dodecahedral-line | tree")
        ->required();
    gen->add_option("-n", n, "Family parameter");
    gen->add_option("--seed", gen_seed, "Seed for --family tree");
    std::string gen_out;
    gen->add_option("-o,--output", gen_out, "Output path (default: stdout)");

    for (auto* sub : {analyze, color, chromatic, verify, gen})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInputError;
    }

    try {
        if (analyze->parsed()) {
            report.command = "analyze";
            return report.finish(cmd_analyze(analyze_graph, analyze_all, report, out));
        }
        if (color->parsed()) {
            report.command = "color";
            return report.finish(cmd_color(color_flags, method, color_out, matchings_out, report, out, err));
        }
        if (chromatic->parsed()) {
            report.command = "chromatic";
            return report.finish(cmd_chromatic(chromatic_graph, max_t, max_free, chromatic_out, report, out));
        }
        if (verify->parsed()) {
            report.command = "verify";
            return report.finish(cmd_verify(verify_flags, coloring_path, report, out));
        }
        report.command = "gen";
        return report.finish(cmd_gen(family, n, gen_seed, gen_out, report, out));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        report.outcome = "error";
        return report.finish(kInputError);
    } catch (const io::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << '\n';
        return report.finish(kInputError);
    }
}

} // namespace dpc::cli
