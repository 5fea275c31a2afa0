#include "dpcolor/io.hpp"

#include "dpcolor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dpc::io {

namespace {

Vertex vertex_key(const Graph& g, const std::string& key)
{
    int v = -1;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || v < 0 || v >= g.num_vertices())
        throw ParseError(0, "bad vertex key '" + key + "'");
    return v;
}

Color as_color(const json& value)
{
    if (!value.is_number_integer())
        throw ParseError(0, "color must be an integer, got " + value.dump());
    return value.get<Color>();
}

} // namespace

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

ListAssignment lists_from_json(const Graph& g, const json& doc)
{
    if (!doc.is_object())
        throw ParseError(0, "lists document must be an object");
    ListAssignment lists(static_cast<std::size_t>(g.num_vertices()));
    std::vector<bool> seen(lists.size(), false);
    for (const auto& [key, value] : doc.items()) {
        const Vertex v = vertex_key(g, key);
        if (!value.is_array())
            throw ParseError(0, "list for vertex " + key + " must be an array");
        for (const auto& c : value)
            lists[v].push_back(as_color(c));
        std::sort(lists[v].begin(), lists[v].end());
        if (std::adjacent_find(lists[v].begin(), lists[v].end()) != lists[v].end())
            throw ParseError(0, "duplicate color in list of vertex " + key);
        if (lists[v].empty())
            throw ParseError(0, "empty list for vertex " + key);
        seen[v] = true;
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v])
            throw ParseError(0, "no list for vertex " + std::to_string(v));
    return lists;
}

json lists_to_json(const ListAssignment& lists)
{
    json doc = json::object();
    for (std::size_t v = 0; v < lists.size(); ++v)
        doc[std::to_string(v)] = lists[v];
    return doc;
}

MatchingAssignment matchings_from_json(const Graph& g, const json& doc)
{
    if (!doc.is_array())
        throw ParseError(0, "matchings document must be an array");
    MatchingAssignment m;
    m.pairs.resize(g.num_edges());
    std::vector<bool> seen(g.num_edges(), false);
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("u") || !entry.contains("v") || !entry.contains("pairs"))
            throw ParseError(0, "matching entry needs u, v and pairs");
        const int u = entry["u"].get<int>();
        const int v = entry["v"].get<int>();
        if (u >= v)
            throw ParseError(0, "matching entry must have u < v");
        auto id = g.edge_id(u, v);
        if (!id)
            throw ParseError(0, "matching entry for non-edge " + std::to_string(u) + "-" + std::to_string(v));
        if (seen[*id])
            throw ParseError(0, "duplicate matching entry for edge " + std::to_string(u) + "-" + std::to_string(v));
        seen[*id] = true;
        for (const auto& pair : entry["pairs"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError(0, "pair must be [a, b]");
            m.pairs[*id].emplace_back(as_color(pair[0]), as_color(pair[1]));
        }
        std::sort(m.pairs[*id].begin(), m.pairs[*id].end());
    }
    for (std::size_t id = 0; id < seen.size(); ++id)
        if (!seen[id])
            throw ParseError(0, "no matching entry for edge " + std::to_string(g.edges()[id].u) + "-"
                                    + std::to_string(g.edges()[id].v));
    return m;
}

json matchings_to_json(const Graph& g, const MatchingAssignment& m)
{
    json doc = json::array();
    for (std::size_t id = 0; id < g.num_edges(); ++id) {
        json pairs = json::array();
        for (auto [a, b] : m.pairs[id])
            pairs.push_back({a, b});
        doc.push_back({{"u", g.edges()[id].u}, {"v", g.edges()[id].v}, {"pairs", pairs}});
    }
    return doc;
}

Coloring coloring_from_json(const Graph& g, const json& doc)
{
    if (!doc.is_object())
        throw ParseError(0, "coloring document must be an object");
    Coloring f(static_cast<std::size_t>(g.num_vertices()));
    for (const auto& [key, value] : doc.items())
        f[vertex_key(g, key)] = as_color(value);
    return f;
}

json coloring_to_json(const Coloring& f)
{
    json doc = json::object();
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v])
            doc[std::to_string(v)] = *f[v];
    return doc;
}

SignedGraph parse_signed_graph(std::string_view text)
{
    // Split the sign column off and reuse the plain parser for the rest.
    std::string plain;
    std::vector<std::pair<std::pair<Vertex, Vertex>, int>> signed_edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, s, extra;
        fields >> a;
        if (a.empty() || a.front() == '#') {
            plain += '\n';
            continue;
        }
        if (!header) {
            header = true;
            plain += line + '\n';
            continue;
        }
        fields >> b >> s;
        if (b.empty() || s.empty() || (fields >> extra))
            throw ParseError(line_no, "expected \"u v s\"");
        int sign = 0;
        if (s == "+1" || s == "1")
            sign = 1;
        else if (s == "-1")
            sign = -1;
        else
            throw ParseError(line_no, "sign must be +1 or -1, got '" + s + "'");
        plain += a + ' ' + b + '\n';
        int u = 0, v = 0;
        std::from_chars(a.data(), a.data() + a.size(), u);
        std::from_chars(b.data(), b.data() + b.size(), v);
        signed_edges.push_back({{u, v}, sign});
    }
    SignedGraph sg{parse_graph(plain), {}};
    sg.signs.assign(sg.graph.num_edges(), 1);
    for (const auto& [e, sign] : signed_edges)
        sg.signs[*sg.graph.edge_id(e.first, e.second)] = sign;
    return sg;
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

json certificate_to_json(const Graph& g, const ChromaticCertificate& cert)
{
    auto edge_list = [](const std::vector<Edge>& edges) {
        json out = json::array();
        for (const auto& e : edges)
            out.push_back({e.u, e.v});
        return out;
    };
    json doc = {
        {"schema_version", kSchemaVersion},
        {"value", cert.value},
        {"exceeds_max_t", cert.exceeds_max_t},
        {"max_t", cert.max_t},
        {"forest", edge_list(cert.forest)},
        {"free_edges", edge_list(cert.free_edges)},
        {"assignments_searched", cert.assignments_searched},
        {"exhaustive", !cert.exceeds_max_t},
    };
    if (cert.failing) {
        doc["failing_t"] = *cert.failing_t;
        doc["failing_matchings"] = matchings_to_json(g, *cert.failing);
    } else {
        doc["failing_t"] = nullptr;
        doc["failing_matchings"] = nullptr;
    }
    return doc;
}

json trace_to_json(const ReductionTrace& trace)
{
    json steps = json::array();
    for (const auto& step : trace.steps) {
        if (const auto* low = std::get_if<LowDegreeStep>(&step)) {
            steps.push_back({{"kind", "low_degree"}, {"vertex", low->vertex}, {"neighbors", low->neighbors}});
            continue;
        }
        const auto& gadget = std::get<GadgetStep>(step);
        json external = json::array();
        for (const auto& ext : gadget.external)
            external.push_back(ext);
        steps.push_back({{"kind", "gadget"}, {"witness", gadget.witness.v}, {"external", external}});
    }
    json doc = {{"steps", steps}, {"stuck", trace.stuck}};
    if (trace.stuck) {
        json edges = json::array();
        for (const auto& e : trace.remainder.edges())
            edges.push_back({trace.remainder_ids[e.u], trace.remainder_ids[e.v]});
        doc["remainder"] = {{"vertices", trace.remainder_ids}, {"edges", edges}};
    }
    return doc;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << contents;
}

} // namespace dpc::io
